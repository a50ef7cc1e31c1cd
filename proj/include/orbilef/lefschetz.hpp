// Local fixed-orbit data and the assembled orbifold Lefschetz number.
#ifndef ORBILEF_LEFSCHETZ_HPP_
#define ORBILEF_LEFSCHETZ_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbilef/characters.hpp"
#include "orbilef/geometry.hpp"
#include "orbilef/group.hpp"
#include "orbilef/orientation.hpp"
#include "orbilef/rational.hpp"

namespace orbilef {

// Everything the local formula needs at one fixed orbit p, expressed on the
// isotropy group K = K_p.  Elements of L_p are written g_p k with k in K.
struct LocalInput {
  int dim = 0;
  GroupPtr stabilizer;                // K_p
  std::vector<Matrix> linear_parts;   // rho(k), one per element of K_p
  std::vector<Matrix> jacobians;      // d(phi o g_p k)(p), one per element of K_p
  std::vector<std::string> coset_names;  // name of g_p k
  // k -> g_p^-1 zeta(k) g_p.  Twisted conjugation on L_p becomes
  // k -> twist(h) k h^-1 on K_p.
  std::vector<Element> twist;
};

struct CharacterValue {
  std::string element;
  int value;
  bool operator==(const CharacterValue&) const = default;
};

struct TwistedOrbitDatum {
  std::string representative;            // g_i
  std::vector<std::string> orbit;
  std::vector<std::string> stabilizer;   // Gamma_{p,i}
  Matrix intertwiner;                    // W = I - d(phi o g_i)(p)
  double commutation_residual = 0;
  std::vector<CharacterValue> character; // per element of Gamma_{p,i}
  Rational average;

  bool operator==(const TwistedOrbitDatum& o) const;
};

struct FixedOrbitDatum {
  Vector point;
  std::vector<std::string> stabilizer;   // K_p
  std::string coset_representative;      // g_p
  std::vector<std::string> coset;        // L_p
  std::vector<TwistedOrbitDatum> orbits;
  Rational contribution;

  bool operator==(const FixedOrbitDatum& o) const;
};

// Twisted orbits of K_p on L_p, orientation characters and their averages.
// Throws NotIntertwiner, SingularIntertwiner, AmbiguousSign.
FixedOrbitDatum local_contribution(const LocalInput& in, const Vector& point);

struct Diagnostics {
  double radius = 0;
  double certification_radius = 0;
  bool radius_certified = false;
  double covariance_residual = 0;
  std::int64_t element_count = 0;
  GeometricTolerances tolerances;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> warnings;

  bool operator==(const Diagnostics&) const = default;
};

struct LefschetzReport {
  std::string kind = "lefschetz";     // "lefschetz" or "finite-group"
  nlohmann::json scene;               // echo of the input scene
  std::vector<FixedOrbitDatum> orbits;
  Rational total;
  Diagnostics diagnostics;
  // Finite-group cross-checks (kind == "finite-group").
  std::int64_t dual_fixed_count = 0;
  Rational centralizer_average;
  std::int64_t twisted_class_count = 0;

  bool operator==(const LefschetzReport&) const = default;
};

// The LocalInput of a geometric fixed orbit.
LocalInput local_input(const CovariantPair& pair, const GeometricFixedPoint& fp,
                       PointStabilizer* stab_out = nullptr);

// Runs fixed-point search, builds every orbit datum, sums, and certifies that
// one more generator step of radius finds the same orbits.  Throws
// NonIntegerTotal if the sum is not an integer.
LefschetzReport lefschetz_number(const CovariantPair& pair);

// X = point: one orbit, K_p = L_p = G, empty intertwiners.  The total is the
// number of zeta-twisted classes; the report also carries the dual fixed
// count and the averaged twisted-centralizer size.  Throws Internal if the
// three disagree.
LefschetzReport finite_case_lefschetz(const CharacterTable& table, const GroupAutomorphism& zeta);

enum class ReportFormat { Text, Structured };

std::string render_report(const LefschetzReport& report, ReportFormat format);
nlohmann::json report_to_json(const LefschetzReport& report);
LefschetzReport report_from_json(const nlohmann::json& j);

} // namespace orbilef

#endif // ORBILEF_LEFSCHETZ_HPP_
