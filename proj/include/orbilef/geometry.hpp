// Proper cocompact actions by affine isometries of R^n, covariant pairs
// (phi, zeta) and fixed-orbit discovery.
#ifndef ORBILEF_GEOMETRY_HPP_
#define ORBILEF_GEOMETRY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "orbilef/group.hpp"
#include "orbilef/orientation.hpp"
#include "orbilef/words.hpp"

namespace orbilef {

struct GeometricTolerances {
  double point = 1e-9;           // fixed-point, stabilizer and L-set residuals
  double dedup = 1e-7;           // element and orbit identification
  double transversality = 1e-8;  // minimum |det(I - J)|
  double bisection = 1e-12;      // root residual target
  double breakpoint = 1e-6;      // refusal margin around non-smooth points
  double covariance = 1e-8;      // covariance residual bound
  double domain_slack = 1e-9;    // enlargement of the fundamental domain
  int max_elements = 20000;      // ExplosionGuard
  int bisection_grid = 64;       // samples per smooth piece
  int min_bisection_grid = 16;   // below this a MissedRootRisk warning is issued

  bool operator==(const GeometricTolerances&) const = default;
};

// x -> Q x + t
struct AffineIsometry {
  Matrix linear;
  Vector translation;
  Word word;

  static AffineIsometry identity(int dim);
  Vector apply(const Vector& x) const { return linear * x + translation; }
  // (this o rhs)(x) = this(rhs(x))
  AffineIsometry compose(const AffineIsometry& rhs) const;
  AffineIsometry inverse() const;
  double distance(const AffineIsometry& o) const;
};

struct Box {
  Vector lo;
  Vector hi;
  bool contains(const Vector& x, double slack = 0) const;
  bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

class GeometricGroup {
public:
  // Enumerates all elements with translation norm <= radius; words are
  // explored up to radius plus one generator step.  Throws ValidationError
  // for non-isometric generators, ExplosionGuard past tol.max_elements.
  GeometricGroup(int dim, std::vector<std::string> labels,
                 std::vector<AffineIsometry> generators, Box domain, double radius,
                 GeometricTolerances tol = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<AffineIsometry>& generators() const { return generators_; }
  const Box& domain() const { return domain_; }
  double radius() const { return radius_; }
  const GeometricTolerances& tolerances() const { return tol_; }
  // Largest generator translation norm; the radius certificate step.
  double generator_step() const;

  // Breadth-first order; element 0 is the identity.
  const std::vector<AffineIsometry>& elements() const { return elements_; }
  std::optional<std::size_t> find(const AffineIsometry& g) const;
  AffineIsometry evaluate(const Word& w) const;
  std::string name(std::size_t element) const;

  GeometricGroup with_radius(double radius) const;

private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<AffineIsometry> generators_;
  Box domain_;
  double radius_;
  GeometricTolerances tol_;
  std::vector<AffineIsometry> elements_;
  std::unordered_multimap<std::size_t, std::size_t> buckets_;
};

std::vector<AffineIsometry> enumerate_elements(const GeometricGroup& g);

struct AffineMap {
  Matrix linear;
  Vector translation;
};

// Cubic Hermite data: value and derivative at each knot.
struct HermiteKnot {
  double x;
  double value;
  double derivative;
  bool operator==(const HermiteKnot&) const = default;
};

// A map on [knots.front().x, knots.back().x], extended to R by covariance.
struct Piecewise1D {
  std::vector<HermiteKnot> knots;
};

using PhiMap = std::variant<AffineMap, Piecewise1D>;

enum class Side { Any, Left, Right };

struct PhiValue {
  Vector value;
  Matrix jacobian;
};

class CovariantPair {
public:
  // zeta maps each generator label to a word.  Validates the homomorphism
  // property along the Cayley graph (NotAHomomorphism), injectivity on the
  // enumerated set (NotBijective) and the covariance identity
  // phi(zeta(g) x) = g phi(x) (ValidationError).
  CovariantPair(GeometricGroup group, PhiMap phi, std::map<std::string, Word> zeta);

  const GeometricGroup& group() const { return group_; }
  const PhiMap& phi() const { return phi_; }
  const std::map<std::string, Word>& zeta_words() const { return zeta_words_; }
  bool is_piecewise() const { return std::holds_alternative<Piecewise1D>(phi_); }

  AffineIsometry zeta(const AffineIsometry& g) const;
  // zeta of enumerated element i.
  const AffineIsometry& zeta_of(std::size_t i) const { return zeta_images_[i]; }
  // Enumerated g with zeta(g) == target.
  std::optional<std::size_t> zeta_preimage(const AffineIsometry& target) const;

  double covariance_residual() const { return covariance_residual_; }

  // For piecewise maps, writes x = zeta(m) y with y in the map's domain and
  // returns m phi(y); m ranges over a ball large enough for every point the
  // fixed-point search evaluates.  Side::Any requires both one-sided
  // derivatives to agree (NonDifferentiable otherwise).  OutOfReach if no
  // folding element exists.
  PhiValue evaluate(const Vector& x, Side side = Side::Any) const;

  // Breakpoints of the extended piecewise map in [lo, hi]; empty for affine.
  std::vector<double> breakpoints(double lo, double hi) const;

private:
  PhiValue evaluate_piecewise(double x, Side side) const;
  void build_folding();
  double compute_covariance_residual() const;

  GeometricGroup group_;
  PhiMap phi_;
  std::map<std::string, Word> zeta_words_;
  std::vector<AffineIsometry> zeta_generators_;
  std::vector<AffineIsometry> zeta_images_;
  std::unordered_multimap<std::size_t, std::size_t> zeta_buckets_;
  // Piecewise maps: phi(x) = fold_to_[i] phi(fold_from_[i] x).
  std::vector<AffineIsometry> fold_from_;
  std::vector<AffineIsometry> fold_to_;
  double covariance_residual_ = 0;
};

PhiValue evaluate_phi(const CovariantPair& pair, const Vector& x);

struct GeometricFixedPoint {
  Vector p;
  std::size_t element;  // index into group().elements(); phi(g p) = p
  Matrix jacobian;      // d(phi o g)(p)
  double margin;        // |det(I - jacobian)|
  double residual;      // |phi(g p) - p|
};

struct FixedPointSearch {
  std::vector<GeometricFixedPoint> representatives;  // one per fixed orbit
  std::vector<std::string> warnings;
};

// Throws TangencyDetected, NonDifferentiable.
FixedPointSearch find_fixed_points(const CovariantPair& pair);

// Elements fixing p, as an abstract group.  elements[k] is the enumerated
// index of abstract element k; elements[0] is the identity.
struct PointStabilizer {
  GroupPtr group;
  std::vector<std::size_t> elements;
};

// Throws NotClosed if the radius truncates the stabilizer.
PointStabilizer point_stabilizer(const GeometricGroup& g, const Vector& p);

struct CosetSet {
  std::vector<std::size_t> elements;  // all g with phi(g p) = p
  std::size_t representative;         // g_p: shortest word, then enumeration order
};

// L_p = {g : phi(g p) = p}; verified to be g_p K_p (CosetMismatch otherwise).
CosetSet L_set(const CovariantPair& pair, const Vector& p, const PointStabilizer& stab);

} // namespace orbilef

#endif // ORBILEF_GEOMETRY_HPP_
