// Command-level results: a structured tree, a text rendering and a headline
// number, shared by the C API and the tests.
#ifndef ORBILEF_SUMMARY_HPP_
#define ORBILEF_SUMMARY_HPP_

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "orbilef/lefschetz.hpp"
#include "orbilef/scene.hpp"

namespace orbilef {

struct Summary {
  nlohmann::json data;
  std::string text;
  Rational headline;
};

Summary summarize(const LefschetzReport& report);

// Full pipeline for either kind of scene.
Summary lefschetz_summary(const SceneFile& scene, std::uint64_t seed);

// Enumerated elements and the isotropy of each fixed orbit (geometric), or
// classes and twisted classes with their centralizers (finite-group).
Summary group_summary(const SceneFile& scene);

// rep_json: {"dimension": n, "generators": {label: matrix}} or {label: matrix}.
// intertwiner_json: a square matrix.
Summary character_summary(const GroupPtr& g, const std::string& rep_json,
                          const std::string& intertwiner_json, std::uint64_t seed);

// The three numbers of the finite-group identity.
Summary burnside_summary(const GroupPtr& g, const GroupAutomorphism& zeta, std::uint64_t seed);

Summary model_index_summary(int truncation);

} // namespace orbilef

#endif // ORBILEF_SUMMARY_HPP_
