// Scene files: JSON documents describing a covariant pair on R^n, or a finite
// group with an automorphism.
//
// Geometric scene:
//   {
//     "name": "dihedral_ex1", "mode": "geometric", "dimension": 1,
//     "generators": [{"label": "u", "matrix": [[-1]], "translation": [0]}, ...],
//     "fundamental_domain": {"min": [0], "max": [0.5]},
//     "enumeration_radius": 4,
//     "phi": {"affine": {"matrix": [[-1]], "translation": [-0.5]}},
//        or {"piecewise1d": {"knots": [{"x": 0, "value": 0, "derivative": 0}, ...],
//                            "extension": "equivariant"}},
//     "zeta": {"u": "uw", "w": "w^-1"},
//     "tolerances": {"point": 1e-9, ...}          (optional)
//   }
//
// Finite-group scene:
//   {
//     "name": "S3_inner", "mode": "finite-group",
//     "group": {"named": "S3"}
//        or {"degree": 3, "generators": [{"label": "s", "permutation": [1, 0, 2]}, ...]},
//     "zeta": {"s": "r s r^-1", "r": "r"}          (or the string "id")
//   }
#ifndef ORBILEF_SCENE_HPP_
#define ORBILEF_SCENE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbilef/geometry.hpp"
#include "orbilef/group.hpp"

namespace orbilef {

struct GeneratorSpec {
  std::string label;
  Matrix linear;
  Vector translation;
  bool operator==(const GeneratorSpec& o) const;
};

struct PermutationSpec {
  std::string label;
  Permutation permutation;
  bool operator==(const PermutationSpec&) const = default;
};

struct SceneFile {
  std::string name;
  std::string mode = "geometric";  // "geometric" or "finite-group"

  int dimension = 0;
  std::vector<GeneratorSpec> generators;
  Box domain;
  double radius = 0;
  PhiMap phi;
  GeometricTolerances tolerances;

  std::string group_name;  // finite-group mode, named group
  int degree = 0;          // finite-group mode, explicit permutations
  std::vector<PermutationSpec> permutations;

  std::map<std::string, std::string> zeta;  // label -> word

  bool is_finite() const { return mode == "finite-group"; }
  bool operator==(const SceneFile& o) const;
};

// Throws ParseError (with line/column) or ValidationError (with field path).
SceneFile parse_scene(std::string_view text);
// Throws IoError if the file cannot be read.
SceneFile load_scene(const std::string& path);

nlohmann::json scene_to_json(const SceneFile& scene);
std::string render_scene(const SceneFile& scene);

CovariantPair build_pair(const SceneFile& scene);
GroupPtr build_group(const SceneFile& scene);
GroupAutomorphism build_zeta(const SceneFile& scene, const GroupPtr& g);

} // namespace orbilef

#endif // ORBILEF_SCENE_HPP_
