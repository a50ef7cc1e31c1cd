// Named finite groups and automorphism specs used by the CLI and tests.
#ifndef ORBILEF_CATALOG_HPP_
#define ORBILEF_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "orbilef/group.hpp"

namespace orbilef {

// "trivial", "C<n>", "V4", "S3", "D<2m>" (dihedral of order 2m, m >= 3),
// "Q8".  Throws InvalidArgument for unknown names.
GroupPtr named_group(std::string_view spec);

// "id", "inv", "pow:<k>", "conj:<word>", or explicit generator images
// "a=<word>,b=<word>".  Validated as an automorphism.
GroupAutomorphism parse_automorphism(const GroupPtr& g, std::string_view spec);

struct BatteryCase {
  std::string group;
  std::string zeta;
};

// Cyclic C2..C12 with every automorphism, V4 with a generator swap, S3 with
// the identity and an inner automorphism, D8 with the identity and an outer
// automorphism, Q8 with the identity.
std::vector<BatteryCase> automorphism_battery();

// Groups used for character-table and orientation-character checks.
std::vector<std::string> group_battery();

} // namespace orbilef

#endif // ORBILEF_CATALOG_HPP_
