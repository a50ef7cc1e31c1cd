// Finite groups with dense element indices and a full multiplication table.
//
// Element 0 is always the identity.  The product a*b means "apply b, then a"
// for permutation groups, matching composition of maps.
#ifndef ORBILEF_GROUP_HPP_
#define ORBILEF_GROUP_HPP_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbilef {

using Element = int;
using Permutation = std::vector<int>;

inline constexpr int kMaxGroupOrder = 512;

struct GeneratorLabel {
  std::string label;
  Element element;
  bool operator==(const GeneratorLabel&) const = default;
};

class FiniteGroup {
public:
  // table[a * order + b] == a*b.  Throws ValidationError unless the table is a
  // group table with identity 0.
  FiniteGroup(int order, std::vector<Element> table,
              std::vector<GeneratorLabel> generators = {},
              std::vector<std::string> names = {});

  int order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[size_t(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element power(Element a, int k) const;
  int element_order(Element a) const;
  bool is_abelian() const;

  const std::vector<GeneratorLabel>& generators() const { return generators_; }
  std::optional<Element> generator(std::string_view label) const;

  // Human-readable element names (generator words for permutation groups).
  const std::string& name(Element a) const { return names_[a]; }

  // Conjugacy classes; identity class first, then by smallest member.
  const std::vector<std::vector<Element>>& classes() const { return classes_; }
  int class_of(Element a) const { return class_of_[a]; }
  int class_count() const { return int(classes_.size()); }

  // Exhaustive check of associativity and inverses, O(order^3).
  bool verify_axioms() const;

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }
  const std::vector<Element>& table() const { return table_; }

private:
  int order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<GeneratorLabel> generators_;
  std::vector<std::string> names_;
  std::vector<std::vector<Element>> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subgroup as a group of its own plus the map from its elements to the
// parent's.  embedding[0] is the parent identity.
struct Subgroup {
  GroupPtr group;
  std::vector<Element> embedding;

  int order() const { return group->order(); }
  bool contains(Element parent_element) const;
};

// Closure of permutations of {0..degree-1} by breadth-first search.
// Labels default to g0, g1, ...; throws GroupTooLarge past kMaxGroupOrder.
GroupPtr group_from_permutation_generators(std::span<const Permutation> gens,
                                           int degree,
                                           std::vector<std::string> labels = {});

// Throws NotClosed if the elements do not form a subgroup.
Subgroup subgroup_from_elements(const GroupPtr& parent, std::vector<Element> elements);

class GroupAutomorphism {
public:
  // Validates that image is a bijective homomorphism.
  GroupAutomorphism(GroupPtr source, std::vector<Element> image);

  static GroupAutomorphism identity(const GroupPtr& g);
  // x -> c x c^-1
  static GroupAutomorphism inner(const GroupPtr& g, Element c);

  const GroupPtr& source() const { return source_; }
  Element operator()(Element a) const { return image_[a]; }
  const std::vector<Element>& image() const { return image_; }

  GroupAutomorphism inverse() const;
  // (this after first)(x) = this(first(x))
  GroupAutomorphism after(const GroupAutomorphism& first) const;
  int order() const;
  bool is_identity() const;

private:
  GroupPtr source_;
  std::vector<Element> image_;
};

// Extends generator images multiplicatively.  Every generator label must be
// present.  Throws NotAHomomorphism or NotBijective.
GroupAutomorphism automorphism_from_generator_images(
    const GroupPtr& g, const std::map<std::string, Element>& images);

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

// Orbits of the twisted conjugation action h.x = zeta(h) x h^-1 of K on L.
struct TwistedOrbitDecomposition {
  Subgroup acting_group;
  std::vector<Element> point_set;
  std::vector<std::vector<Element>> orbits;  // each sorted ascending
  std::vector<Element> representatives;      // smallest index in each orbit
  std::vector<Subgroup> stabilizers;         // embedded in the ambient group
};

// Throws NotInvariant unless zeta(K) L K^-1 is contained in L.
TwistedOrbitDecomposition twisted_orbits(const GroupPtr& ambient,
                                         std::span<const Element> K,
                                         std::span<const Element> L,
                                         const GroupAutomorphism& zeta);

// {h : zeta(h) g = g h}
Subgroup twisted_centralizer(const GroupPtr& g, const GroupAutomorphism& zeta, Element x);

// Evaluates a word such as "u w^-1" over the group's generator labels.
Element evaluate_word(const FiniteGroup& g, std::string_view word);

} // namespace orbilef

#endif // ORBILEF_GROUP_HPP_
