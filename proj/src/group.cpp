#include "orbilef/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "orbilef/error.hpp"
#include "orbilef/words.hpp"

namespace orbilef {

namespace {

std::vector<std::vector<Element>> compute_classes(const FiniteGroup& g,
                                                  std::vector<int>& class_of) {
  int n = g.order();
  class_of.assign(size_t(n), -1);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (class_of[x] >= 0)
      continue;
    std::vector<Element> cls;
    int id = int(classes.size());
    for (Element h = 0; h < n; ++h) {
      Element y = g.mul(g.mul(h, x), g.inv(h));
      if (class_of[y] < 0) {
        class_of[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

} // namespace

FiniteGroup::FiniteGroup(int order, std::vector<Element> table,
                         std::vector<GeneratorLabel> generators,
                         std::vector<std::string> names)
  : order_(order), table_(std::move(table)), generators_(std::move(generators)),
    names_(std::move(names)) {
  if (order_ <= 0)
    fail(ErrorCode::ValidationError, "group order must be positive");
  if (order_ > kMaxGroupOrder)
    fail(ErrorCode::GroupTooLarge, "order " + std::to_string(order_) +
         " exceeds cap " + std::to_string(kMaxGroupOrder));
  if (table_.size() != size_t(order_) * size_t(order_))
    fail(ErrorCode::ValidationError, "multiplication table has wrong size");
  for (Element a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      fail(ErrorCode::ValidationError, "element 0 is not a two-sided identity");
  }
  inverse_.assign(size_t(order_), -1);
  for (Element a = 0; a < order_; ++a) {
    std::vector<char> seen(size_t(order_), 0);
    for (Element b = 0; b < order_; ++b) {
      Element c = mul(a, b);
      if (c < 0 || c >= order_ || seen[c])
        fail(ErrorCode::ValidationError, "multiplication table is not a Latin square");
      seen[c] = 1;
      if (c == 0)
        inverse_[a] = b;
    }
  }
  for (Element a = 0; a < order_; ++a)
    if (mul(inverse_[a], a) != 0)
      fail(ErrorCode::ValidationError, "left and right inverses differ");
  for (const GeneratorLabel& gl : generators_)
    if (gl.element < 0 || gl.element >= order_)
      fail(ErrorCode::ValidationError, "generator '" + gl.label + "' out of range");
  if (names_.empty()) {
    names_.resize(size_t(order_));
    for (Element a = 0; a < order_; ++a)
      names_[a] = a == 0 ? "e" : "#" + std::to_string(a);
  } else if (names_.size() != size_t(order_)) {
    fail(ErrorCode::ValidationError, "element name list has wrong size");
  }
  classes_ = compute_classes(*this, class_of_);
}

Element FiniteGroup::power(Element a, int k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element r = 0;
  for (int i = 0; i < k; ++i)
    r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != 0; x = mul(x, a))
    ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::optional<Element> FiniteGroup::generator(std::string_view label) const {
  for (const GeneratorLabel& g : generators_)
    if (g.label == label)
      return g.element;
  return std::nullopt;
}

bool FiniteGroup::verify_axioms() const {
  for (Element a = 0; a < order_; ++a) {
    if (mul(inv(a), a) != 0 || mul(a, inv(a)) != 0)
      return false;
    for (Element b = 0; b < order_; ++b) {
      Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          return false;
    }
  }
  return true;
}

bool Subgroup::contains(Element parent_element) const {
  return std::find(embedding.begin(), embedding.end(), parent_element) != embedding.end();
}

GroupPtr group_from_permutation_generators(std::span<const Permutation> gens, int degree,
                                           std::vector<std::string> labels) {
  if (degree <= 0)
    fail(ErrorCode::InvalidArgument, "permutation degree must be positive");
  if (labels.empty())
    for (size_t i = 0; i < gens.size(); ++i)
      labels.push_back("g" + std::to_string(i));
  if (labels.size() != gens.size())
    fail(ErrorCode::InvalidArgument, "one label per generator required");
  for (size_t i = 0; i < gens.size(); ++i) {
    const Permutation& p = gens[i];
    if (p.size() != size_t(degree))
      fail(ErrorCode::ValidationError, "generator '" + labels[i] + "' has wrong length");
    std::vector<char> seen(size_t(degree), 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        fail(ErrorCode::ValidationError, "generator '" + labels[i] + "' is not a bijection");
      seen[v] = 1;
    }
  }

  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i)
      c[i] = a[b[i]];
    return c;
  };

  Permutation id(static_cast<size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::vector<Word> words{Word{}};
  std::map<Permutation, Element> index{{id, 0}};
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < gens.size(); ++s) {
      Permutation y = compose(gens[s], elements[x]);
      if (index.count(y))
        continue;
      if (elements.size() >= size_t(kMaxGroupOrder))
        fail(ErrorCode::GroupTooLarge, "permutation group exceeds order cap " +
             std::to_string(kMaxGroupOrder));
      index.emplace(y, Element(elements.size()));
      Word w{Letter{int(s), false}};
      w.insert(w.end(), words[x].begin(), words[x].end());
      words.push_back(std::move(w));
      queue.push_back(Element(elements.size()));
      elements.push_back(std::move(y));
    }
  }

  int n = int(elements.size());
  std::vector<Element> table(size_t(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[size_t(a) * n + b] = index.at(compose(elements[a], elements[b]));

  std::vector<GeneratorLabel> gl;
  for (size_t s = 0; s < gens.size(); ++s)
    gl.push_back({labels[s], index.at(gens[s])});
  std::vector<std::string> names;
  for (const Word& w : words)
    names.push_back(format_word(w, labels));
  return std::make_shared<const FiniteGroup>(n, std::move(table), std::move(gl),
                                             std::move(names));
}

Subgroup subgroup_from_elements(const GroupPtr& parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != parent->identity())
    fail(ErrorCode::NotClosed, "subgroup must contain the identity");
  std::unordered_map<Element, Element> local;
  for (size_t i = 0; i < elements.size(); ++i)
    local[elements[i]] = Element(i);
  int n = int(elements.size());
  std::vector<Element> table(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = local.find(parent->mul(elements[a], elements[b]));
      if (it == local.end())
        fail(ErrorCode::NotClosed, "element set is not closed under multiplication");
      table[size_t(a) * n + b] = it->second;
    }
  std::vector<std::string> names;
  for (Element e : elements)
    names.push_back(parent->name(e));
  return Subgroup{std::make_shared<const FiniteGroup>(n, std::move(table),
                                                      std::vector<GeneratorLabel>{},
                                                      std::move(names)),
                  std::move(elements)};
}

GroupAutomorphism::GroupAutomorphism(GroupPtr source, std::vector<Element> image)
  : source_(std::move(source)), image_(std::move(image)) {
  int n = source_->order();
  if (image_.size() != size_t(n))
    fail(ErrorCode::NotBijective, "image has wrong length");
  std::vector<char> seen(size_t(n), 0);
  for (Element x : image_) {
    if (x < 0 || x >= n || seen[x])
      fail(ErrorCode::NotBijective, "map is not a permutation of the elements");
    seen[x] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (image_[source_->mul(a, b)] != source_->mul(image_[a], image_[b]))
        fail(ErrorCode::NotAHomomorphism,
             "image(" + source_->name(a) + " * " + source_->name(b) + ") mismatch");
}

GroupAutomorphism GroupAutomorphism::identity(const GroupPtr& g) {
  std::vector<Element> img(size_t(g->order()));
  std::iota(img.begin(), img.end(), 0);
  return GroupAutomorphism(g, std::move(img));
}

GroupAutomorphism GroupAutomorphism::inner(const GroupPtr& g, Element c) {
  std::vector<Element> img(size_t(g->order()));
  for (Element x = 0; x < g->order(); ++x)
    img[x] = g->mul(g->mul(c, x), g->inv(c));
  return GroupAutomorphism(g, std::move(img));
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  std::vector<Element> img(image_.size());
  for (size_t x = 0; x < image_.size(); ++x)
    img[image_[x]] = Element(x);
  return GroupAutomorphism(source_, std::move(img));
}

GroupAutomorphism GroupAutomorphism::after(const GroupAutomorphism& first) const {
  if (!first.source_->same_table(*source_))
    fail(ErrorCode::GroupMismatch, "composing automorphisms of different groups");
  std::vector<Element> img(image_.size());
  for (size_t x = 0; x < image_.size(); ++x)
    img[x] = image_[first.image_[x]];
  return GroupAutomorphism(source_, std::move(img));
}

bool GroupAutomorphism::is_identity() const {
  for (size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != Element(x))
      return false;
  return true;
}

int GroupAutomorphism::order() const {
  std::vector<Element> cur = image_;
  int k = 1;
  auto is_id = [](const std::vector<Element>& v) {
    for (size_t x = 0; x < v.size(); ++x)
      if (v[x] != Element(x))
        return false;
    return true;
  };
  while (!is_id(cur)) {
    for (Element& x : cur)
      x = image_[x];
    ++k;
  }
  return k;
}

GroupAutomorphism automorphism_from_generator_images(
    const GroupPtr& g, const std::map<std::string, Element>& images) {
  int n = g->order();
  std::vector<std::pair<Element, Element>> gens;  // (generator, image)
  for (const GeneratorLabel& gl : g->generators()) {
    auto it = images.find(gl.label);
    if (it == images.end())
      fail(ErrorCode::InvalidArgument, "no image given for generator '" + gl.label + "'");
    if (it->second < 0 || it->second >= n)
      fail(ErrorCode::InvalidArgument, "image of '" + gl.label + "' out of range");
    gens.emplace_back(gl.element, it->second);
  }
  for (const auto& [label, _] : images)
    if (!g->generator(label))
      fail(ErrorCode::InvalidArgument, "unknown generator label '" + label + "'");

  // image(s x) = image(s) image(x) along every edge of the Cayley graph.
  std::vector<Element> img(size_t(n), -1);
  img[0] = 0;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& [s, s_img] : gens) {
      Element y = g->mul(s, x);
      Element y_img = g->mul(s_img, img[x]);
      if (img[y] < 0) {
        img[y] = y_img;
        queue.push_back(y);
      } else if (img[y] != y_img) {
        fail(ErrorCode::NotAHomomorphism, "generator images do not extend to a homomorphism");
      }
    }
  }
  for (Element x = 0; x < n; ++x)
    if (img[x] < 0)
      fail(ErrorCode::ValidationError, "generators do not generate the group");
  std::vector<char> seen(size_t(n), 0);
  for (Element x : img) {
    if (seen[x])
      fail(ErrorCode::NotBijective, "extended map is not injective");
    seen[x] = 1;
  }
  return GroupAutomorphism(g, std::move(img));
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  return g.classes();
}

TwistedOrbitDecomposition twisted_orbits(const GroupPtr& ambient,
                                         std::span<const Element> K,
                                         std::span<const Element> L,
                                         const GroupAutomorphism& zeta) {
  if (!zeta.source()->same_table(*ambient))
    fail(ErrorCode::GroupMismatch, "automorphism is not defined on the ambient group");
  TwistedOrbitDecomposition out;
  out.acting_group = subgroup_from_elements(ambient, {K.begin(), K.end()});
  out.point_set.assign(L.begin(), L.end());
  std::sort(out.point_set.begin(), out.point_set.end());

  int n = ambient->order();
  std::vector<int> slot(size_t(n), -1);
  for (size_t i = 0; i < out.point_set.size(); ++i)
    slot[out.point_set[i]] = int(i);
  auto act = [&](Element h, Element x) {
    return ambient->mul(ambient->mul(zeta(h), x), ambient->inv(h));
  };
  for (Element x : out.point_set)
    for (Element h : out.acting_group.embedding)
      if (slot[act(h, x)] < 0)
        fail(ErrorCode::NotInvariant, "L is not invariant under twisted conjugation by K");

  std::vector<char> done(out.point_set.size(), 0);
  for (size_t i = 0; i < out.point_set.size(); ++i) {
    if (done[i])
      continue;
    Element rep = out.point_set[i];
    std::vector<Element> orbit;
    std::vector<Element> stab;
    for (Element h : out.acting_group.embedding) {
      Element y = act(h, rep);
      if (!done[slot[y]]) {
        done[slot[y]] = 1;
        orbit.push_back(y);
      }
      if (y == rep)
        stab.push_back(h);
    }
    std::sort(orbit.begin(), orbit.end());
    out.representatives.push_back(orbit.front());
    out.orbits.push_back(std::move(orbit));
    out.stabilizers.push_back(subgroup_from_elements(ambient, std::move(stab)));
  }
  return out;
}

Subgroup twisted_centralizer(const GroupPtr& g, const GroupAutomorphism& zeta, Element x) {
  std::vector<Element> members;
  for (Element h = 0; h < g->order(); ++h)
    if (g->mul(zeta(h), x) == g->mul(x, h))
      members.push_back(h);
  return subgroup_from_elements(g, std::move(members));
}

Element evaluate_word(const FiniteGroup& g, std::string_view text) {
  std::vector<std::string> labels;
  for (const GeneratorLabel& gl : g.generators())
    labels.push_back(gl.label);
  Element r = g.identity();
  for (const Letter& l : parse_word(text, labels)) {
    Element s = g.generators()[size_t(l.generator)].element;
    r = g.mul(r, l.inverse ? g.inv(s) : s);
  }
  return r;
}

} // namespace orbilef
