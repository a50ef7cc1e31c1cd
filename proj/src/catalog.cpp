#include "orbilef/catalog.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "orbilef/error.hpp"

namespace orbilef {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorCode::InvalidArgument, "bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

GroupPtr cyclic(int n) {
  Permutation a(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    a[size_t(i)] = (i + 1) % n;
  std::vector<Permutation> gens{a};
  return group_from_permutation_generators(gens, n, {"a"});
}

GroupPtr dihedral(int m) {
  Permutation r(static_cast<size_t>(m)), s(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    r[size_t(i)] = (i + 1) % m;
    s[size_t(i)] = (m - i) % m;
  }
  std::vector<Permutation> gens{r, s};
  return group_from_permutation_generators(gens, m, {"r", "s"});
}

// Left multiplication on {+-1, +-i, +-j, +-k}, encoded as sign * 4 + unit.
GroupPtr quaternion() {
  // unit product table for 1, i, j, k: (sign, unit)
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto left = [&](int u) {
    Permutation p(8);
    for (int x = 0; x < 8; ++x) {
      int xs = x / 4, xu = x % 4;
      int s = sign[u][xu] * (xs ? -1 : 1);
      p[size_t(x)] = (s < 0 ? 4 : 0) + unit[u][xu];
    }
    return p;
  };
  std::vector<Permutation> gens{left(1), left(2)};
  return group_from_permutation_generators(gens, 8, {"i", "j"});
}

} // namespace

GroupPtr named_group(std::string_view spec) {
  if (spec == "trivial" || spec == "C1") {
    std::vector<Permutation> none;
    return group_from_permutation_generators(none, 1, {});
  }
  if (spec == "V4" || spec == "K4") {
    std::vector<Permutation> gens{{1, 0, 3, 2}, {2, 3, 0, 1}};
    return group_from_permutation_generators(gens, 4, {"a", "b"});
  }
  if (spec == "S3") {
    std::vector<Permutation> gens{{1, 0, 2}, {1, 2, 0}};
    return group_from_permutation_generators(gens, 3, {"s", "r"});
  }
  if (spec == "Q8")
    return quaternion();
  if (spec.size() > 1 && spec[0] == 'C') {
    int n = parse_int(spec.substr(1), "cyclic group name");
    if (n < 1 || n > kMaxGroupOrder)
      fail(ErrorCode::InvalidArgument, "cyclic order out of range");
    return cyclic(n);
  }
  if (spec.size() > 1 && spec[0] == 'D') {
    int order = parse_int(spec.substr(1), "dihedral group name");
    if (order < 6 || order % 2 || order > kMaxGroupOrder)
      fail(ErrorCode::InvalidArgument, "dihedral group order must be even and at least 6");
    return dihedral(order / 2);
  }
  fail(ErrorCode::InvalidArgument, "unknown group '" + std::string(spec) + "'");
}

GroupAutomorphism parse_automorphism(const GroupPtr& g, std::string_view spec) {
  if (spec == "id" || spec == "identity")
    return GroupAutomorphism::identity(g);
  if (spec == "inv") {
    std::vector<Element> img(size_t(g->order()));
    for (Element x = 0; x < g->order(); ++x)
      img[size_t(x)] = g->inv(x);
    return GroupAutomorphism(g, std::move(img));
  }
  if (spec.rfind("pow:", 0) == 0) {
    int k = parse_int(spec.substr(4), "power automorphism");
    std::vector<Element> img(size_t(g->order()));
    for (Element x = 0; x < g->order(); ++x)
      img[size_t(x)] = g->power(x, k);
    return GroupAutomorphism(g, std::move(img));
  }
  if (spec.rfind("conj:", 0) == 0)
    return GroupAutomorphism::inner(g, evaluate_word(*g, spec.substr(5)));

  std::map<std::string, Element> images;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string_view item = spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorCode::InvalidArgument, "automorphism spec '" + std::string(spec) +
           "' is not id, inv, pow:k, conj:w or label=word,...");
    std::string label(item.substr(0, eq));
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
      label.pop_back();
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front())))
      label.erase(label.begin());
    images[label] = evaluate_word(*g, item.substr(eq + 1));
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return automorphism_from_generator_images(g, images);
}

std::vector<BatteryCase> automorphism_battery() {
  std::vector<BatteryCase> out;
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1)
        out.push_back({"C" + std::to_string(n), "pow:" + std::to_string(k)});
  out.push_back({"V4", "a=b,b=a"});
  out.push_back({"S3", "id"});
  out.push_back({"S3", "conj:r"});
  out.push_back({"D8", "id"});
  out.push_back({"D8", "r=r,s=r s"});
  out.push_back({"Q8", "id"});
  return out;
}

std::vector<std::string> group_battery() {
  std::vector<std::string> out{"trivial"};
  for (int n = 2; n <= 12; ++n)
    out.push_back("C" + std::to_string(n));
  for (const char* name : {"V4", "S3", "D8", "D10", "D12", "D14", "D16", "Q8"})
    out.push_back(name);
  return out;
}

} // namespace orbilef
