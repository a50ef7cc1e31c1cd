#include "orbilef/scene.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "orbilef/catalog.hpp"
#include "orbilef/error.hpp"
#include "orbilef/words.hpp"

namespace orbilef {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  fail(ErrorCode::ValidationError, path + ": " + msg);
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object())
    invalid(path, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, _] : j.items())
    if (!allowed.count(k))
      invalid(path, "unknown key '" + k + "'");
}

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key))
    invalid(path, std::string("missing key '") + key + "'");
  return j.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number())
    invalid(path, "expected a number");
  double v = j.get<double>();
  if (!std::isfinite(v))
    invalid(path, "number is not finite");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    invalid(path, "expected an integer");
  return j.get<int>();
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string())
    invalid(path, "expected a string");
  return j.get<std::string>();
}

Vector vector_of(const json& j, int n, const std::string& path) {
  if (!j.is_array() || j.size() != size_t(n))
    invalid(path, "expected an array of " + std::to_string(n) + " numbers");
  Vector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = number(j[size_t(i)], path + "[" + std::to_string(i) + "]");
  return v;
}

Matrix matrix_of(const json& j, int n, const std::string& path) {
  if (!j.is_array() || j.size() != size_t(n))
    invalid(path, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    std::string rp = path + "[" + std::to_string(i) + "]";
    m.row(i) = vector_of(j[size_t(i)], n, rp).transpose();
  }
  return m;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(v[i]);
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    a.push_back(vector_json(m.row(i).transpose()));
  return a;
}

bool valid_label(const std::string& l) {
  if (l.empty() || l == "e" || l == "1")
    return false;
  for (char c : l)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

void parse_tolerances(const json& j, GeometricTolerances& t) {
  only_keys(j, "tolerances", {"point", "dedup", "transversality", "bisection", "breakpoint",
                              "covariance", "domain_slack", "max_elements", "bisection_grid",
                              "min_bisection_grid"});
  auto positive = [&](const char* key, double& field) {
    if (!j.contains(key))
      return;
    double v = number(j.at(key), std::string("tolerances.") + key);
    if (!(v > 0))
      invalid(std::string("tolerances.") + key, "must be positive");
    field = v;
  };
  auto count = [&](const char* key, int& field) {
    if (!j.contains(key))
      return;
    int v = integer(j.at(key), std::string("tolerances.") + key);
    if (v < 1)
      invalid(std::string("tolerances.") + key, "must be at least 1");
    field = v;
  };
  positive("point", t.point);
  positive("dedup", t.dedup);
  positive("transversality", t.transversality);
  positive("bisection", t.bisection);
  positive("breakpoint", t.breakpoint);
  positive("covariance", t.covariance);
  positive("domain_slack", t.domain_slack);
  count("max_elements", t.max_elements);
  count("bisection_grid", t.bisection_grid);
  count("min_bisection_grid", t.min_bisection_grid);
}

void parse_geometric(const json& j, SceneFile& s) {
  only_keys(j, "scene", {"name", "mode", "dimension", "generators", "fundamental_domain",
                         "enumeration_radius", "phi", "zeta", "tolerances"});
  s.dimension = integer(need(j, "dimension", "scene"), "dimension");
  if (s.dimension < 0)
    invalid("dimension", "must be non-negative");
  int n = s.dimension;

  const json& gens = need(j, "generators", "scene");
  if (!gens.is_array())
    invalid("generators", "expected an array");
  std::set<std::string> seen;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::string path = "generators[" + std::to_string(i) + "]";
    only_keys(gens[i], path, {"label", "matrix", "translation"});
    GeneratorSpec g;
    g.label = string(need(gens[i], "label", path), path + ".label");
    if (!valid_label(g.label))
      invalid(path + ".label", "'" + g.label + "' is not a valid label");
    if (!seen.insert(g.label).second)
      invalid(path + ".label", "duplicate label '" + g.label + "'");
    path += " ('" + g.label + "')";
    g.linear = matrix_of(need(gens[i], "matrix", path), n, path + ".matrix");
    if (!is_orthogonal(g.linear))
      invalid(path + ".matrix", "generator '" + g.label + "' is not orthogonal");
    g.translation = vector_of(need(gens[i], "translation", path), n, path + ".translation");
    s.generators.push_back(std::move(g));
  }

  const json& box = need(j, "fundamental_domain", "scene");
  only_keys(box, "fundamental_domain", {"min", "max"});
  s.domain.lo = vector_of(need(box, "min", "fundamental_domain"), n, "fundamental_domain.min");
  s.domain.hi = vector_of(need(box, "max", "fundamental_domain"), n, "fundamental_domain.max");
  for (int i = 0; i < n; ++i)
    if (!(s.domain.lo[i] <= s.domain.hi[i]))
      invalid("fundamental_domain", "min exceeds max in coordinate " + std::to_string(i));

  s.radius = number(need(j, "enumeration_radius", "scene"), "enumeration_radius");
  if (!(s.radius > 0))
    invalid("enumeration_radius", "must be positive");

  const json& phi = need(j, "phi", "scene");
  only_keys(phi, "phi", {"affine", "piecewise1d"});
  if (phi.size() != 1)
    invalid("phi", "expected exactly one of 'affine' or 'piecewise1d'");
  if (phi.contains("affine")) {
    const json& a = phi.at("affine");
    only_keys(a, "phi.affine", {"matrix", "translation"});
    s.phi = AffineMap{matrix_of(need(a, "matrix", "phi.affine"), n, "phi.affine.matrix"),
                      vector_of(need(a, "translation", "phi.affine"), n,
                                "phi.affine.translation")};
  } else {
    const json& p = phi.at("piecewise1d");
    only_keys(p, "phi.piecewise1d", {"knots", "extension"});
    if (n != 1)
      invalid("phi.piecewise1d", "piecewise maps require dimension 1");
    if (p.contains("extension") && string(p.at("extension"), "phi.piecewise1d.extension") !=
                                       "equivariant")
      invalid("phi.piecewise1d.extension", "only 'equivariant' is supported");
    const json& knots = need(p, "knots", "phi.piecewise1d");
    if (!knots.is_array() || knots.size() < 2)
      invalid("phi.piecewise1d.knots", "expected at least two knots");
    Piecewise1D pw;
    for (size_t i = 0; i < knots.size(); ++i) {
      std::string path = "phi.piecewise1d.knots[" + std::to_string(i) + "]";
      only_keys(knots[i], path, {"x", "value", "derivative"});
      pw.knots.push_back({number(need(knots[i], "x", path), path + ".x"),
                          number(need(knots[i], "value", path), path + ".value"),
                          number(need(knots[i], "derivative", path), path + ".derivative")});
      if (i && !(pw.knots[i].x > pw.knots[i - 1].x))
        invalid(path + ".x", "knots must be strictly increasing");
    }
    s.phi = std::move(pw);
  }

  std::vector<std::string> labels;
  for (const GeneratorSpec& g : s.generators)
    labels.push_back(g.label);
  const json& zeta = need(j, "zeta", "scene");
  if (zeta.is_string() && zeta.get<std::string>() == "id") {
    for (const std::string& l : labels)
      s.zeta[l] = l;
  } else {
    if (!zeta.is_object())
      invalid("zeta", "expected an object mapping labels to words, or \"id\"");
    for (const auto& [label, word] : zeta.items()) {
      if (!seen.count(label))
        invalid("zeta." + label, "undefined generator label '" + label + "'");
      std::string w = string(word, "zeta." + label);
      try {
        parse_word(w, labels);
      } catch (const Error& e) {
        invalid("zeta." + label, e.what());
      }
      s.zeta[label] = w;
    }
    for (const std::string& l : labels)
      if (!s.zeta.count(l))
        invalid("zeta", "no image for generator '" + l + "'");
  }

  if (j.contains("tolerances"))
    parse_tolerances(j.at("tolerances"), s.tolerances);
}

void parse_finite(const json& j, SceneFile& s) {
  only_keys(j, "scene", {"name", "mode", "group", "zeta"});
  const json& g = need(j, "group", "scene");
  only_keys(g, "group", {"named", "degree", "generators"});
  if (g.contains("named")) {
    if (g.size() != 1)
      invalid("group", "'named' cannot be combined with explicit generators");
    s.group_name = string(g.at("named"), "group.named");
  } else {
    s.degree = integer(need(g, "degree", "group"), "group.degree");
    if (s.degree < 1)
      invalid("group.degree", "must be positive");
    const json& gens = need(g, "generators", "group");
    if (!gens.is_array())
      invalid("group.generators", "expected an array");
    std::set<std::string> seen;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::string path = "group.generators[" + std::to_string(i) + "]";
      only_keys(gens[i], path, {"label", "permutation"});
      PermutationSpec p;
      p.label = string(need(gens[i], "label", path), path + ".label");
      if (!valid_label(p.label) || !seen.insert(p.label).second)
        invalid(path + ".label", "invalid or duplicate label '" + p.label + "'");
      const json& perm = need(gens[i], "permutation", path);
      if (!perm.is_array())
        invalid(path + ".permutation", "expected an array");
      for (size_t k = 0; k < perm.size(); ++k)
        p.permutation.push_back(integer(perm[k], path + ".permutation[" + std::to_string(k) + "]"));
      s.permutations.push_back(std::move(p));
    }
  }

  GroupPtr grp;
  try {
    grp = build_group(s);
  } catch (const Error& e) {
    invalid("group", e.what());
  }
  const json& zeta = need(j, "zeta", "scene");
  if (zeta.is_string() && zeta.get<std::string>() == "id") {
    for (const GeneratorLabel& gl : grp->generators())
      s.zeta[gl.label] = gl.label;
  } else {
    if (!zeta.is_object())
      invalid("zeta", "expected an object mapping labels to words, or \"id\"");
    for (const auto& [label, word] : zeta.items()) {
      if (!grp->generator(label))
        invalid("zeta." + label, "undefined generator label '" + label + "'");
      std::string w = string(word, "zeta." + label);
      try {
        evaluate_word(*grp, w);
      } catch (const Error& e) {
        invalid("zeta." + label, e.what());
      }
      s.zeta[label] = w;
    }
    for (const GeneratorLabel& gl : grp->generators())
      if (!s.zeta.count(gl.label))
        invalid("zeta", "no image for generator '" + gl.label + "'");
  }
}

} // namespace

bool GeneratorSpec::operator==(const GeneratorSpec& o) const {
  return label == o.label && linear.rows() == o.linear.rows() &&
         linear.cols() == o.linear.cols() && (linear.size() == 0 || linear == o.linear) &&
         translation.size() == o.translation.size() &&
         (translation.size() == 0 || translation == o.translation);
}

bool SceneFile::operator==(const SceneFile& o) const {
  auto same_vec = [](const Vector& a, const Vector& b) {
    return a.size() == b.size() && (a.size() == 0 || a == b);
  };
  auto same_mat = [](const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
  };
  bool same_phi = phi.index() == o.phi.index();
  if (same_phi) {
    if (const auto* a = std::get_if<AffineMap>(&phi)) {
      const auto& b = std::get<AffineMap>(o.phi);
      same_phi = same_mat(a->linear, b.linear) && same_vec(a->translation, b.translation);
    } else {
      same_phi = std::get<Piecewise1D>(phi).knots == std::get<Piecewise1D>(o.phi).knots;
    }
  }
  return name == o.name && mode == o.mode && dimension == o.dimension &&
         generators == o.generators && same_vec(domain.lo, o.domain.lo) &&
         same_vec(domain.hi, o.domain.hi) && radius == o.radius && same_phi &&
         tolerances == o.tolerances && group_name == o.group_name && degree == o.degree &&
         permutations == o.permutations && zeta == o.zeta;
}

SceneFile parse_scene(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object())
    fail(ErrorCode::ParseError, "scene must be a JSON object");
  SceneFile s;
  if (j.contains("name"))
    s.name = string(j.at("name"), "name");
  if (j.contains("mode"))
    s.mode = string(j.at("mode"), "mode");
  if (s.mode == "geometric")
    parse_geometric(j, s);
  else if (s.mode == "finite-group")
    parse_finite(j, s);
  else
    invalid("mode", "expected \"geometric\" or \"finite-group\"");
  return s;
}

SceneFile load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::IoError, "cannot read scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

json scene_to_json(const SceneFile& s) {
  json j;
  j["name"] = s.name;
  j["mode"] = s.mode;
  j["zeta"] = s.zeta;
  if (s.is_finite()) {
    if (!s.group_name.empty()) {
      j["group"] = {{"named", s.group_name}};
    } else {
      json gens = json::array();
      for (const PermutationSpec& p : s.permutations)
        gens.push_back({{"label", p.label}, {"permutation", p.permutation}});
      j["group"] = {{"degree", s.degree}, {"generators", gens}};
    }
    return j;
  }
  j["dimension"] = s.dimension;
  json gens = json::array();
  for (const GeneratorSpec& g : s.generators)
    gens.push_back({{"label", g.label},
                    {"matrix", matrix_json(g.linear)},
                    {"translation", vector_json(g.translation)}});
  j["generators"] = gens;
  j["fundamental_domain"] = {{"min", vector_json(s.domain.lo)}, {"max", vector_json(s.domain.hi)}};
  j["enumeration_radius"] = s.radius;
  if (const auto* a = std::get_if<AffineMap>(&s.phi)) {
    j["phi"] = {{"affine", {{"matrix", matrix_json(a->linear)},
                            {"translation", vector_json(a->translation)}}}};
  } else {
    json knots = json::array();
    for (const HermiteKnot& k : std::get<Piecewise1D>(s.phi).knots)
      knots.push_back({{"x", k.x}, {"value", k.value}, {"derivative", k.derivative}});
    j["phi"] = {{"piecewise1d", {{"knots", knots}, {"extension", "equivariant"}}}};
  }
  const GeometricTolerances& t = s.tolerances;
  j["tolerances"] = {{"point", t.point},
                     {"dedup", t.dedup},
                     {"transversality", t.transversality},
                     {"bisection", t.bisection},
                     {"breakpoint", t.breakpoint},
                     {"covariance", t.covariance},
                     {"domain_slack", t.domain_slack},
                     {"max_elements", t.max_elements},
                     {"bisection_grid", t.bisection_grid},
                     {"min_bisection_grid", t.min_bisection_grid}};
  return j;
}

std::string render_scene(const SceneFile& s) { return scene_to_json(s).dump(2) + "\n"; }

CovariantPair build_pair(const SceneFile& s) {
  if (s.is_finite())
    fail(ErrorCode::InvalidArgument, "scene '" + s.name + "' is a finite-group scene");
  std::vector<std::string> labels;
  std::vector<AffineIsometry> gens;
  for (const GeneratorSpec& g : s.generators) {
    labels.push_back(g.label);
    gens.push_back({g.linear, g.translation, {}});
  }
  std::map<std::string, Word> zeta;
  for (const auto& [label, word] : s.zeta)
    zeta[label] = parse_word(word, labels);
  GeometricGroup group(s.dimension, labels, std::move(gens), s.domain, s.radius, s.tolerances);
  return CovariantPair(std::move(group), s.phi, std::move(zeta));
}

GroupPtr build_group(const SceneFile& s) {
  if (!s.group_name.empty())
    return named_group(s.group_name);
  std::vector<Permutation> perms;
  std::vector<std::string> labels;
  for (const PermutationSpec& p : s.permutations) {
    perms.push_back(p.permutation);
    labels.push_back(p.label);
  }
  return group_from_permutation_generators(perms, s.degree, labels);
}

GroupAutomorphism build_zeta(const SceneFile& s, const GroupPtr& g) {
  std::map<std::string, Element> images;
  for (const auto& [label, word] : s.zeta)
    images[label] = evaluate_word(*g, word);
  return automorphism_from_generator_images(g, images);
}

} // namespace orbilef
