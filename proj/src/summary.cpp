#include "orbilef/summary.hpp"

#include <sstream>

#include "orbilef/error.hpp"
#include "orbilef/orientation.hpp"

namespace orbilef {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + v[i];
  return out;
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

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<std::string> names(const FiniteGroup& g, const std::vector<Element>& elems) {
  std::vector<std::string> out;
  for (Element e : elems)
    out.push_back(g.name(e));
  return out;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Matrix json_matrix(const json& j, const std::string& path) {
  if (!j.is_array())
    fail(ErrorCode::ValidationError, path + ": expected an array of rows");
  Eigen::Index n = Eigen::Index(j.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = j[size_t(i)];
    if (!row.is_array() || Eigen::Index(row.size()) != n)
      fail(ErrorCode::ValidationError, path + "[" + std::to_string(i) + "]: expected " +
                                           std::to_string(n) + " entries");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!row[size_t(k)].is_number())
        fail(ErrorCode::ValidationError, path + ": entries must be numbers");
      m(i, k) = row[size_t(k)].get<double>();
    }
  }
  return m;
}

} // namespace

Summary summarize(const LefschetzReport& report) {
  return {report_to_json(report), render_report(report, ReportFormat::Text), report.total};
}

Summary lefschetz_summary(const SceneFile& scene, std::uint64_t seed) {
  LefschetzReport report;
  if (scene.is_finite()) {
    GroupPtr g = build_group(scene);
    report = finite_case_lefschetz(character_table(g, seed), build_zeta(scene, g));
  } else {
    report = lefschetz_number(build_pair(scene));
    report.diagnostics.seed = seed;
  }
  report.scene = scene_to_json(scene);
  return summarize(report);
}

Summary group_summary(const SceneFile& scene) {
  Summary s;
  std::ostringstream os;
  s.data["kind"] = "group";
  s.data["scene"] = scene.name;
  if (scene.is_finite()) {
    GroupPtr g = build_group(scene);
    GroupAutomorphism zeta = build_zeta(scene, g);
    std::vector<Element> all(size_t(g->order()));
    for (int i = 0; i < g->order(); ++i)
      all[size_t(i)] = i;
    os << "scene: " << scene.name << "\ngroup order: " << g->order() << '\n';
    json classes = json::array();
    os << "conjugacy classes: " << g->class_count() << '\n';
    for (const auto& c : g->classes()) {
      classes.push_back(names(*g, c));
      os << "  {" << join(names(*g, c)) << "}\n";
    }
    TwistedOrbitDecomposition t = twisted_orbits(g, all, all, zeta);
    json twisted = json::array();
    os << "twisted conjugacy classes: " << t.orbits.size() << '\n';
    for (size_t i = 0; i < t.orbits.size(); ++i) {
      std::vector<std::string> stab = names(*g, t.stabilizers[i].embedding);
      twisted.push_back({{"representative", g->name(t.representatives[i])},
                         {"orbit", names(*g, t.orbits[i])},
                         {"stabilizer", stab}});
      os << "  {" << join(names(*g, t.orbits[i])) << "}, twisted centralizer {" << join(stab)
         << "}\n";
    }
    s.data["order"] = g->order();
    s.data["elements"] = names(*g, all);
    s.data["conjugacy_classes"] = classes;
    s.data["twisted_classes"] = twisted;
    s.headline = Rational(std::int64_t(t.orbits.size()));
    s.text = os.str();
    return s;
  }

  CovariantPair pair = build_pair(scene);
  const GeometricGroup& g = pair.group();
  json elems = json::array();
  os << "scene: " << scene.name << '\n'
     << "enumerated elements within radius " << g.radius() << ": " << g.elements().size() << '\n';
  for (size_t i = 0; i < g.elements().size(); ++i) {
    const AffineIsometry& e = g.elements()[i];
    elems.push_back({{"name", g.name(i)},
                     {"matrix", matrix_json(e.linear)},
                     {"translation", vector_json(e.translation)}});
    os << "  " << g.name(i) << ": translation " << format_vector(e.translation) << '\n';
  }
  FixedPointSearch search = find_fixed_points(pair);
  json orbits = json::array();
  os << "fixed orbits: " << search.representatives.size() << '\n';
  for (const GeometricFixedPoint& fp : search.representatives) {
    PointStabilizer stab = point_stabilizer(g, fp.p);
    std::vector<std::string> stab_names;
    for (size_t k : stab.elements)
      stab_names.push_back(g.name(k));
    orbits.push_back({{"point", vector_json(fp.p)},
                      {"element", g.name(fp.element)},
                      {"stabilizer", stab_names}});
    os << "  p = " << format_vector(fp.p) << ", fixed by " << g.name(fp.element)
       << ", isotropy {" << join(stab_names) << "}\n";
  }
  for (const std::string& w : search.warnings)
    os << "warning: " << w << '\n';
  s.data["radius"] = g.radius();
  s.data["generator_step"] = g.generator_step();
  s.data["elements"] = elems;
  s.data["fixed_orbits"] = orbits;
  s.data["warnings"] = search.warnings;
  s.headline = Rational(std::int64_t(g.elements().size()));
  s.text = os.str();
  return s;
}

Summary character_summary(const GroupPtr& g, const std::string& rep_json,
                          const std::string& intertwiner_json, std::uint64_t seed) {
  json rep = parse_json(rep_json, "representation");
  if (!rep.is_object())
    fail(ErrorCode::ValidationError, "representation: expected an object");
  json gens = rep.contains("generators") ? rep.at("generators") : rep;
  if (!gens.is_object())
    fail(ErrorCode::ValidationError, "representation.generators: expected an object");
  Matrix a = json_matrix(parse_json(intertwiner_json, "intertwiner"), "intertwiner");
  int dim = int(a.rows());
  if (rep.contains("dimension")) {
    if (!rep.at("dimension").is_number_integer() || rep.at("dimension").get<int>() != dim)
      fail(ErrorCode::ValidationError, "representation.dimension does not match the intertwiner");
  }
  std::map<std::string, Matrix> mats;
  for (const auto& [label, m] : gens.items()) {
    if (label == "dimension")
      continue;
    mats[label] = json_matrix(m, "representation." + label);
    if (mats[label].rows() != dim)
      fail(ErrorCode::ValidationError, "representation." + label + ": dimension " +
                                           std::to_string(mats[label].rows()) +
                                           " does not match the intertwiner");
  }
  OrthogonalRep rho = OrthogonalRep::from_generators(g, dim, mats);
  Intertwiner w = make_intertwiner(rho, a);
  CharacterTable table = character_table(g, seed);
  IntegralityReport ir = integrality_check(rho, w, table);
  Rational avg = average(ir.character);

  Summary s;
  std::ostringstream os;
  json values = json::object();
  os << "group order: " << g->order() << ", dimension " << dim << '\n';
  os << "orientation character:";
  for (int e = 0; e < g->order(); ++e) {
    int v = int(std::lround(ir.character(e).real()));
    values[g->name(e)] = v;
    os << ' ' << g->name(e) << '=' << (v > 0 ? "+1" : "-1");
  }
  os << "\nmultiplicities:";
  for (size_t i = 0; i < ir.multiplicities.size(); ++i)
    os << ' ' << ir.multiplicities[i];
  os << " (irreducible degrees";
  for (int d : table.degrees)
    os << ' ' << d;
  os << ")\nreconstruction error: " << ir.reconstruction_error << '\n';
  os << "average: " << avg << '\n';
  os << "character table seed: " << table.seed << '\n';
  s.data = {{"kind", "character"},
            {"order", g->order()},
            {"dimension", dim},
            {"commutation_residual", w.commutation_residual},
            {"character", values},
            {"multiplicities", ir.multiplicities},
            {"degrees", table.degrees},
            {"reconstruction_error", ir.reconstruction_error},
            {"average", rational_json(avg)},
            {"seed", table.seed}};
  s.text = os.str();
  s.headline = avg;
  return s;
}

Summary burnside_summary(const GroupPtr& g, const GroupAutomorphism& zeta, std::uint64_t seed) {
  CharacterTable table = character_table(g, seed);
  BurnsideCheck b = burnside_identity_check(table, zeta);
  Summary s;
  std::ostringstream os;
  os << b.dual_fixed << ' ' << b.centralizer_average << ' ' << b.twisted_class_count << '\n';
  s.text = os.str();
  s.data = {{"kind", "burnside"},
            {"order", g->order()},
            {"dual_fixed_count", b.dual_fixed},
            {"centralizer_average", rational_json(b.centralizer_average)},
            {"twisted_class_count", b.twisted_class_count},
            {"consistent", b.consistent()},
            {"seed", table.seed}};
  s.headline = Rational(b.twisted_class_count);
  if (!b.consistent())
    fail(ErrorCode::Internal, "finite-group identity violated: " + os.str());
  return s;
}

Summary model_index_summary(int truncation) {
  ModelOperatorReport m = model_operator_index(truncation);
  Summary s;
  std::ostringstream os;
  os << "truncation: " << m.truncation << '\n'
     << "kernel dimension: " << m.kernel_dim << '\n'
     << "cokernel dimension: " << m.cokernel_dim << '\n';
  json basis = json::array();
  for (size_t i = 0; i < m.cokernel_basis.size(); ++i) {
    std::string term;
    json coeffs = json::object();
    for (int k = -m.truncation; k <= m.truncation + 1; ++k) {
      std::int64_t c = m.coefficient(i, k);
      if (c == 0)
        continue;
      coeffs[std::to_string(k)] = c;
      std::string e = "e" + std::to_string(k);
      if (term.empty())
        term = (c == 1 ? "" : c == -1 ? "-" : std::to_string(c)) + e;
      else
        term += (c > 0 ? "+" : "-") + (std::llabs(c) == 1 ? "" : std::to_string(std::llabs(c))) + e;
    }
    basis.push_back(coeffs);
    os << "cokernel: " << term << ", symmetry eigenvalue " << m.symmetry_eigenvalues[i] << '\n';
  }
  os << "index: " << m.index << '\n';
  s.data = {{"kind", "model-index"},
            {"truncation", m.truncation},
            {"kernel_dim", m.kernel_dim},
            {"cokernel_dim", m.cokernel_dim},
            {"cokernel_basis", basis},
            {"symmetry_eigenvalues", m.symmetry_eigenvalues},
            {"index", m.index}};
  s.text = os.str();
  s.headline = Rational(m.index);
  return s;
}

} // namespace orbilef
