#include "orbilef/lefschetz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbilef/error.hpp"

namespace orbilef {

using nlohmann::json;

namespace {

bool same_matrix(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from(const json& j) {
  Eigen::Index r = Eigen::Index(j.size());
  Eigen::Index c = r ? Eigen::Index(j[0].size()) : 0;
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < c; ++k)
      m(i, k) = j[size_t(i)][size_t(k)].get<double>();
  return m;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(v[i]);
  return a;
}

Vector vector_from(const json& j) {
  Vector v(Eigen::Index(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v[Eigen::Index(i)] = j[i].get<double>();
  return v;
}

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from(const json& j) {
  return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

std::string format_point(const Vector& p) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < p.size(); ++i)
    os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", " : "") << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i)
    out += (i ? ", " : "") + items[i];
  return out;
}

bool same_representatives(const FixedPointSearch& a, const FixedPointSearch& b, double tol) {
  if (a.representatives.size() != b.representatives.size())
    return false;
  for (size_t i = 0; i < a.representatives.size(); ++i)
    if ((a.representatives[i].p - b.representatives[i].p).norm() >= tol)
      return false;
  return true;
}

} // namespace

bool TwistedOrbitDatum::operator==(const TwistedOrbitDatum& o) const {
  return representative == o.representative && orbit == o.orbit && stabilizer == o.stabilizer &&
         same_matrix(intertwiner, o.intertwiner) &&
         commutation_residual == o.commutation_residual && character == o.character &&
         average == o.average;
}

bool FixedOrbitDatum::operator==(const FixedOrbitDatum& o) const {
  return point.size() == o.point.size() && (point.size() == 0 || point == o.point) &&
         stabilizer == o.stabilizer && coset_representative == o.coset_representative &&
         coset == o.coset && orbits == o.orbits && contribution == o.contribution;
}

FixedOrbitDatum local_contribution(const LocalInput& in, const Vector& point) {
  const GroupPtr& k = in.stabilizer;
  size_t order = size_t(k->order());
  if (in.linear_parts.size() != order || in.jacobians.size() != order ||
      in.coset_names.size() != order || in.twist.size() != order)
    fail(ErrorCode::InvalidArgument, "local input needs one entry per isotropy element");

  GroupAutomorphism twist(k, in.twist);
  std::vector<Element> all(order);
  std::iota(all.begin(), all.end(), 0);
  TwistedOrbitDecomposition dec = twisted_orbits(k, all, all, twist);

  FixedOrbitDatum out;
  out.point = point;
  for (Element x = 0; x < k->order(); ++x)
    out.stabilizer.push_back(k->name(x));
  out.coset_representative = in.coset_names[0];
  out.coset = in.coset_names;

  Matrix id = Matrix::Identity(in.dim, in.dim);
  for (size_t i = 0; i < dec.orbits.size(); ++i) {
    const Subgroup& gamma = dec.stabilizers[i];
    Element rep = dec.representatives[i];
    std::vector<Matrix> rho_mats;
    for (Element e : gamma.embedding)
      rho_mats.push_back(in.linear_parts[size_t(e)]);
    OrthogonalRep rho(gamma.group, in.dim, std::move(rho_mats));
    Intertwiner w = make_intertwiner(rho, id - in.jacobians[size_t(rep)]);
    ClassFunction chi = orientation_character(rho, w);

    TwistedOrbitDatum d;
    d.representative = in.coset_names[size_t(rep)];
    for (Element e : dec.orbits[i])
      d.orbit.push_back(in.coset_names[size_t(e)]);
    for (size_t j = 0; j < gamma.embedding.size(); ++j) {
      d.stabilizer.push_back(k->name(gamma.embedding[j]));
      d.character.push_back({k->name(gamma.embedding[j]),
                             int(std::lround(chi(Element(j)).real()))});
    }
    d.intertwiner = w.matrix;
    d.commutation_residual = w.commutation_residual;
    d.average = average(chi);
    out.contribution += d.average;
    out.orbits.push_back(std::move(d));
  }
  return out;
}

LocalInput local_input(const CovariantPair& pair, const GeometricFixedPoint& fp,
                       PointStabilizer* stab_out) {
  const GeometricGroup& grp = pair.group();
  PointStabilizer stab = point_stabilizer(grp, fp.p);
  CosetSet coset = L_set(pair, fp.p, stab);
  const AffineIsometry& gp = grp.elements()[coset.representative];
  AffineIsometry gp_inv = gp.inverse();
  Vector q = gp.apply(fp.p);
  Matrix dphi = pair.evaluate(q, Side::Any).jacobian;

  LocalInput in;
  in.dim = grp.dim();
  in.stabilizer = stab.group;
  for (size_t a = 0; a < stab.elements.size(); ++a) {
    const AffineIsometry& k = grp.elements()[stab.elements[a]];
    AffineIsometry g = gp.compose(k);
    in.linear_parts.push_back(k.linear);
    in.jacobians.push_back(dphi * g.linear);
    auto gi = grp.find(g);
    in.coset_names.push_back(gi ? grp.name(*gi) : format_word(g.word, grp.labels()));

    auto t = grp.find(gp_inv.compose(pair.zeta(k)).compose(gp));
    auto pos = t ? std::find(stab.elements.begin(), stab.elements.end(), *t) : stab.elements.end();
    if (pos == stab.elements.end())
      fail(ErrorCode::NotClosed, "twisted isotropy image of " + grp.name(stab.elements[a]) +
           " is outside the enumerated stabilizer; raise the radius");
    in.twist.push_back(Element(pos - stab.elements.begin()));
  }
  if (stab_out)
    *stab_out = std::move(stab);
  return in;
}

LefschetzReport lefschetz_number(const CovariantPair& pair) {
  const GeometricGroup& grp = pair.group();
  FixedPointSearch search = find_fixed_points(pair);

  LefschetzReport rep;
  for (const GeometricFixedPoint& fp : search.representatives) {
    FixedOrbitDatum d = local_contribution(local_input(pair, fp), fp.p);
    rep.total += d.contribution;
    rep.orbits.push_back(std::move(d));
  }
  if (!rep.total.is_integer())
    fail(ErrorCode::NonIntegerTotal, "Lefschetz sum " + rep.total.str() + " is not an integer");

  Diagnostics& diag = rep.diagnostics;
  diag.radius = grp.radius();
  diag.covariance_residual = pair.covariance_residual();
  diag.element_count = std::int64_t(grp.elements().size());
  diag.tolerances = grp.tolerances();
  diag.warnings = search.warnings;
  double step = grp.generator_step();
  if (step == 0) {
    diag.certification_radius = grp.radius();
    diag.radius_certified = true;
  } else {
    diag.certification_radius = grp.radius() + step;
    CovariantPair wider(grp.with_radius(diag.certification_radius), pair.phi(), pair.zeta_words());
    diag.radius_certified =
        same_representatives(search, find_fixed_points(wider), grp.tolerances().dedup);
    if (!diag.radius_certified)
      diag.warnings.push_back("fixed orbits change when the radius grows by one generator step");
  }
  return rep;
}

LefschetzReport finite_case_lefschetz(const CharacterTable& table, const GroupAutomorphism& zeta) {
  const GroupPtr& g = table.group;
  if (!zeta.source()->same_table(*g))
    fail(ErrorCode::GroupMismatch, "automorphism and character table belong to different groups");
  LocalInput in;
  in.dim = 0;
  in.stabilizer = g;
  in.linear_parts.assign(size_t(g->order()), Matrix(0, 0));
  in.jacobians.assign(size_t(g->order()), Matrix(0, 0));
  for (Element x = 0; x < g->order(); ++x)
    in.coset_names.push_back(g->name(x));
  in.twist = zeta.image();

  LefschetzReport rep;
  rep.kind = "finite-group";
  FixedOrbitDatum d = local_contribution(in, Vector(0));
  rep.total = d.contribution;
  rep.orbits.push_back(std::move(d));
  BurnsideCheck check = burnside_identity_check(table, zeta);
  rep.dual_fixed_count = check.dual_fixed;
  rep.centralizer_average = check.centralizer_average;
  rep.twisted_class_count = check.twisted_class_count;
  rep.diagnostics.seed = table.seed;
  rep.diagnostics.radius_certified = true;
  if (!check.consistent() || rep.total != Rational(check.dual_fixed))
    fail(ErrorCode::Internal, "finite-group cross-checks disagree: Lefschetz " + rep.total.str() +
         ", dual fixed " + std::to_string(check.dual_fixed) + ", centralizer average " +
         check.centralizer_average.str() + ", twisted classes " +
         std::to_string(check.twisted_class_count));
  return rep;
}

json report_to_json(const LefschetzReport& r) {
  json orbits = json::array();
  for (const FixedOrbitDatum& d : r.orbits) {
    json tw = json::array();
    for (const TwistedOrbitDatum& t : d.orbits) {
      json chars = json::array();
      for (const CharacterValue& c : t.character)
        chars.push_back({{"element", c.element}, {"value", c.value}});
      tw.push_back({{"representative", t.representative},
                    {"orbit", t.orbit},
                    {"stabilizer", t.stabilizer},
                    {"intertwiner", matrix_json(t.intertwiner)},
                    {"commutation_residual", t.commutation_residual},
                    {"character", chars},
                    {"average", rational_json(t.average)}});
    }
    orbits.push_back({{"point", vector_json(d.point)},
                      {"stabilizer", d.stabilizer},
                      {"coset_representative", d.coset_representative},
                      {"coset", d.coset},
                      {"twisted_orbits", tw},
                      {"contribution", rational_json(d.contribution)}});
  }
  const Diagnostics& dg = r.diagnostics;
  const GeometricTolerances& t = dg.tolerances;
  json j = {
      {"kind", r.kind},
      {"scene", r.scene},
      {"orbits", orbits},
      {"total", rational_json(r.total)},
      {"diagnostics",
       {{"radius", dg.radius},
        {"certification_radius", dg.certification_radius},
        {"radius_certified", dg.radius_certified},
        {"covariance_residual", dg.covariance_residual},
        {"element_count", dg.element_count},
        {"seed", dg.seed},
        {"warnings", dg.warnings},
        {"tolerances",
         {{"point", t.point},
          {"dedup", t.dedup},
          {"transversality", t.transversality},
          {"bisection", t.bisection},
          {"breakpoint", t.breakpoint},
          {"covariance", t.covariance},
          {"domain_slack", t.domain_slack},
          {"max_elements", t.max_elements},
          {"bisection_grid", t.bisection_grid},
          {"min_bisection_grid", t.min_bisection_grid}}}}},
  };
  if (r.kind == "finite-group")
    j["finite_checks"] = {{"dual_fixed_count", r.dual_fixed_count},
                          {"centralizer_average", rational_json(r.centralizer_average)},
                          {"twisted_class_count", r.twisted_class_count}};
  return j;
}

LefschetzReport report_from_json(const json& j) {
  try {
    LefschetzReport r;
    r.kind = j.at("kind").get<std::string>();
    r.scene = j.at("scene");
    for (const json& o : j.at("orbits")) {
      FixedOrbitDatum d;
      d.point = vector_from(o.at("point"));
      d.stabilizer = o.at("stabilizer").get<std::vector<std::string>>();
      d.coset_representative = o.at("coset_representative").get<std::string>();
      d.coset = o.at("coset").get<std::vector<std::string>>();
      for (const json& t : o.at("twisted_orbits")) {
        TwistedOrbitDatum td;
        td.representative = t.at("representative").get<std::string>();
        td.orbit = t.at("orbit").get<std::vector<std::string>>();
        td.stabilizer = t.at("stabilizer").get<std::vector<std::string>>();
        td.intertwiner = matrix_from(t.at("intertwiner"));
        td.commutation_residual = t.at("commutation_residual").get<double>();
        for (const json& c : t.at("character"))
          td.character.push_back({c.at("element").get<std::string>(), c.at("value").get<int>()});
        td.average = rational_from(t.at("average"));
        d.orbits.push_back(std::move(td));
      }
      d.contribution = rational_from(o.at("contribution"));
      r.orbits.push_back(std::move(d));
    }
    r.total = rational_from(j.at("total"));
    const json& dg = j.at("diagnostics");
    Diagnostics& out = r.diagnostics;
    out.radius = dg.at("radius").get<double>();
    out.certification_radius = dg.at("certification_radius").get<double>();
    out.radius_certified = dg.at("radius_certified").get<bool>();
    out.covariance_residual = dg.at("covariance_residual").get<double>();
    out.element_count = dg.at("element_count").get<std::int64_t>();
    out.seed = dg.at("seed").get<std::uint64_t>();
    out.warnings = dg.at("warnings").get<std::vector<std::string>>();
    const json& t = dg.at("tolerances");
    out.tolerances.point = t.at("point").get<double>();
    out.tolerances.dedup = t.at("dedup").get<double>();
    out.tolerances.transversality = t.at("transversality").get<double>();
    out.tolerances.bisection = t.at("bisection").get<double>();
    out.tolerances.breakpoint = t.at("breakpoint").get<double>();
    out.tolerances.covariance = t.at("covariance").get<double>();
    out.tolerances.domain_slack = t.at("domain_slack").get<double>();
    out.tolerances.max_elements = t.at("max_elements").get<int>();
    out.tolerances.bisection_grid = t.at("bisection_grid").get<int>();
    out.tolerances.min_bisection_grid = t.at("min_bisection_grid").get<int>();
    if (j.contains("finite_checks")) {
      const json& f = j.at("finite_checks");
      r.dual_fixed_count = f.at("dual_fixed_count").get<std::int64_t>();
      r.centralizer_average = rational_from(f.at("centralizer_average"));
      r.twisted_class_count = f.at("twisted_class_count").get<std::int64_t>();
    }
    return r;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string render_report(const LefschetzReport& r, ReportFormat format) {
  if (format == ReportFormat::Structured)
    return report_to_json(r).dump(2) + "\n";

  std::ostringstream os;
  if (r.scene.is_object() && r.scene.contains("name"))
    os << "scene: " << r.scene["name"].get<std::string>() << '\n';
  if (r.kind == "finite-group") {
    const FixedOrbitDatum& d = r.orbits.front();
    os << "group order: " << d.stabilizer.size() << '\n';
    os << "twisted conjugacy classes: " << r.twisted_class_count << '\n';
    for (size_t i = 0; i < d.orbits.size(); ++i)
      os << "  class " << i + 1 << ": representative " << d.orbits[i].representative
         << ", size " << d.orbits[i].orbit.size() << ", twisted centralizer order "
         << d.orbits[i].stabilizer.size() << '\n';
    os << "fixed irreducible characters: " << r.dual_fixed_count << '\n';
    os << "averaged twisted centralizer: " << r.centralizer_average << '\n';
    os << "Lefschetz number: " << r.total << '\n';
    os << "character table seed: " << r.diagnostics.seed << '\n';
    return os.str();
  }

  os << "fixed orbits: " << r.orbits.size() << '\n';
  for (size_t i = 0; i < r.orbits.size(); ++i) {
    const FixedOrbitDatum& d = r.orbits[i];
    os << "orbit " << i + 1 << ": p = " << format_point(d.point) << '\n';
    os << "  isotropy (order " << d.stabilizer.size() << "): " << join(d.stabilizer) << '\n';
    os << "  L_p = g_p K_p with g_p = " << d.coset_representative << ": " << join(d.coset) << '\n';
    for (const TwistedOrbitDatum& t : d.orbits) {
      os << "  twisted orbit of " << t.representative << " (size " << t.orbit.size()
         << "), stabilizer order " << t.stabilizer.size() << '\n';
      os << "    W = " << format_matrix(t.intertwiner) << '\n';
      os << "    character:";
      for (const CharacterValue& c : t.character)
        os << ' ' << c.element << '=' << (c.value > 0 ? "+1" : "-1");
      os << '\n';
      os << "    average: " << t.average << '\n';
    }
    os << "  contribution: " << d.contribution << '\n';
  }
  os << "Lefschetz number: " << r.total << '\n';
  const Diagnostics& dg = r.diagnostics;
  os << "radius: " << dg.radius << " (" << dg.element_count << " elements), "
     << (dg.radius_certified ? "certified" : "NOT certified") << " at "
     << dg.certification_radius << '\n';
  os << "covariance residual: " << dg.covariance_residual << '\n';
  for (const std::string& w : dg.warnings)
    os << "warning: " << w << '\n';
  return os.str();
}

} // namespace orbilef
