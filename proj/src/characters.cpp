#include "orbilef/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "orbilef/error.hpp"

namespace orbilef {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a != b && !a->same_table(*b))
    fail(ErrorCode::GroupMismatch, "class functions live on different groups");
}

// Class-multiplication structure constants: a[j][k][l] is the number of
// x in C_j with x^-1 z_l in C_k, z_l the first element of C_l.
std::vector<Eigen::MatrixXd> class_matrices(const FiniteGroup& g) {
  int r = g.class_count();
  std::vector<Eigen::MatrixXd> m(size_t(r), Eigen::MatrixXd::Zero(r, r));
  for (int l = 0; l < r; ++l) {
    Element z = g.classes()[size_t(l)].front();
    for (Element x = 0; x < g.order(); ++x) {
      int j = g.class_of(x);
      int k = g.class_of(g.mul(g.inv(x), z));
      m[size_t(j)](k, l) += 1.0;
    }
  }
  return m;
}

std::int64_t key(double v) { return std::llround(v * 1e6); }

std::optional<std::vector<ClassFunction>> try_split(const GroupPtr& g,
                                                    const std::vector<Eigen::MatrixXd>& mats,
                                                    std::uint64_t seed) {
  const FiniteGroup& grp = *g;
  int r = grp.class_count();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
  for (const Eigen::MatrixXd& m : mats)
    combo += coef(rng) * m;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<Complex>());
  if (solver.info() != Eigen::Success)
    return std::nullopt;
  const Eigen::VectorXcd& lambda = solver.eigenvalues();
  double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (std::abs(lambda[a] - lambda[b]) < 1e-8 * scale)
        return std::nullopt;

  std::vector<ClassFunction> chars;
  for (int a = 0; a < r; ++a) {
    Eigen::VectorXcd omega = solver.eigenvectors().col(a);
    if (std::abs(omega[0]) < 1e-12)
      return std::nullopt;
    omega /= omega[0];
    for (int j = 0; j < r; ++j) {
      Eigen::VectorXcd resid = mats[size_t(j)].cast<Complex>() * omega - omega[j] * omega;
      if (resid.cwiseAbs().maxCoeff() > 1e-6 * std::max(1.0, omega.cwiseAbs().maxCoeff()))
        return std::nullopt;
    }
    double norm = 0;
    for (int l = 0; l < r; ++l)
      norm += std::norm(omega[l]) / double(grp.classes()[size_t(l)].size());
    double degree = std::sqrt(double(grp.order()) / norm);
    double rounded = std::round(degree);
    if (std::abs(degree - rounded) > 1e-6 || rounded < 1)
      return std::nullopt;
    std::vector<Complex> values(static_cast<size_t>(r));
    for (int l = 0; l < r; ++l)
      values[size_t(l)] = omega[l] * rounded / double(grp.classes()[size_t(l)].size());
    values[0] = rounded;
    chars.emplace_back(g, std::move(values));
  }
  return chars;
}

} // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<Complex> class_values)
  : group_(std::move(group)), values_(std::move(class_values)) {
  if (values_.size() != size_t(group_->class_count()))
    fail(ErrorCode::ValidationError, "class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::from_elements(GroupPtr group, std::span<const Complex> values) {
  if (values.size() != size_t(group->order()))
    fail(ErrorCode::ValidationError, "class function needs one value per element");
  std::vector<Complex> per_class;
  for (const auto& cls : group->classes()) {
    Complex v = values[size_t(cls.front())];
    for (Element x : cls)
      if (std::abs(values[size_t(x)] - v) > kClassConstancyTol)
        fail(ErrorCode::ValidationError, "values are not constant on the class of " +
             group->name(cls.front()));
    per_class.push_back(v);
  }
  return ClassFunction(std::move(group), std::move(per_class));
}

ClassFunction ClassFunction::constant(GroupPtr group, Complex c) {
  std::vector<Complex> v(size_t(group->class_count()), c);
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Complex> v(size_t(group->class_count()), 0.0);
  v[0] = double(group->order());
  return ClassFunction(std::move(group), std::move(v));
}

Complex inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  require_same_group(chi.group(), psi.group());
  const FiniteGroup& g = *chi.group();
  Complex sum = 0;
  for (int c = 0; c < g.class_count(); ++c)
    sum += double(g.classes()[size_t(c)].size()) * chi.on_class(c) * std::conj(psi.on_class(c));
  return sum / double(g.order());
}

CharacterTable character_table(const GroupPtr& g, std::uint64_t seed) {
  std::vector<Eigen::MatrixXd> mats = class_matrices(*g);
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    auto chars = try_split(g, mats, seed + attempt);
    if (!chars)
      continue;

    std::sort(chars->begin(), chars->end(), [](const ClassFunction& a, const ClassFunction& b) {
      std::int64_t da = key(a.on_class(0).real()), db = key(b.on_class(0).real());
      if (da != db)
        return da < db;
      for (size_t c = 0; c < a.class_values().size(); ++c) {
        auto ka = std::pair(key(a.on_class(int(c)).real()), key(a.on_class(int(c)).imag()));
        auto kb = std::pair(key(b.on_class(int(c)).real()), key(b.on_class(int(c)).imag()));
        if (ka != kb)
          return ka > kb;
      }
      return false;
    });

    bool ok = true;
    for (size_t i = 0; i < chars->size() && ok; ++i)
      for (size_t j = 0; j < chars->size() && ok; ++j) {
        Complex ip = inner_product((*chars)[i], (*chars)[j]);
        if (std::abs(ip - (i == j ? 1.0 : 0.0)) > kCharacterTol)
          ok = false;
      }
    if (!ok)
      continue;

    CharacterTable table{g, std::move(*chars), {}, seed + attempt};
    for (const ClassFunction& chi : table.irreducibles)
      table.degrees.push_back(int(std::lround(chi.on_class(0).real())));
    return table;
  }
  fail(ErrorCode::ConvergenceFailure,
       "class-matrix eigenspaces did not separate for seeds " + std::to_string(seed) +
       ".." + std::to_string(seed + 7));
}

std::vector<Multiplicity> decompose(const ClassFunction& chi, const CharacterTable& table) {
  require_same_group(chi.group(), table.group);
  std::vector<Multiplicity> out;
  for (size_t i = 0; i < table.irreducibles.size(); ++i)
    out.push_back({inner_product(chi, table.irreducibles[i]), int(i)});
  return out;
}

ClassFunction reconstruct(std::span<const Multiplicity> m, const CharacterTable& table) {
  std::vector<Complex> v(size_t(table.group->class_count()), 0.0);
  for (const Multiplicity& mi : m) {
    const ClassFunction& chi = table.irreducibles.at(size_t(mi.irreducible));
    for (size_t c = 0; c < v.size(); ++c)
      v[c] += mi.value * chi.on_class(int(c));
  }
  return ClassFunction(table.group, std::move(v));
}

std::vector<std::int64_t> integral_multiplicities(std::span<const Multiplicity> m) {
  std::vector<std::int64_t> out;
  for (const Multiplicity& mi : m) {
    double re = std::round(mi.value.real());
    if (std::abs(mi.value - Complex(re, 0.0)) >= kCharacterTol)
      fail(ErrorCode::NonIntegralMultiplicity,
           "multiplicity of irreducible " + std::to_string(mi.irreducible) + " is " +
           std::to_string(mi.value.real()) + "+" + std::to_string(mi.value.imag()) + "i");
    out.push_back(std::int64_t(re));
  }
  return out;
}

int dual_fixed_count(const CharacterTable& table, const GroupAutomorphism& zeta) {
  require_same_group(table.group, zeta.source());
  GroupAutomorphism zinv = zeta.inverse();
  const FiniteGroup& g = *table.group;
  int count = 0;
  for (const ClassFunction& chi : table.irreducibles) {
    bool fixed = true;
    for (const auto& cls : g.classes()) {
      Element z = cls.front();
      if (std::abs(chi(zinv(z)) - chi(z)) > kCharacterTol) {
        fixed = false;
        break;
      }
    }
    count += fixed;
  }
  return count;
}

BurnsideCheck burnside_identity_check(const CharacterTable& table,
                                      const GroupAutomorphism& zeta) {
  const GroupPtr& g = table.group;
  require_same_group(g, zeta.source());
  std::int64_t total = 0;
  for (Element x = 0; x < g->order(); ++x)
    total += twisted_centralizer(g, zeta, x).order();
  std::vector<Element> all(size_t(g->order()));
  std::iota(all.begin(), all.end(), 0);
  TwistedOrbitDecomposition dec = twisted_orbits(g, all, all, zeta);
  return BurnsideCheck{dual_fixed_count(table, zeta), Rational(total, g->order()),
                       int(dec.orbits.size())};
}

} // namespace orbilef
