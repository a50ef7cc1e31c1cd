#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "orbilef/catalog.hpp"
#include "orbilef/characters.hpp"
#include "orbilef/error.hpp"

using namespace orbilef;

namespace {

std::vector<std::int64_t> rounded(const std::vector<Multiplicity>& m) {
  return integral_multiplicities(m);
}

} // namespace

TEST_CASE("inner products") {
  auto s3 = named_group("S3");
  auto one = ClassFunction::constant(s3, 1);
  CHECK(std::abs(inner_product(one, one) - Complex(1)) < 1e-12);
  CHECK(std::abs(inner_product(ClassFunction::regular(s3), one) - Complex(1)) < 1e-12);
  auto t = character_table(s3);
  for (size_t i = 0; i < t.irreducibles.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      CHECK(std::abs(inner_product(t.irreducibles[i], t.irreducibles[j])) < 1e-6);

  auto c2 = named_group("C2");
  bool threw = false;
  try {
    inner_product(one, ClassFunction::constant(c2, 1));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::GroupMismatch;
  }
  CHECK(threw);
}

TEST_CASE("small character tables") {
  auto triv = character_table(named_group("trivial"));
  REQUIRE(triv.irreducibles.size() == 1);
  CHECK(std::abs(triv.irreducibles[0](0) - Complex(1)) < 1e-12);

  auto c4 = named_group("C4");
  auto t4 = character_table(c4);
  REQUIRE(t4.irreducibles.size() == 4);
  const Complex roots[] = {1, Complex(0, 1), -1, Complex(0, -1)};
  for (const auto& chi : t4.irreducibles)
    for (Element x = 0; x < 4; ++x) {
      double best = 1e9;
      for (Complex r : roots)
        best = std::min(best, std::abs(chi(x) - r));
      CHECK(best < 1e-9);
    }

  auto t6 = character_table(named_group("S3"));
  CHECK(t6.degrees == std::vector<int>{1, 1, 2});
}

TEST_CASE("battery tables: orthogonality and degree sum") {
  for (const std::string& name : group_battery()) {
    auto g = named_group(name);
    auto t = character_table(g);
    CHECK_MESSAGE(int(t.irreducibles.size()) == g->class_count(), name);
    int sum = 0;
    for (int d : t.degrees)
      sum += d * d;
    CHECK_MESSAGE(sum == g->order(), name);
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
      CHECK(std::abs(t.irreducibles[i](0) - Complex(t.degrees[i])) < 1e-6);
      for (size_t j = 0; j < t.irreducibles.size(); ++j) {
        Complex ip = inner_product(t.irreducibles[i], t.irreducibles[j]);
        CHECK(std::abs(ip - Complex(i == j ? 1 : 0)) < 1e-6);
      }
    }
    // column orthogonality: sum_i chi_i(x) conj chi_i(y) = |C(x)| delta
    for (int c = 0; c < g->class_count(); ++c)
      for (int d = 0; d < g->class_count(); ++d) {
        Complex s = 0;
        for (const auto& chi : t.irreducibles)
          s += chi.on_class(c) * std::conj(chi.on_class(d));
        double expect = c == d ? double(g->order()) / double(g->classes()[size_t(c)].size()) : 0;
        CHECK(std::abs(s - expect) < 1e-6);
      }
  }
}

TEST_CASE("table is deterministic for a seed and independent of it up to order") {
  auto g = named_group("D12");
  auto a = character_table(g, 7), b = character_table(g, 7), c = character_table(g, 99);
  REQUIRE(a.irreducibles.size() == c.irreducibles.size());
  for (size_t i = 0; i < a.irreducibles.size(); ++i) {
    CHECK(a.irreducibles[i].class_values() == b.irreducibles[i].class_values());
    for (int k = 0; k < g->class_count(); ++k)
      CHECK(std::abs(a.irreducibles[i].on_class(k) - c.irreducibles[i].on_class(k)) < 1e-6);
  }
}

TEST_CASE("decomposition") {
  auto s3 = named_group("S3");
  auto t = character_table(s3);
  auto m = rounded(decompose(ClassFunction::constant(s3, 1), t));
  CHECK(m == std::vector<std::int64_t>{1, 0, 0});
  auto reg = rounded(decompose(ClassFunction::regular(s3), t));
  CHECK(reg == std::vector<std::int64_t>{1, 1, 2});

  // (-1, +1) on the order-2 group
  auto c2 = named_group("C2");
  auto t2 = character_table(c2);
  std::vector<Complex> vals{-1, 1};
  auto chi = ClassFunction::from_elements(c2, vals);
  auto m2 = rounded(decompose(chi, t2));
  // the unique integer vector reproducing the values
  auto back = reconstruct(decompose(chi, t2), t2);
  CHECK(std::abs(back(0) - Complex(-1)) < 1e-9);
  CHECK(std::abs(back(1) - Complex(1)) < 1e-9);
  CHECK(m2 == std::vector<std::int64_t>{0, -1});

  // decompose o reconstruct on random integer combinations
  for (const std::string& name : group_battery()) {
    auto g = named_group(name);
    auto tab = character_table(g);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Multiplicity> m0;
    for (size_t i = 0; i < tab.irreducibles.size(); ++i)
      m0.push_back({double(coef(rng)), int(i)});
    auto m1 = decompose(reconstruct(m0, tab), tab);
    for (size_t i = 0; i < m0.size(); ++i)
      CHECK(std::abs(m1[i].value - m0[i].value) < 1e-6);
  }

  std::vector<Multiplicity> half{{0.5, 0}};
  bool threw = false;
  try {
    integral_multiplicities(half);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::NonIntegralMultiplicity;
  }
  CHECK(threw);
}

TEST_CASE("class functions must be class functions") {
  auto s3 = named_group("S3");
  std::vector<Complex> vals(6, 0.0);
  vals[size_t(*s3->generator("s"))] = 1;
  bool threw = false;
  try {
    ClassFunction::from_elements(s3, vals);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::ValidationError;
  }
  CHECK(threw);
}

TEST_CASE("dual fixed count") {
  auto s3 = named_group("S3");
  CHECK(dual_fixed_count(character_table(s3), GroupAutomorphism::identity(s3)) == 3);
  auto c3 = named_group("C3");
  CHECK(dual_fixed_count(character_table(c3), parse_automorphism(c3, "inv")) == 1);
  auto v4 = named_group("V4");
  CHECK(dual_fixed_count(character_table(v4), parse_automorphism(v4, "a=b,b=a")) == 2);
}

TEST_CASE("dual fixed count is invariant under inner twists") {
  for (const auto& c : automorphism_battery()) {
    auto g = named_group(c.group);
    auto z = parse_automorphism(g, c.zeta);
    auto t = character_table(g);
    int base = dual_fixed_count(t, z);
    CHECK(base == oracle::stable_class_count(*g, z.image()));
    for (Element x = 0; x < g->order(); ++x)
      CHECK(dual_fixed_count(t, GroupAutomorphism::inner(g, x).after(z)) == base);
  }
}

TEST_CASE("finite-group identity") {
  auto triv = named_group("trivial");
  auto b0 = burnside_identity_check(character_table(triv), GroupAutomorphism::identity(triv));
  CHECK(b0.dual_fixed == 1);
  CHECK(b0.centralizer_average == Rational(1));
  CHECK(b0.twisted_class_count == 1);

  auto c2 = named_group("C2");
  auto b2 = burnside_identity_check(character_table(c2), GroupAutomorphism::identity(c2));
  CHECK(b2.dual_fixed == 2);
  CHECK(b2.centralizer_average == Rational(2));
  CHECK(b2.twisted_class_count == 2);

  auto c3 = named_group("C3");
  auto z3 = parse_automorphism(c3, "inv");
  auto b3 = burnside_identity_check(character_table(c3), z3);
  CHECK(b3.dual_fixed == 1);
  CHECK(b3.centralizer_average == Rational(1));
  CHECK(b3.twisted_class_count == 1);
  // zeta(h) = h forces h = e, so every twisted centralizer is trivial
  CHECK(oracle::centralizer_sum(*c3, z3.image()) == 3);
  CHECK(oracle::twisted_class_count(*c3, z3.image()) == 1);

  for (const auto& c : automorphism_battery()) {
    auto g = named_group(c.group);
    auto z = parse_automorphism(g, c.zeta);
    auto b = burnside_identity_check(character_table(g), z);
    CHECK_MESSAGE(b.consistent(), c.group << ' ' << c.zeta);
    CHECK(b.twisted_class_count == oracle::twisted_class_count(*g, z.image()));
    CHECK(b.centralizer_average ==
          Rational(oracle::centralizer_sum(*g, z.image()), g->order()));
    CHECK(b.dual_fixed == oracle::stable_class_count(*g, z.image()));
  }
  // every inner automorphism: twisted count equals the class count
  for (const std::string& name : group_battery()) {
    auto g = named_group(name);
    auto t = character_table(g);
    for (Element x = 0; x < g->order(); ++x) {
      auto b = burnside_identity_check(t, GroupAutomorphism::inner(g, x));
      CHECK(b.consistent());
      CHECK(b.twisted_class_count == g->class_count());
    }
  }
}
