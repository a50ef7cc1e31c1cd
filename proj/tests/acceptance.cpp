// Acceptance checks, one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "orbilef/catalog.hpp"
#include "orbilef/characters.hpp"
#include "orbilef/error.hpp"
#include "orbilef/lefschetz.hpp"
#include "orbilef/orientation.hpp"
#include "orbilef/scene.hpp"
#include "orbilef/summary.hpp"

using namespace orbilef;

namespace {

// Pinned tolerances and budgets.
constexpr double kFixedPointTol = 1e-9;
constexpr double kIntegralityTol = 1e-6;
constexpr double kReconstructionTol = 1e-6;
constexpr double kTableTol = 1e-6;
constexpr double kExampleBudget = 1.0;   // seconds, per dihedral scene
constexpr double kBatteryBudget = 10.0;
constexpr double kIntegralityBudget = 30.0;
constexpr int kRandomPairs = 240;
constexpr int kProductPairs = 50;
constexpr std::uint64_t kPairSeed = 20250101;

std::string scene_path(const std::string& name) {
  return std::string(ORBILEF_SCENES) + "/" + name + ".json";
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass)
      note << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.note << "exception: " << e.what() << "; ";
  }
  double dt = seconds_since(t0);
  std::printf("%s  criterion %2d: %s (%.3f s) %s\n", out.pass ? "PASS" : "FAIL", n, title.c_str(),
              dt, out.note.str().c_str());
  failures += !out.pass;
}

LefschetzReport timed_run(const std::string& name, double* elapsed) {
  auto t0 = Clock::now();
  auto r = lefschetz_number(build_pair(load_scene(scene_path(name))));
  *elapsed = seconds_since(t0);
  return r;
}

std::vector<std::int64_t> contributions(const LefschetzReport& r) {
  std::vector<std::int64_t> out;
  for (const auto& d : r.orbits)
    out.push_back(d.contribution.is_integer() ? d.contribution.num() : 1 << 30);
  return out;
}

} // namespace

int main() {
  criterion(1, "dihedral example 1: one orbit at 1/4, trivial isotropy, jacobian -1, total 1",
            [](Outcome& o) {
              double dt;
              auto r = timed_run("dihedral_ex1", &dt);
              auto pair = build_pair(load_scene(scene_path("dihedral_ex1")));
              auto fps = find_fixed_points(pair).representatives;
              o.require(r.orbits.size() == 1 && fps.size() == 1, "exactly one fixed orbit");
              if (!o.pass)
                return;
              o.require(std::abs(r.orbits[0].point[0] - 0.25) < kFixedPointTol, "p = 1/4");
              o.require(r.orbits[0].stabilizer.size() == 1, "trivial isotropy");
              o.require(fps[0].jacobian(0, 0) == -1, "jacobian -1");
              o.require(r.total == Rational(1), "total 1");
              o.require(dt < kExampleBudget, "runtime");
            });

  criterion(2, "dihedral example 2: contributions 2,-1,2 and 1,1,1, totals 3", [](Outcome& o) {
    double da, db;
    auto a = timed_run("dihedral_ex2a", &da);
    auto b = timed_run("dihedral_ex2b", &db);
    o.require(contributions(a) == std::vector<std::int64_t>{2, -1, 2}, "ex2a contributions");
    o.require(a.total == Rational(3), "ex2a total");
    o.require(contributions(b) == std::vector<std::int64_t>{1, 1, 1}, "ex2b contributions");
    o.require(b.total == Rational(3), "ex2b total");
    o.require(da < kExampleBudget && db < kExampleBudget, "runtime");
    o.note << "ex2a " << da << " s, ex2b " << db << " s";
  });

  criterion(3, "finite-group identity on the automorphism battery", [](Outcome& o) {
    auto t0 = Clock::now();
    int cases = 0;
    for (const auto& c : automorphism_battery()) {
      auto g = named_group(c.group);
      auto z = parse_automorphism(g, c.zeta);
      auto t = character_table(g);
      auto b = burnside_identity_check(t, z);
      int brute = oracle::twisted_class_count(*g, z.image());
      long csum = oracle::centralizer_sum(*g, z.image());
      bool ok = b.consistent() && b.twisted_class_count == brute &&
                b.centralizer_average == Rational(csum, g->order()) &&
                Rational(csum, g->order()) == Rational(brute) &&
                finite_case_lefschetz(t, z).total == Rational(brute);
      o.require(ok, c.group + " " + c.zeta);
      ++cases;
    }
    o.require(seconds_since(t0) < kBatteryBudget, "runtime");
    o.note << cases << " cases";
  });

  auto pairs = oracle::random_pairs(kRandomPairs, kPairSeed);

  criterion(4, "orientation characters have integral multiplicities", [&](Outcome& o) {
    auto t0 = Clock::now();
    double worst_int = 0, worst_rec = 0;
    std::set<long> dims;
    for (const auto& p : pairs) {
      OrthogonalRep rho(p.g, int(p.a.rows()), p.rho);
      auto a = make_intertwiner(rho, p.a);
      auto chi = orientation_character(rho, a);
      auto table = character_table(p.g);
      for (const auto& m : decompose(chi, table))
        worst_int = std::max(worst_int, std::abs(m.value - std::round(m.value.real())));
      worst_rec = std::max(worst_rec, integrality_check(rho, a, table).reconstruction_error);
      dims.insert(p.a.rows());
    }
    o.require(int(pairs.size()) >= 200, "at least 200 pairs");
    o.require(dims == std::set<long>{1, 2, 3, 4}, "dimensions 1 to 4");
    o.require(worst_int < kIntegralityTol, "multiplicities integral");
    o.require(worst_rec < kReconstructionTol, "reconstruction");
    o.require(seconds_since(t0) < kIntegralityBudget, "runtime");
    o.note << pairs.size() << " pairs, max distance to integer " << worst_int
           << ", max reconstruction error " << worst_rec;
  });

  criterion(5, "polar part gives the same character", [&](Outcome& o) {
    for (const auto& p : pairs) {
      OrthogonalRep rho(p.g, int(p.a.rows()), p.rho);
      Eigen::JacobiSVD<Matrix> svd(p.a, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Matrix polar = svd.matrixU() * svd.matrixV().transpose();
      auto ca = orientation_character(rho, make_intertwiner(rho, p.a));
      auto co = orientation_character(rho, make_intertwiner(rho, polar));
      o.require(ca.class_values() == co.class_values(), p.group);
    }
    o.note << pairs.size() << " pairs";
  });

  criterion(6, "product rule on block-diagonal pairs", [&](Outcome& o) {
    std::mt19937_64 rng(kPairSeed + 6);
    for (int i = 0; i < kProductPairs; ++i) {
      const auto& p = pairs[size_t(i)];
      int d2 = 1 + i % 3;
      auto rho2 = oracle::random_representation(p.group, *p.g, d2, rng);
      Matrix a2;
      do {
        a2 = oracle::random_intertwiner(rho2, rng);
      } while (oracle::sign_margin(*p.g, rho2, a2) < 1e-3);
      std::vector<Matrix> sum;
      for (size_t e = 0; e < p.rho.size(); ++e)
        sum.push_back(oracle::block_diag(p.rho[e], rho2[e]));
      OrthogonalRep r1(p.g, int(p.a.rows()), p.rho), r2(p.g, d2, rho2),
          rs(p.g, int(p.a.rows()) + d2, sum);
      auto c1 = orientation_character(r1, make_intertwiner(r1, p.a));
      auto c2 = orientation_character(r2, make_intertwiner(r2, a2));
      auto cs = orientation_character(rs, make_intertwiner(rs, oracle::block_diag(p.a, a2)));
      for (Element x = 0; x < p.g->order(); ++x)
        o.require(cs(x) == c1(x) * c2(x), p.group);
    }
    o.note << kProductPairs << " pairs";
  });

  criterion(7, "model operator: kernel 0, cokernel e0+e1, index -1, symmetry -1", [](Outcome& o) {
    for (int n = 1; n <= 16; ++n) {
      auto m = model_operator_index(n);
      bool ok = m.kernel_dim == 0 && m.cokernel_dim == 1 && m.index == -1 &&
                m.symmetry_eigenvalues == std::vector<std::int64_t>{-1};
      for (int k = -n; ok && k <= n + 1; ++k)
        ok = m.coefficient(0, k) == (k == 0 || k == 1 ? 1 : 0);
      o.require(ok, "N = " + std::to_string(n));
    }
  });

  criterion(8, "character tables: orthogonality and degree sum", [](Outcome& o) {
    double worst = 0;
    for (const std::string& name : group_battery()) {
      auto g = named_group(name);
      auto t = character_table(g);
      int sum = 0;
      for (int d : t.degrees)
        sum += d * d;
      o.require(sum == g->order(), name + " degree sum");
      for (size_t i = 0; i < t.irreducibles.size(); ++i)
        for (size_t j = 0; j < t.irreducibles.size(); ++j)
          worst = std::max(worst, std::abs(inner_product(t.irreducibles[i], t.irreducibles[j]) -
                                           Complex(i == j ? 1.0 : 0.0)));
    }
    o.require(worst < kTableTol, "orthogonality");
    o.note << "max deviation " << worst;
  });

  criterion(9, "classical reductions: free circle map 0, contraction 1", [](Outcome& o) {
    double dt;
    auto circle = timed_run("free_circle", &dt);
    auto knots = std::get<Piecewise1D>(load_scene(scene_path("free_circle")).phi).knots;
    int count = 0;
    int classical = oracle::circle_lefschetz(knots, &count);
    o.require(circle.total == Rational(0), "free circle total");
    o.require(classical == 0 && count == 2, "classical sign sum");
    o.require(int(circle.orbits.size()) == count, "fixed point count");
    for (const auto& d : circle.orbits)
      o.require(d.stabilizer.size() == 1, "free action");
    o.require(timed_run("trivial_contraction", &dt).total == Rational(1), "contraction");
  });

  criterion(10, "structured reports are byte-identical across runs", [](Outcome& o) {
    int scenes = 0;
    for (const auto& entry : std::filesystem::directory_iterator(ORBILEF_SCENES)) {
      if (entry.path().extension() != ".json")
        continue;
      auto s = load_scene(entry.path().string());
      std::string a = lefschetz_summary(s, kDefaultSeed).data.dump(2);
      std::string b = lefschetz_summary(load_scene(entry.path().string()), kDefaultSeed).data.dump(2);
      o.require(a == b, entry.path().filename().string());
      ++scenes;
    }
    o.note << scenes << " scenes";
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
