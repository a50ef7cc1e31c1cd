// Brute-force oracles and random generators shared by the tests.  Nothing here
// calls the routine it is used to check.
#ifndef ORBILEF_TESTS_ORACLES_HPP_
#define ORBILEF_TESTS_ORACLES_HPP_

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orbilef/catalog.hpp"
#include "orbilef/geometry.hpp"
#include "orbilef/group.hpp"
#include "orbilef/orientation.hpp"

namespace oracle {

using orbilef::Element;
using orbilef::FiniteGroup;
using orbilef::Matrix;

inline std::vector<Element> zeta_images(const orbilef::GroupAutomorphism& z) {
  return z.image();
}

// Union-find over x ~ zeta(h) x h^-1.
inline int twisted_class_count(const FiniteGroup& g, const std::vector<Element>& zeta) {
  int n = g.order();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[size_t(x)] != x)
      x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  for (Element h = 0; h < n; ++h)
    for (Element x = 0; x < n; ++x) {
      Element y = g.mul(g.mul(zeta[size_t(h)], x), g.inv(h));
      parent[size_t(find(x))] = find(y);
    }
  std::set<int> roots;
  for (int x = 0; x < n; ++x)
    roots.insert(find(x));
  return int(roots.size());
}

// Sum over g of #{h : zeta(h) g = g h}.
inline long centralizer_sum(const FiniteGroup& g, const std::vector<Element>& zeta) {
  long total = 0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element h = 0; h < g.order(); ++h)
      if (g.mul(zeta[size_t(h)], x) == g.mul(x, h))
        ++total;
  return total;
}

inline std::vector<std::set<Element>> classes(const FiniteGroup& g) {
  std::vector<std::set<Element>> out;
  std::vector<bool> seen(size_t(g.order()));
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[size_t(x)])
      continue;
    std::set<Element> c;
    for (Element h = 0; h < g.order(); ++h)
      c.insert(g.mul(g.mul(h, x), g.inv(h)));
    for (Element y : c)
      seen[size_t(y)] = true;
    out.push_back(c);
  }
  return out;
}

// Number of classes C with zeta(C) = C.  By Brauer's permutation lemma this
// is the number of irreducible characters fixed by zeta.
inline int stable_class_count(const FiniteGroup& g, const std::vector<Element>& zeta) {
  int count = 0;
  for (const auto& c : classes(g)) {
    std::set<Element> img;
    for (Element x : c)
      img.insert(zeta[size_t(x)]);
    count += img == c;
  }
  return count;
}

// Orientation character through the averaging projector onto Fix(Q).
inline int orientation_sign(const Matrix& q, const Matrix& a, int element_order) {
  long n = q.rows();
  if (n == 0)
    return 1;
  Matrix p = Matrix::Zero(n, n), power = Matrix::Identity(n, n);
  for (int k = 0; k < element_order; ++k) {
    p += power;
    power = q * power;
  }
  p /= element_order;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (p + p.transpose()));
  std::vector<long> cols;
  for (long i = 0; i < n; ++i)
    if (es.eigenvalues()[i] > 0.5)
      cols.push_back(i);
  if (cols.empty())
    return 1;
  Matrix b(n, long(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k)
    b.col(long(k)) = es.eigenvectors().col(cols[k]);
  double d = (b.transpose() * a * b).determinant();
  return d > 0 ? 1 : -1;
}

inline Matrix rotation(double angle) {
  Matrix r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

inline Matrix permutation_matrix(const std::vector<int>& p) {
  Matrix m = Matrix::Zero(long(p.size()), long(p.size()));
  for (size_t i = 0; i < p.size(); ++i)
    m(p[i], long(i)) = 1;
  return m;
}

using GeneratorMatrices = std::map<std::string, Matrix>;

// Small orthogonal representations of a named battery group, given by
// generator images.  Invalid candidates are filtered by the caller.
inline std::vector<GeneratorMatrices> representation_menu(const std::string& name,
                                                          const FiniteGroup& g) {
  std::vector<GeneratorMatrices> out;
  std::vector<std::string> labels;
  for (const auto& gl : g.generators())
    labels.push_back(gl.label);
  // +-1 on each generator; the caller keeps the homomorphisms.
  for (unsigned mask = 0; mask < (1u << labels.size()); ++mask) {
    GeneratorMatrices m;
    for (size_t i = 0; i < labels.size(); ++i)
      m[labels[i]] = Matrix::Constant(1, 1, (mask >> i) & 1 ? -1.0 : 1.0);
    out.push_back(m);
  }
  if (labels.empty())
    out.push_back({});
  const double tau = 2 * M_PI;
  if (name[0] == 'C' && name != "C1") {
    int n = std::stoi(name.substr(1));
    for (int k = 1; k < n; ++k)
      out.push_back({{"a", rotation(tau * k / n)}});
    if (n <= 4) {
      std::vector<int> cyc(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        cyc[size_t(i)] = (i + 1) % n;
      out.push_back({{"a", permutation_matrix(cyc)}});
    }
  }
  if (name[0] == 'D') {
    int m = std::stoi(name.substr(1)) / 2;
    Matrix refl(2, 2);
    refl << 1, 0, 0, -1;
    for (int k = 1; k < m; ++k)
      out.push_back({{"r", rotation(tau * k / m)}, {"s", refl}});
    if (m == 4)
      out.push_back({{"r", permutation_matrix({1, 2, 3, 0})}, {"s", permutation_matrix({0, 3, 2, 1})}});
  }
  if (name == "S3") {
    Matrix refl(2, 2);
    refl << 1, 0, 0, -1;
    out.push_back({{"r", rotation(tau / 3)}, {"s", refl}});
    out.push_back({{"s", permutation_matrix({1, 0, 2})}, {"r", permutation_matrix({1, 2, 0})}});
  }
  if (name == "Q8") {
    Matrix li(4, 4), lj(4, 4);
    // left multiplication on the basis 1, i, j, k
    li << 0, -1, 0, 0,
          1, 0, 0, 0,
          0, 0, 0, -1,
          0, 0, 1, 0;
    lj << 0, 0, -1, 0,
          0, 0, 0, 1,
          1, 0, 0, 0,
          0, -1, 0, 0;
    out.push_back({{"i", li}, {"j", lj}});
  }
  return out;
}

inline Matrix random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = gauss(rng);
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  return q;
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

struct RandomPair {
  std::string group;
  orbilef::GroupPtr g;
  std::vector<Matrix> rho;  // one matrix per element
  Matrix a;
};

// Every element's matrix from generator images, by breadth-first search over
// words.  Returns false if the images do not define a homomorphism.
inline bool extend(const FiniteGroup& g, const GeneratorMatrices& gens, int dim,
                   std::vector<Matrix>& out) {
  out.assign(size_t(g.order()), Matrix());
  out[0] = Matrix::Identity(dim, dim);
  std::vector<Element> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (const auto& gl : g.generators()) {
      Element y = g.mul(gl.element, x);
      Matrix my = gens.at(gl.label) * out[size_t(x)];
      if (out[size_t(y)].size() == 0) {
        out[size_t(y)] = my;
        queue.push_back(y);
      } else if ((out[size_t(y)] - my).cwiseAbs().maxCoeff() > 1e-9) {
        return false;
      }
    }
  }
  return true;
}

inline int rep_dim(const GeneratorMatrices& m) {
  return m.empty() ? 1 : int(m.begin()->second.rows());
}

// Random direct sum of menu representations of total dimension dim,
// conjugated by a random orthogonal matrix.
inline std::vector<Matrix> random_representation(const std::string& name, const FiniteGroup& g,
                                                 int dim, std::mt19937_64& rng) {
  std::vector<std::vector<Matrix>> valid;
  for (const auto& m : representation_menu(name, g)) {
    std::vector<Matrix> mats;
    if (extend(g, m, rep_dim(m), mats))
      valid.push_back(mats);
  }
  std::vector<Matrix> rho(size_t(g.order()), Matrix(0, 0));
  int remaining = dim;
  while (remaining > 0) {
    std::vector<size_t> fits;
    for (size_t i = 0; i < valid.size(); ++i)
      if (valid[i][0].rows() <= remaining)
        fits.push_back(i);
    const auto& pick = valid[fits[std::uniform_int_distribution<size_t>(0, fits.size() - 1)(rng)]];
    for (size_t e = 0; e < rho.size(); ++e)
      rho[e] = block_diag(rho[e], pick[e]);
    remaining -= int(pick[0].rows());
  }
  Matrix u = random_orthogonal(dim, rng);
  for (Matrix& m : rho)
    m = u * m * u.transpose();
  return rho;
}

// Group average of a random matrix, shifted by a random multiple of I.
inline Matrix random_intertwiner(const std::vector<Matrix>& rho, std::mt19937_64& rng) {
  long n = rho[0].rows();
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> shift(-1.5, 1.5);
  Matrix m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m(i, j) = gauss(rng);
  Matrix avg = Matrix::Zero(n, n);
  for (const Matrix& q : rho)
    avg += q * m * q.transpose();
  avg /= double(rho.size());
  return avg + shift(rng) * Matrix::Identity(n, n);
}

// Smallest |det(B^T A B)| over the fixed spaces, to reject near-ambiguous
// draws.
inline double sign_margin(const FiniteGroup& g, const std::vector<Matrix>& rho, const Matrix& a) {
  double margin = std::abs(a.determinant());
  for (Element x = 1; x < g.order(); ++x) {
    Matrix q = rho[size_t(x)];
    Eigen::JacobiSVD<Matrix> svd(q - Matrix::Identity(q.rows(), q.cols()), Eigen::ComputeFullV);
    Matrix v = svd.matrixV();
    long rank = 0;
    for (long i = 0; i < svd.singularValues().size(); ++i)
      rank += svd.singularValues()[i] > 1e-8;
    long k = q.rows() - rank;
    if (k == 0)
      continue;
    Matrix b = v.rightCols(k);
    margin = std::min(margin, std::abs((b.transpose() * a * b).determinant()));
  }
  return margin;
}

inline std::vector<RandomPair> random_pairs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> groups = orbilef::group_battery();
  std::vector<RandomPair> out;
  while (int(out.size()) < count) {
    size_t i = out.size();
    std::string name = groups[i % groups.size()];
    auto g = orbilef::named_group(name);
    int dim = 1 + int(i / groups.size()) % 4;
    RandomPair p{name, g, random_representation(name, *g, dim, rng), {}};
    do {
      p.a = random_intertwiner(p.rho, rng);
    } while (sign_margin(*g, p.rho, p.a) < 1e-3);
    out.push_back(std::move(p));
  }
  return out;
}

// Cubic Hermite interpolation written out from the basis polynomials.
inline double hermite(const std::vector<orbilef::HermiteKnot>& k, double x, double* slope) {
  size_t i = 0;
  while (i + 2 < k.size() && x > k[i + 1].x)
    ++i;
  double h = k[i + 1].x - k[i].x, s = (x - k[i].x) / h;
  double h00 = 2 * s * s * s - 3 * s * s + 1, h10 = s * s * s - 2 * s * s + s;
  double h01 = -2 * s * s * s + 3 * s * s, h11 = s * s * s - s * s;
  double d00 = 6 * s * s - 6 * s, d10 = 3 * s * s - 4 * s + 1;
  double d01 = -6 * s * s + 6 * s, d11 = 3 * s * s - 2 * s;
  *slope = (d00 * k[i].value + d10 * h * k[i].derivative + d01 * k[i + 1].value +
            d11 * h * k[i + 1].derivative) / h;
  return h00 * k[i].value + h10 * h * k[i].derivative + h01 * k[i + 1].value +
         h11 * h * k[i + 1].derivative;
}

// Classical Lefschetz count of the degree-one circle map induced by a
// period-one Hermite map: sum of sign(1 - f') over zeros of f(x) - x.
inline int circle_lefschetz(const std::vector<orbilef::HermiteKnot>& k, int* count) {
  const int n = 200000;
  int total = 0;
  *count = 0;
  double slope;
  double prev = hermite(k, 0, &slope) - 0;
  if (std::abs(prev) < 1e-12) {
    total += (1 - slope) > 0 ? 1 : -1;
    ++*count;
  }
  for (int i = 1; i < n; ++i) {
    double x = double(i) / n;
    double f = hermite(k, x, &slope) - x;
    if (std::abs(f) < 1e-12 || (std::abs(prev) >= 1e-12 && (f > 0) != (prev > 0))) {
      total += (1 - slope) > 0 ? 1 : -1;
      ++*count;
    }
    prev = f;
  }
  return total;
}

} // namespace oracle

#endif // ORBILEF_TESTS_ORACLES_HPP_
