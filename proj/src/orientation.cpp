#include "orbilef/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "orbilef/error.hpp"

namespace orbilef {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_orthogonal(const Matrix& q, double tol) {
  if (q.rows() != q.cols())
    return false;
  return max_abs(q.transpose() * q - Matrix::Identity(q.rows(), q.cols())) < tol;
}

OrthogonalRep::OrthogonalRep(GroupPtr group, int dim, std::vector<Matrix> matrices)
  : group_(std::move(group)), dim_(dim), matrices_(std::move(matrices)) {
  if (dim_ < 0)
    fail(ErrorCode::ValidationError, "negative representation dimension");
  if (matrices_.size() != size_t(group_->order()))
    fail(ErrorCode::ValidationError, "representation needs one matrix per element");
  for (Element g = 0; g < group_->order(); ++g) {
    const Matrix& q = matrices_[size_t(g)];
    if (q.rows() != dim_ || q.cols() != dim_)
      fail(ErrorCode::ValidationError, "matrix of " + group_->name(g) + " has wrong shape");
    if (!is_orthogonal(q))
      fail(ErrorCode::ValidationError, "matrix of " + group_->name(g) + " is not orthogonal");
  }
  for (Element g = 0; g < group_->order(); ++g)
    for (Element h = 0; h < group_->order(); ++h)
      if (max_abs(matrices_[size_t(g)] * matrices_[size_t(h)] -
                  matrices_[size_t(group_->mul(g, h))]) >= kMultiplicativityTol)
        fail(ErrorCode::ValidationError, "representation is not multiplicative at (" +
             group_->name(g) + ", " + group_->name(h) + ")");
}

OrthogonalRep OrthogonalRep::from_generators(GroupPtr group, int dim,
                                             const std::map<std::string, Matrix>& gens) {
  std::vector<std::pair<Element, Matrix>> edges;
  for (const GeneratorLabel& gl : group->generators()) {
    auto it = gens.find(gl.label);
    if (it == gens.end())
      fail(ErrorCode::ValidationError, "no matrix for generator '" + gl.label + "'");
    if (it->second.rows() != dim || it->second.cols() != dim)
      fail(ErrorCode::ValidationError, "matrix for '" + gl.label + "' has wrong shape");
    edges.emplace_back(gl.element, it->second);
  }
  std::vector<Matrix> mats(size_t(group->order()));
  std::vector<char> done(size_t(group->order()), 0);
  mats[0] = Matrix::Identity(dim, dim);
  done[0] = 1;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& [s, m] : edges) {
      Element y = group->mul(s, x);
      if (!done[size_t(y)]) {
        done[size_t(y)] = 1;
        mats[size_t(y)] = m * mats[size_t(x)];
        queue.push_back(y);
      }
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end())
    fail(ErrorCode::ValidationError, "generators do not generate the group");
  return OrthogonalRep(std::move(group), dim, std::move(mats));
}

Intertwiner make_intertwiner(const OrthogonalRep& rho, const Matrix& a) {
  if (a.rows() != rho.dim() || a.cols() != rho.dim())
    fail(ErrorCode::NotIntertwiner, "intertwiner has wrong shape");
  double resid = 0;
  for (const Matrix& q : rho.matrices())
    resid = std::max(resid, max_abs(a * q - q * a));
  if (resid >= kCommutationTol)
    fail(ErrorCode::NotIntertwiner,
         "commutation residual " + std::to_string(resid) + " exceeds tolerance");
  if (rho.dim() > 0 && std::abs(a.determinant()) <= 1e-12)
    fail(ErrorCode::SingularIntertwiner, "intertwiner is singular");
  return Intertwiner{a, resid};
}

Matrix fixed_subspace(const Matrix& q, double tol) {
  Eigen::Index n = q.rows();
  if (n == 0)
    return Matrix(0, 0);
  Eigen::JacobiSVD<Matrix> svd(q - Matrix::Identity(n, n), Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  double cutoff = tol * std::max(1.0, s.size() ? s.maxCoeff() : 0.0);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index i = 0; i < n; ++i)
    if (s[i] <= cutoff)
      null_cols.push_back(i);
  Matrix basis(n, Eigen::Index(null_cols.size()));
  for (size_t k = 0; k < null_cols.size(); ++k)
    basis.col(Eigen::Index(k)) = svd.matrixV().col(null_cols[k]);
  return basis;
}

int restricted_sign(const Matrix& a, const Matrix& q) {
  Matrix basis = fixed_subspace(q);
  if (basis.cols() == 0)
    return 1;
  double det = (basis.transpose() * a * basis).determinant();
  if (std::abs(det) < kAmbiguousSignTol)
    fail(ErrorCode::AmbiguousSign, "restriction to a fixed subspace is nearly singular (det " +
         std::to_string(det) + ")");
  return det > 0 ? 1 : -1;
}

ClassFunction orientation_character(const OrthogonalRep& rho, const Intertwiner& a) {
  const FiniteGroup& g = *rho.group();
  std::vector<Complex> values(size_t(g.order()));
  for (Element x = 0; x < g.order(); ++x)
    values[size_t(x)] = double(restricted_sign(a.matrix, rho(x)));
  // Signs must agree exactly on each class.
  for (const auto& cls : g.classes())
    for (Element x : cls)
      if (values[size_t(x)] != values[size_t(cls.front())])
        fail(ErrorCode::AmbiguousSign, "orientation signs differ within the class of " +
             g.name(cls.front()));
  return ClassFunction::from_elements(rho.group(), values);
}

Rational average(const ClassFunction& chi) {
  const FiniteGroup& g = *chi.group();
  std::int64_t sum = 0;
  for (int c = 0; c < g.class_count(); ++c) {
    Complex v = chi.on_class(c);
    double r = std::round(v.real());
    if (std::abs(v - Complex(r, 0)) > kClassConstancyTol)
      fail(ErrorCode::ValidationError, "average needs an integer-valued class function");
    sum += std::int64_t(r) * std::int64_t(g.classes()[size_t(c)].size());
  }
  return Rational(sum, g.order());
}

IntegralityReport integrality_check(const OrthogonalRep& rho, const Intertwiner& a,
                                    const CharacterTable& table) {
  ClassFunction chi = orientation_character(rho, a);
  std::vector<Multiplicity> m = decompose(chi, table);
  std::vector<std::int64_t> ints = integral_multiplicities(m);
  ClassFunction back = reconstruct(m, table);
  double err = 0;
  for (int c = 0; c < chi.group()->class_count(); ++c)
    err = std::max(err, std::abs(back.on_class(c) - chi.on_class(c)));
  if (err >= kCharacterTol)
    fail(ErrorCode::NonIntegralMultiplicity,
         "reconstruction error " + std::to_string(err) + " exceeds tolerance");
  return IntegralityReport{std::move(chi), std::move(ints), err};
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> row_reduce(RationalMatrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t p = row;
    while (p < m.size() && m[p][col] == Rational(0))
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[row], m[p]);
    Rational inv_pivot(m[row][col].den(), m[row][col].num());
    for (Rational& v : m[row])
      v *= inv_pivot;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == Rational(0))
        continue;
      Rational f = m[r][col];
      for (size_t c = 0; c < cols; ++c)
        m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Integer basis of the null space of m (rows x cols).
std::vector<std::vector<std::int64_t>> null_space(RationalMatrix m, size_t cols) {
  std::vector<size_t> pivots = row_reduce(m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (size_t p : pivots)
    is_pivot[p] = 1;
  std::vector<std::vector<std::int64_t>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m[i][free];
    std::int64_t lcm = 1;
    for (const Rational& x : v)
      lcm = std::lcm(lcm, x.den());
    std::vector<std::int64_t> iv;
    std::int64_t g = 0;
    for (const Rational& x : v) {
      iv.push_back(x.num() * (lcm / x.den()));
      g = std::gcd(g, iv.back());
    }
    auto first = std::find_if(iv.begin(), iv.end(), [](std::int64_t x) { return x != 0; });
    std::int64_t sign = (first != iv.end() && *first < 0) ? -1 : 1;
    for (std::int64_t& x : iv)
      x = x / g * sign;
    basis.push_back(std::move(iv));
  }
  return basis;
}

} // namespace

ModelOperatorReport model_operator_index(int n) {
  if (n < 1)
    fail(ErrorCode::InvalidArgument, "truncation must be at least 1");
  // Column j is e_{j-N}; row i is e_{i-N}.
  size_t cols = size_t(2 * n + 1), rows = size_t(2 * n + 2);
  RationalMatrix s(rows, std::vector<Rational>(cols, Rational(0)));
  auto row_of = [n](int k) { return size_t(k + n); };
  for (int k = -n; k <= n; ++k) {
    size_t c = size_t(k + n);
    if (k > 0) {
      s[row_of(k + 1)][c] = -2;
    } else if (k == 0) {
      s[row_of(0)][c] = 1;
      s[row_of(1)][c] = -1;
    } else {
      s[row_of(k)][c] = 2;
    }
  }

  ModelOperatorReport rep;
  rep.truncation = n;
  RationalMatrix work = s;
  size_t rank = row_reduce(work, cols).size();
  rep.kernel_dim = int(cols - rank);
  rep.cokernel_dim = int(rows - rank);
  rep.index = rep.kernel_dim - rep.cokernel_dim;

  RationalMatrix st(cols, std::vector<Rational>(rows, Rational(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      st[j][i] = s[i][j];
  rep.cokernel_basis = null_space(std::move(st), rows);

  for (const auto& v : rep.cokernel_basis) {
    // (sigma v)_m = -v_{1-m}
    std::vector<std::int64_t> sv(rows);
    for (int m = -n; m <= n + 1; ++m)
      sv[row_of(m)] = -v[row_of(1 - m)];
    std::int64_t lambda = 0;
    for (std::int64_t cand : {1, -1}) {
      bool eq = true;
      for (size_t i = 0; i < rows; ++i)
        eq = eq && sv[i] == cand * v[i];
      if (eq)
        lambda = cand;
    }
    rep.symmetry_eigenvalues.push_back(lambda);
  }
  return rep;
}

} // namespace orbilef
