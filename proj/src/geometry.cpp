#include "orbilef/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>

#include "orbilef/error.hpp"

namespace orbilef {

namespace {

constexpr double kBucketWidth = 1e-3;
constexpr double kSideProbe = 1e-7;

std::size_t hash_cell(const std::vector<long long>& cell) {
  std::size_t h = 1469598103934665603ULL;
  for (long long c : cell)
    h = (h ^ std::hash<long long>{}(c)) * 1099511628211ULL;
  return h;
}

std::vector<long long> cell_of(const Vector& t) {
  std::vector<long long> cell(size_t(t.size()));
  for (Eigen::Index i = 0; i < t.size(); ++i)
    cell[size_t(i)] = std::llround(t[i] / kBucketWidth);
  return cell;
}

// Visits the 3^n cells around t.
void for_neighbor_cells(const Vector& t, const std::function<void(std::size_t)>& visit) {
  std::vector<long long> base = cell_of(t);
  std::vector<long long> cur = base;
  size_t n = base.size();
  std::vector<int> offset(n, -1);
  while (true) {
    for (size_t i = 0; i < n; ++i)
      cur[i] = base[i] + offset[i];
    visit(hash_cell(cur));
    size_t k = 0;
    while (k < n && offset[k] == 1) {
      offset[k] = -1;
      ++k;
    }
    if (k == n)
      break;
    ++offset[k];
  }
}

using Buckets = std::unordered_multimap<std::size_t, std::size_t>;

Buckets bucket_items(const std::vector<AffineIsometry>& items) {
  Buckets map;
  for (size_t i = 0; i < items.size(); ++i)
    map.emplace(hash_cell(cell_of(items[i].translation)), i);
  return map;
}

// Smallest index i with items[i] within tol of g.
std::optional<size_t> find_in(const Buckets& map, const std::vector<AffineIsometry>& items,
                              const AffineIsometry& g, double tol) {
  std::optional<size_t> best;
  for_neighbor_cells(g.translation, [&](std::size_t key) {
    auto [lo, hi] = map.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (items[it->second].distance(g) < tol && (!best || it->second < *best))
        best = it->second;
  });
  return best;
}

struct Hermite {
  double value;
  double slope;
};

Hermite hermite(const HermiteKnot& k0, const HermiteKnot& k1, double y) {
  double len = k1.x - k0.x;
  double s = (y - k0.x) / len;
  double s2 = s * s, s3 = s2 * s;
  double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
  double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  double d00 = 6 * s2 - 6 * s, d10 = 3 * s2 - 4 * s + 1;
  double d01 = -6 * s2 + 6 * s, d11 = 3 * s2 - 2 * s;
  return {h00 * k0.value + h10 * len * k0.derivative + h01 * k1.value + h11 * len * k1.derivative,
          (d00 * k0.value + d10 * len * k0.derivative + d01 * k1.value +
           d11 * len * k1.derivative) / len};
}

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return a[i] < b[i];
  return false;
}

std::string describe(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

} // namespace

AffineIsometry AffineIsometry::identity(int dim) {
  return {Matrix::Identity(dim, dim), Vector::Zero(dim), {}};
}

AffineIsometry AffineIsometry::compose(const AffineIsometry& rhs) const {
  Word w = word;
  w.insert(w.end(), rhs.word.begin(), rhs.word.end());
  return {linear * rhs.linear, linear * rhs.translation + translation, std::move(w)};
}

AffineIsometry AffineIsometry::inverse() const {
  Matrix qt = linear.transpose();
  return {qt, -(qt * translation), inverse_word(word)};
}

double AffineIsometry::distance(const AffineIsometry& o) const {
  double d = 0;
  if (linear.size())
    d = (linear - o.linear).cwiseAbs().maxCoeff();
  if (translation.size())
    d = std::max(d, (translation - o.translation).cwiseAbs().maxCoeff());
  return d;
}

bool Box::contains(const Vector& x, double slack) const {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] - slack || x[i] > hi[i] + slack)
      return false;
  return true;
}

GeometricGroup::GeometricGroup(int dim, std::vector<std::string> labels,
                               std::vector<AffineIsometry> generators, Box domain,
                               double radius, GeometricTolerances tol)
  : dim_(dim), labels_(std::move(labels)), generators_(std::move(generators)),
    domain_(std::move(domain)), radius_(radius), tol_(tol) {
  if (dim_ < 0)
    fail(ErrorCode::ValidationError, "dimension must be non-negative");
  if (!(radius_ > 0) || !std::isfinite(radius_))
    fail(ErrorCode::ValidationError, "enumeration radius must be positive and finite");
  if (labels_.size() != generators_.size())
    fail(ErrorCode::ValidationError, "one label per generator required");
  if (domain_.lo.size() != dim_ || domain_.hi.size() != dim_)
    fail(ErrorCode::ValidationError, "fundamental domain has wrong dimension");
  for (Eigen::Index i = 0; i < dim_; ++i)
    if (!(domain_.lo[i] <= domain_.hi[i]))
      fail(ErrorCode::ValidationError, "fundamental domain corners are not ordered");
  for (size_t s = 0; s < generators_.size(); ++s) {
    AffineIsometry& g = generators_[s];
    if (g.linear.rows() != dim_ || g.linear.cols() != dim_ || g.translation.size() != dim_)
      fail(ErrorCode::ValidationError, "generator '" + labels_[s] + "' has wrong dimension");
    if (!is_orthogonal(g.linear))
      fail(ErrorCode::ValidationError, "generator '" + labels_[s] + "' is not an isometry");
    g.word = {Letter{int(s), false}};
  }

  std::vector<AffineIsometry> letters;
  for (size_t s = 0; s < generators_.size(); ++s) {
    letters.push_back(generators_[s]);
    letters.push_back(generators_[s].inverse());
  }
  double explore = radius_ + generator_step() + 1e-9;

  std::vector<AffineIsometry> found{AffineIsometry::identity(dim_)};
  std::unordered_multimap<std::size_t, std::size_t> index;
  auto lookup = [&](const AffineIsometry& g) -> bool {
    bool hit = false;
    for_neighbor_cells(g.translation, [&](std::size_t key) {
      auto [lo, hi] = index.equal_range(key);
      for (auto it = lo; it != hi && !hit; ++it)
        hit = found[it->second].distance(g) < tol_.dedup;
    });
    return hit;
  };
  index.emplace(hash_cell(cell_of(found[0].translation)), 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (const AffineIsometry& s : letters) {
      AffineIsometry y = s.compose(found[x]);
      if (y.translation.norm() > explore || lookup(y))
        continue;
      if (found.size() >= size_t(tol_.max_elements))
        fail(ErrorCode::ExplosionGuard,
             "more than " + std::to_string(tol_.max_elements) +
             " elements within the exploration radius; the action may not be proper");
      index.emplace(hash_cell(cell_of(y.translation)), found.size());
      queue.push_back(found.size());
      found.push_back(std::move(y));
    }
  }
  for (AffineIsometry& g : found)
    if (g.translation.norm() <= radius_ + 1e-9)
      elements_.push_back(std::move(g));
  buckets_ = bucket_items(elements_);
}


double GeometricGroup::generator_step() const {
  double step = 0;
  for (const AffineIsometry& g : generators_)
    step = std::max(step, g.translation.norm());
  return step;
}

std::optional<std::size_t> GeometricGroup::find(const AffineIsometry& g) const {
  return find_in(buckets_, elements_, g, tol_.dedup);
}

AffineIsometry GeometricGroup::evaluate(const Word& w) const {
  AffineIsometry r = AffineIsometry::identity(dim_);
  for (const Letter& l : w) {
    const AffineIsometry& s = generators_.at(size_t(l.generator));
    r = r.compose(l.inverse ? s.inverse() : s);
  }
  r.word = w;
  return r;
}

std::string GeometricGroup::name(std::size_t element) const {
  return format_word(elements_.at(element).word, labels_);
}

GeometricGroup GeometricGroup::with_radius(double radius) const {
  return GeometricGroup(dim_, labels_, generators_, domain_, radius, tol_);
}

std::vector<AffineIsometry> enumerate_elements(const GeometricGroup& g) {
  return g.elements();
}

CovariantPair::CovariantPair(GeometricGroup group, PhiMap phi, std::map<std::string, Word> zeta)
  : group_(std::move(group)), phi_(std::move(phi)), zeta_words_(std::move(zeta)) {
  int n = group_.dim();
  if (const auto* a = std::get_if<AffineMap>(&phi_)) {
    if (a->linear.rows() != n || a->linear.cols() != n || a->translation.size() != n)
      fail(ErrorCode::ValidationError, "affine phi has wrong dimension");
  } else {
    const auto& pw = std::get<Piecewise1D>(phi_);
    if (n != 1)
      fail(ErrorCode::ValidationError, "piecewise phi requires dimension 1");
    if (pw.knots.size() < 2)
      fail(ErrorCode::ValidationError, "piecewise phi needs at least two knots");
    for (size_t i = 1; i < pw.knots.size(); ++i)
      if (!(pw.knots[i].x > pw.knots[i - 1].x))
        fail(ErrorCode::ValidationError, "knots must be strictly increasing");
  }

  for (const std::string& label : group_.labels()) {
    auto it = zeta_words_.find(label);
    if (it == zeta_words_.end())
      fail(ErrorCode::ValidationError, "zeta has no image for generator '" + label + "'");
    zeta_generators_.push_back(group_.evaluate(it->second));
  }
  for (const auto& [label, _] : zeta_words_)
    if (std::find(group_.labels().begin(), group_.labels().end(), label) == group_.labels().end())
      fail(ErrorCode::ValidationError, "zeta names undeclared generator '" + label + "'");

  for (const AffineIsometry& g : group_.elements())
    zeta_images_.push_back(this->zeta(g));

  // zeta(s x) == zeta(s) zeta(x) along every Cayley edge inside the set.
  const auto& elems = group_.elements();
  for (size_t x = 0; x < elems.size(); ++x)
    for (size_t s = 0; s < group_.generators().size(); ++s) {
      auto y = group_.find(group_.generators()[s].compose(elems[x]));
      if (!y)
        continue;
      AffineIsometry expect = zeta_generators_[s].compose(zeta_images_[x]);
      if (expect.distance(zeta_images_[*y]) >= group_.tolerances().dedup)
        fail(ErrorCode::NotAHomomorphism, "zeta is inconsistent on " + group_.name(*y));
    }
  zeta_buckets_ = bucket_items(zeta_images_);
  for (size_t i = 0; i < zeta_images_.size(); ++i)
    if (zeta_preimage(zeta_images_[i]) != i)
      fail(ErrorCode::NotBijective, "zeta is not injective on the enumerated elements");

  if (is_piecewise())
    build_folding();
  covariance_residual_ = compute_covariance_residual();
  if (!(covariance_residual_ < group_.tolerances().covariance))
    fail(ErrorCode::ValidationError, "covariance residual " +
         std::to_string(covariance_residual_) + " exceeds tolerance");
}

AffineIsometry CovariantPair::zeta(const AffineIsometry& g) const {
  AffineIsometry r = AffineIsometry::identity(group_.dim());
  for (const Letter& l : g.word) {
    const AffineIsometry& s = zeta_generators_.at(size_t(l.generator));
    r = r.compose(l.inverse ? s.inverse() : s);
  }
  return r;
}

std::optional<std::size_t> CovariantPair::zeta_preimage(const AffineIsometry& target) const {
  return find_in(zeta_buckets_, zeta_images_, target, group_.tolerances().dedup);
}

double CovariantPair::compute_covariance_residual() const {
  double resid = 0;
  if (const auto* a = std::get_if<AffineMap>(&phi_)) {
    for (size_t s = 0; s < group_.generators().size(); ++s) {
      const AffineIsometry& g = group_.generators()[s];
      const AffineIsometry& z = zeta_generators_[s];
      resid = std::max(resid, max_abs(a->linear * z.linear - g.linear * a->linear));
      Vector dt = a->linear * z.translation + a->translation - g.linear * a->translation -
                  g.translation;
      if (dt.size())
        resid = std::max(resid, dt.cwiseAbs().maxCoeff());
    }
    return resid;
  }
  const auto& knots = std::get<Piecewise1D>(phi_).knots;
  double a = knots.front().x, b = knots.back().x;
  constexpr int kProbes = 100;
  for (size_t s = 0; s < group_.generators().size(); ++s) {
    const AffineIsometry& g = group_.generators()[s];
    const AffineIsometry& z = zeta_generators_[s];
    for (int k = 0; k < kProbes; ++k) {
      Vector x = Vector::Constant(1, a + (b - a) * (k + 0.5) / kProbes);
      Vector lhs = evaluate(z.apply(x), Side::Right).value;
      Vector rhs = g.apply(evaluate(x, Side::Right).value);
      resid = std::max(resid, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return resid;
}

PhiValue CovariantPair::evaluate_piecewise(double x, Side side) const {
  const auto& knots = std::get<Piecewise1D>(phi_).knots;
  double a = knots.front().x, b = knots.back().x;
  double probe = x + (side == Side::Right ? kSideProbe : side == Side::Left ? -kSideProbe : 0.0);
  // x = zeta(m) y with y in [a, b] gives phi(x) = m phi(y).
  for (size_t i = 0; i < fold_from_.size(); ++i) {
    const AffineIsometry& h = fold_from_[i];
    double q = h.linear(0, 0), t = h.translation[0];
    double yp = q * probe + t;
    if (yp < a - 1e-12 || yp > b + 1e-12)
      continue;
    double y = std::clamp(q * x + t, a, b);
    double ref = side == Side::Any ? y : yp;
    size_t piece = 0;
    while (piece + 2 < knots.size() && ref > knots[piece + 1].x)
      ++piece;
    Hermite hv = hermite(knots[piece], knots[piece + 1], y);
    const AffineIsometry& m = fold_to_[i];
    return PhiValue{Vector::Constant(1, m.linear(0, 0) * hv.value + m.translation[0]),
                    Matrix::Constant(1, 1, m.linear(0, 0) * hv.slope * q)};
  }
  fail(ErrorCode::OutOfReach, "no enumerated element folds x = " + std::to_string(x) +
       " into the map's domain; raise the radius");
}

void CovariantPair::build_folding() {
  const auto& knots = std::get<Piecewise1D>(phi_).knots;
  double reach = std::max(std::abs(knots.front().x), std::abs(knots.back().x));
  for (int k = 0; k < group_.dim(); ++k)
    reach = std::max({reach, std::abs(group_.domain().lo[k]), std::abs(group_.domain().hi[k])});
  double stretch = 0;
  for (const AffineIsometry& z : zeta_generators_)
    stretch = std::max(stretch, z.translation.cwiseAbs().maxCoeff());
  // Evaluation points lie within radius + reach; folding them back needs
  // that much again, plus room for one-sided probes and for zeta's stretch.
  double r = group_.radius() + 2 * reach + 2 * group_.generator_step() + stretch;
  GeometricGroup big = group_.with_radius(r);
  for (const AffineIsometry& m : big.elements()) {
    fold_from_.push_back(this->zeta(m).inverse());
    fold_to_.push_back(m);
  }
}

PhiValue CovariantPair::evaluate(const Vector& x, Side side) const {
  if (x.size() != group_.dim())
    fail(ErrorCode::InvalidArgument, "point has wrong dimension");
  if (const auto* a = std::get_if<AffineMap>(&phi_))
    return PhiValue{a->linear * x + a->translation, a->linear};
  if (side != Side::Any)
    return evaluate_piecewise(x[0], side);
  PhiValue left = evaluate_piecewise(x[0], Side::Left);
  PhiValue right = evaluate_piecewise(x[0], Side::Right);
  if (std::abs(left.value[0] - right.value[0]) > 1e-9)
    fail(ErrorCode::ValidationError, "equivariant extension is discontinuous at " +
         std::to_string(x[0]));
  double jl = left.jacobian(0, 0), jr = right.jacobian(0, 0);
  if (std::abs(jl - jr) > 1e-9 * std::max(1.0, std::abs(jl)))
    fail(ErrorCode::NonDifferentiable, "one-sided derivatives differ at " + std::to_string(x[0]));
  return right;
}

std::vector<double> CovariantPair::breakpoints(double lo, double hi) const {
  std::vector<double> out;
  const auto* pw = std::get_if<Piecewise1D>(&phi_);
  if (!pw)
    return out;
  for (const AffineIsometry& k : group_.elements())
    for (const HermiteKnot& knot : pw->knots) {
      double b = k.linear(0, 0) * knot.x + k.translation[0];
      if (b >= lo && b <= hi)
        out.push_back(b);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double u, double v) { return std::abs(u - v) <= 1e-12; }),
            out.end());
  return out;
}

PhiValue evaluate_phi(const CovariantPair& pair, const Vector& x) {
  return pair.evaluate(x);
}

namespace {

struct Candidate {
  Vector p;
  std::size_t element;
  Matrix jacobian;
  double residual;
};

void affine_candidates(const CovariantPair& pair, std::vector<Candidate>& out) {
  const auto& phi = std::get<AffineMap>(pair.phi());
  const GeometricGroup& grp = pair.group();
  const GeometricTolerances& tol = grp.tolerances();
  int n = grp.dim();
  for (size_t i = 0; i < grp.elements().size(); ++i) {
    const AffineIsometry& g = grp.elements()[i];
    Matrix jac = phi.linear * g.linear;
    Matrix m = Matrix::Identity(n, n) - jac;
    Vector rhs = phi.linear * g.translation + phi.translation;
    double det = n ? m.determinant() : 1.0;
    if (std::abs(det) <= tol.transversality) {
      Vector x = m.completeOrthogonalDecomposition().solve(rhs);
      if ((m * x - rhs).norm() < tol.point && grp.domain().contains(x, tol.domain_slack))
        fail(ErrorCode::TangencyDetected, "I - d(phi o " + grp.name(i) +
             ") is singular at a fixed point; the map is not in general position");
      continue;
    }
    Vector x = m.partialPivLu().solve(rhs);
    if (!grp.domain().contains(x, tol.domain_slack))
      continue;
    Vector img = phi.linear * g.apply(x) + phi.translation;
    out.push_back({x, i, jac, (img - x).norm()});
  }
}

void piecewise_candidates(const CovariantPair& pair, std::vector<Candidate>& out,
                          std::vector<std::string>& warnings) {
  const GeometricGroup& grp = pair.group();
  const GeometricTolerances& tol = grp.tolerances();
  double lo = grp.domain().lo[0] - tol.domain_slack;
  double hi = grp.domain().hi[0] + tol.domain_slack;
  int grid = std::max(tol.bisection_grid, 2);
  if (tol.bisection_grid < tol.min_bisection_grid)
    warnings.push_back("MissedRootRisk: bisection grid " + std::to_string(tol.bisection_grid) +
                       " is coarser than the minimum " + std::to_string(tol.min_bisection_grid));

  for (size_t i = 0; i < grp.elements().size(); ++i) {
    const AffineIsometry& g = grp.elements()[i];
    double q = g.linear(0, 0), c = g.translation[0];
    auto f = [&](double t) {
      return pair.evaluate(Vector::Constant(1, q * t + c), Side::Right).value[0] - t;
    };
    double glo = std::min(q * lo + c, q * hi + c), ghi = std::max(q * lo + c, q * hi + c);
    std::vector<double> bps;
    for (double b : pair.breakpoints(glo, ghi))
      bps.push_back(q * (b - c));
    std::sort(bps.begin(), bps.end());
    std::vector<double> nodes{lo};
    for (double b : bps)
      if (b > lo && b < hi)
        nodes.push_back(b);
    nodes.push_back(hi);

    std::vector<double> roots;
    auto is_breakpoint = [&](double t) {
      return std::any_of(bps.begin(), bps.end(), [&](double b) { return std::abs(b - t) <= 1e-12; });
    };
    for (size_t k = 0; k + 1 < nodes.size(); ++k) {
      double a = nodes[k], b = nodes[k + 1];
      if (b - a <= 1e-14)
        continue;
      std::vector<double> ts(size_t(grid) + 1), fs(size_t(grid) + 1);
      for (int j = 0; j <= grid; ++j) {
        ts[size_t(j)] = j == grid ? b : a + (b - a) * j / grid;
        fs[size_t(j)] = f(ts[size_t(j)]);
      }
      for (int j = 0; j <= grid; ++j) {
        double t = ts[size_t(j)], ft = fs[size_t(j)];
        double zero_tol = is_breakpoint(t) ? tol.point : tol.bisection;
        if (std::abs(ft) <= zero_tol)
          roots.push_back(t);
      }
      for (int j = 0; j < grid; ++j) {
        double fa = fs[size_t(j)], fb = fs[size_t(j) + 1];
        if (std::abs(fa) <= tol.bisection || std::abs(fb) <= tol.bisection || (fa > 0) == (fb > 0))
          continue;
        double l = ts[size_t(j)], r = ts[size_t(j) + 1], fl = fa, mid = l;
        for (int it = 0; it < 200; ++it) {
          mid = 0.5 * (l + r);
          double fm = f(mid);
          if (std::abs(fm) <= tol.bisection || r - l < 1e-15)
            break;
          if ((fm > 0) == (fl > 0)) {
            l = mid;
            fl = fm;
          } else {
            r = mid;
          }
        }
        roots.push_back(mid);
      }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double u, double v) { return std::abs(u - v) <= 1e-10; }),
                roots.end());

    for (double t : roots) {
      double nearest = 1e300;
      for (double b : bps)
        nearest = std::min(nearest, std::abs(b - t));
      double slope;
      Vector gt = Vector::Constant(1, q * t + c);
      if (nearest <= 1e-12 || nearest >= tol.breakpoint) {
        slope = pair.evaluate(gt, Side::Any).jacobian(0, 0);
      } else {
        fail(ErrorCode::NonDifferentiable,
             "fixed point of phi o " + grp.name(i) + " at " + std::to_string(t) +
             " lies within " + std::to_string(tol.breakpoint) + " of a breakpoint");
      }
      double residual = std::abs(f(t));
      if (residual >= tol.point)
        continue;
      out.push_back({Vector::Constant(1, t), i, Matrix::Constant(1, 1, slope * q), residual});
    }
  }
}

} // namespace

FixedPointSearch find_fixed_points(const CovariantPair& pair) {
  const GeometricGroup& grp = pair.group();
  const GeometricTolerances& tol = grp.tolerances();
  FixedPointSearch out;
  std::vector<Candidate> cands;
  if (pair.is_piecewise())
    piecewise_candidates(pair, cands, out.warnings);
  else
    affine_candidates(pair, cands);

  int n = grp.dim();
  for (const Candidate& c : cands) {
    double margin = n ? std::abs((Matrix::Identity(n, n) - c.jacobian).determinant()) : 1.0;
    if (margin <= tol.transversality)
      fail(ErrorCode::TangencyDetected, "|det(I - d(phi o " + grp.name(c.element) + "))| = " +
           std::to_string(margin) + " at " + describe(c.p));
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (lex_less(a.p, b.p))
      return true;
    if (lex_less(b.p, a.p))
      return false;
    return a.element < b.element;
  });
  for (const Candidate& c : cands) {
    bool seen = false;
    for (const GeometricFixedPoint& r : out.representatives) {
      for (const AffineIsometry& s : grp.elements())
        if ((s.apply(c.p) - r.p).norm() < tol.dedup) {
          seen = true;
          break;
        }
      if (seen)
        break;
    }
    if (seen)
      continue;
    double margin = n ? std::abs((Matrix::Identity(n, n) - c.jacobian).determinant()) : 1.0;
    out.representatives.push_back({c.p, c.element, c.jacobian, margin, c.residual});
  }
  return out;
}

PointStabilizer point_stabilizer(const GeometricGroup& g, const Vector& p) {
  const GeometricTolerances& tol = g.tolerances();
  std::vector<std::size_t> members;
  for (size_t i = 0; i < g.elements().size(); ++i)
    if ((g.elements()[i].apply(p) - p).norm() < tol.point)
      members.push_back(i);
  int k = int(members.size());
  std::vector<Element> table(size_t(k) * size_t(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto prod = g.find(g.elements()[members[size_t(a)]].compose(g.elements()[members[size_t(b)]]));
      auto it = prod ? std::find(members.begin(), members.end(), *prod) : members.end();
      if (it == members.end())
        fail(ErrorCode::NotClosed, "stabilizer of " + describe(p) +
             " is truncated by the enumeration radius; raise the radius");
      table[size_t(a) * size_t(k) + size_t(b)] = Element(it - members.begin());
    }
  std::vector<std::string> names;
  for (std::size_t i : members)
    names.push_back(g.name(i));
  return PointStabilizer{
      std::make_shared<const FiniteGroup>(k, std::move(table), std::vector<GeneratorLabel>{},
                                          std::move(names)),
      std::move(members)};
}

CosetSet L_set(const CovariantPair& pair, const Vector& p, const PointStabilizer& stab) {
  const GeometricGroup& g = pair.group();
  const GeometricTolerances& tol = g.tolerances();
  CosetSet out;
  for (size_t i = 0; i < g.elements().size(); ++i) {
    Vector img = pair.evaluate(g.elements()[i].apply(p), Side::Right).value;
    if ((img - p).norm() < tol.point)
      out.elements.push_back(i);
  }
  if (out.elements.empty())
    fail(ErrorCode::CosetMismatch, "no enumerated g satisfies phi(g p) = p at " + describe(p));
  out.representative = *std::min_element(out.elements.begin(), out.elements.end(),
                                          [&](std::size_t a, std::size_t b) {
    size_t la = g.elements()[a].word.size(), lb = g.elements()[b].word.size();
    return la != lb ? la < lb : a < b;
  });
  if (out.elements.size() != stab.elements.size())
    fail(ErrorCode::CosetMismatch, "L_p has " + std::to_string(out.elements.size()) +
         " elements but the stabilizer has " + std::to_string(stab.elements.size()));
  AffineIsometry rep_inv = g.elements()[out.representative].inverse();
  for (std::size_t i : out.elements) {
    auto k = g.find(rep_inv.compose(g.elements()[i]));
    if (!k || std::find(stab.elements.begin(), stab.elements.end(), *k) == stab.elements.end())
      fail(ErrorCode::CosetMismatch, "L_p is not a single coset of the stabilizer; raise the radius");
  }
  return out;
}

} // namespace orbilef
