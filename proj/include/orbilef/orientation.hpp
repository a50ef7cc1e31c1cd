// Orientation characters of (orthogonal representation, intertwiner) pairs
// and the one-dimensional model operator.
#ifndef ORBILEF_ORIENTATION_HPP_
#define ORBILEF_ORIENTATION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orbilef/characters.hpp"
#include "orbilef/group.hpp"
#include "orbilef/rational.hpp"

namespace orbilef {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kOrthogonalityTol = 1e-9;
inline constexpr double kMultiplicativityTol = 1e-8;
inline constexpr double kCommutationTol = 1e-8;
inline constexpr double kFixedRankTol = 1e-8;
inline constexpr double kAmbiguousSignTol = 1e-10;

double max_abs(const Matrix& m);
bool is_orthogonal(const Matrix& q, double tol = kOrthogonalityTol);

// rho: Gamma -> O(n), one matrix per element.
class OrthogonalRep {
public:
  // Validates orthogonality and multiplicativity (ValidationError).
  OrthogonalRep(GroupPtr group, int dim, std::vector<Matrix> matrices);
  // Extends generator matrices along the Cayley graph.
  static OrthogonalRep from_generators(GroupPtr group, int dim,
                                       const std::map<std::string, Matrix>& gens);

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const Matrix& operator()(Element g) const { return matrices_[size_t(g)]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

private:
  GroupPtr group_;
  int dim_;
  std::vector<Matrix> matrices_;
};

struct Intertwiner {
  Matrix matrix;
  double commutation_residual = 0;
};

// Throws NotIntertwiner or SingularIntertwiner.
Intertwiner make_intertwiner(const OrthogonalRep& rho, const Matrix& a);

// Orthonormal basis (columns) of ker(Q - I).  Singular values of Q - I below
// tol * max(1, largest singular value) count as zero.
Matrix fixed_subspace(const Matrix& q, double tol = kFixedRankTol);

// sign det(A restricted to Fix(Q)); +1 on a zero-dimensional fixed space.
// Throws AmbiguousSign if |det| < kAmbiguousSignTol.
int restricted_sign(const Matrix& a, const Matrix& q);

// g -> sign det(A|Fix(rho(g))).
ClassFunction orientation_character(const OrthogonalRep& rho, const Intertwiner& a);

// (1/|G|) sum_g chi(g) for an integer-valued class function (ValidationError
// otherwise).
Rational average(const ClassFunction& chi);

struct IntegralityReport {
  ClassFunction character;
  std::vector<std::int64_t> multiplicities;  // table order
  double reconstruction_error;
};

// Throws NonIntegralMultiplicity if the orientation character is not a
// virtual character within kCharacterTol.
IntegralityReport integrality_check(const OrthogonalRep& rho, const Intertwiner& a,
                                    const CharacterTable& table);

// S e_n = -2 e_{n+1} (n > 0), e_0 - e_1 (n = 0), 2 e_n (n < 0), truncated to
// the domain span{e_-N..e_N} and codomain span{e_-N..e_N+1}.
struct ModelOperatorReport {
  int truncation = 0;
  int kernel_dim = 0;
  int cokernel_dim = 0;
  // Cokernel basis vectors as (orthogonal complement of the image) with
  // integer coefficients on e_-N..e_N+1, first nonzero coefficient positive.
  std::vector<std::vector<std::int64_t>> cokernel_basis;
  int index = 0;
  // Scalar by which the reflection e_n -> -e_{1-n} acts on each cokernel
  // basis vector (0 if the vector is not an eigenvector).
  std::vector<std::int64_t> symmetry_eigenvalues;

  // Coefficient of e_k in cokernel basis vector i.
  std::int64_t coefficient(size_t i, int k) const {
    return cokernel_basis.at(i).at(size_t(k + truncation));
  }
};

ModelOperatorReport model_operator_index(int truncation);

} // namespace orbilef

#endif // ORBILEF_ORIENTATION_HPP_
