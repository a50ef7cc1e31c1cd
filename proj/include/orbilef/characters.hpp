// Class functions, character tables and the twisted counting identity.
#ifndef ORBILEF_CHARACTERS_HPP_
#define ORBILEF_CHARACTERS_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "orbilef/group.hpp"
#include "orbilef/rational.hpp"

namespace orbilef {

using Complex = std::complex<double>;

inline constexpr double kClassConstancyTol = 1e-9;
inline constexpr double kCharacterTol = 1e-6;
inline constexpr std::uint64_t kDefaultSeed = 20250101;

// A complex-valued function on a finite group, stored per conjugacy class.
class ClassFunction {
public:
  ClassFunction(GroupPtr group, std::vector<Complex> class_values);
  // Throws ValidationError if the values are not constant on classes.
  static ClassFunction from_elements(GroupPtr group, std::span<const Complex> values);
  static ClassFunction constant(GroupPtr group, Complex c);
  // |G| at the identity, 0 elsewhere.
  static ClassFunction regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  Complex operator()(Element g) const { return values_[group_->class_of(g)]; }
  Complex on_class(int c) const { return values_[size_t(c)]; }
  const std::vector<Complex>& class_values() const { return values_; }

private:
  GroupPtr group_;
  std::vector<Complex> values_;
};

// (1/|G|) sum_g chi(g) conj(psi(g)); throws GroupMismatch.
Complex inner_product(const ClassFunction& chi, const ClassFunction& psi);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  std::vector<int> degrees;
  std::uint64_t seed = kDefaultSeed;  // seed that produced the splitting
};

// Burnside's method: common eigenvectors of the class-multiplication matrices,
// split with a seeded random combination.  The seed schedule is seed, seed+1,
// ..., seed+7; ConvergenceFailure if none separates the eigenvalues.
CharacterTable character_table(const GroupPtr& g, std::uint64_t seed = kDefaultSeed);

struct Multiplicity {
  Complex value;
  int irreducible;
};

// m_i = <chi, chi_i> for every irreducible, in table order.
std::vector<Multiplicity> decompose(const ClassFunction& chi, const CharacterTable& table);

ClassFunction reconstruct(std::span<const Multiplicity> m, const CharacterTable& table);

// Rounds every multiplicity; throws NonIntegralMultiplicity if any residual is
// at least kCharacterTol.
std::vector<std::int64_t> integral_multiplicities(std::span<const Multiplicity> m);

// Number of irreducibles with chi o zeta^-1 == chi.
int dual_fixed_count(const CharacterTable& table, const GroupAutomorphism& zeta);

struct BurnsideCheck {
  int dual_fixed;
  Rational centralizer_average;
  int twisted_class_count;
  bool consistent() const {
    return centralizer_average == Rational(dual_fixed) &&
           twisted_class_count == dual_fixed;
  }
};

BurnsideCheck burnside_identity_check(const CharacterTable& table,
                                      const GroupAutomorphism& zeta);

} // namespace orbilef

#endif // ORBILEF_CHARACTERS_HPP_
