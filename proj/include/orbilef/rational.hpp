// Exact rationals over int64 for character averages and Lefschetz totals.
#ifndef ORBILEF_RATIONAL_HPP_
#define ORBILEF_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "orbilef/error.hpp"

namespace orbilef {

class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0)
      fail(ErrorCode::InvalidArgument, "rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return double(num_) / double(den_); }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) {
    std::int64_t g = std::gcd(den_, o.den_);
    num_ = add(mul(num_, o.den_ / g), mul(o.num_, den_ / g));
    den_ = mul(den_ / g, o.den_);
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    // cross-reduce first so small results never overflow
    std::int64_t g1 = std::gcd(num_, o.den_), g2 = std::gcd(o.num_, den_);
    num_ = mul(num_ / g1, o.num_ / g2);
    den_ = mul(den_ / g2, o.den_ / g1);
    normalize();
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend bool operator==(const Rational& a, const Rational& b) = default;

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
      fail(ErrorCode::Internal, "rational overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
      fail(ErrorCode::Internal, "rational overflow");
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace orbilef

#endif // ORBILEF_RATIONAL_HPP_
