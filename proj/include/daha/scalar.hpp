#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace daha {

using Rational = mpq_class;

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// coefficient vector never carries trailing zeros, so the zero polynomial is
/// the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  bool is_monomial() const noexcept;
  /// Lowest index with a nonzero coefficient (0 for zero).
  std::size_t low_degree() const noexcept;

  Rational eval(const Rational& x) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rational& c) const;
  QPoly shifted(std::size_t k) const;  // multiply by x^k

  /// Euclidean division; throws ArithmeticError on a zero divisor.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  static QPoly gcd(const QPoly& a, const QPoly& b);  // monic, or zero
  QPoly monic() const;

  friend bool operator==(const QPoly& a, const QPoly& b) = default;
  friend std::strong_ordering operator<=>(const QPoly& a, const QPoly& b);

  std::string to_string(const char* var = "v") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// An element of the field Q(v). The Hecke parameter is q = v^2 and the
/// Cherednik parameter is r = v. Always stored reduced with a monic
/// denominator.
class Scalar {
 public:
  Scalar() : num_(), den_(QPoly::constant(1)) {}
  Scalar(long n) : Scalar(Rational(n)) {}  // NOLINT(implicit)
  Scalar(const Rational& c);               // NOLINT(implicit)
  Scalar(QPoly num, QPoly den);

  static Scalar v() { return Scalar(QPoly::monomial(1, 1), QPoly::constant(1)); }
  static Scalar q() { return v_power(2); }
  /// v^k for any integer k.
  static Scalar v_power(std::int64_t k);

  const QPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  /// True for c * v^k with c rational.
  bool is_monomial() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inverse() const;
  Scalar pow(std::int64_t k) const;

  /// Value at a rational v; throws ArithmeticError at a pole.
  Rational eval(const Rational& at) const;

  friend bool operator==(const Scalar& a, const Scalar& b) = default;
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace daha
