#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "daha/laurent.hpp"

namespace daha {

/// The binomial (1 - c t^mu), always stored with mu lex-positive.
struct Binomial {
  Exponent mu;
  Scalar c;
  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend std::strong_ordering operator<=>(const Binomial& a, const Binomial& b) {
    if (auto o = a.mu <=> b.mu; o != 0) return o;
    return a.c <=> b.c;
  }
  LaurentPoly as_poly() const;
};

/// Rational function on a torus whose denominator is a product of binomials
/// (1 - c t^mu)^k. Every value is kept reduced: no denominator binomial
/// divides the numerator.
class RatFun {
 public:
  using Denominator = std::map<Binomial, int>;

  explicit RatFun(std::size_t dim = 0) : num_(dim) {}
  RatFun(LaurentPoly num);  // NOLINT(implicit)
  RatFun(LaurentPoly num, Denominator den);
  /// With reduce = false the common binomial factors are left in place; the
  /// value is still correct but not in reduced form.
  RatFun(LaurentPoly num, Denominator den, bool reduce);

  static RatFun constant(std::size_t dim, const Scalar& c);
  static RatFun monomial(const Exponent& e, const Scalar& c = Scalar(1));
  /// 1 / (1 - c t^mu)^mult for any nonzero mu (orientation is normalized).
  static RatFun inverse_binomial(const Scalar& c, const Exponent& mu, int mult = 1);

  std::size_t dim() const noexcept { return num_.dim(); }
  const LaurentPoly& num() const noexcept { return num_; }
  const Denominator& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.empty(); }
  std::optional<Scalar> as_constant() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun scaled(const Scalar& c) const;
  /// Multiplicative inverse. Only numerators that are a monomial or a
  /// binomial can be inverted inside the representation.
  RatFun inverse() const;
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  RatFun mapped(const MonomialMap& m) const;

  /// Mathematical equality (the difference reduces to zero).
  friend bool operator==(const RatFun& a, const RatFun& b);
  /// Representation equality, used for serialization round trips.
  bool same_representation(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  Denominator den_;
};

/// The hypersurface {t^direction = value} of the torus; `direction` must be
/// primitive.
struct Hypersurface {
  Exponent direction;
  Scalar value;
};

/// A unimodular change of coordinates e' = forward * e with
/// forward * direction = (1,0,...,0); backward is its inverse.
struct AdaptedBasis {
  IntMatrix forward;
  IntMatrix backward;
};

/// Builds an adapted basis for a primitive vector. Different `variant`
/// values give different completions of the same first basis vector.
AdaptedBasis adapted_basis(const Exponent& direction, int variant = 0);

/// Vanishing order along the hypersurface; nullopt stands for +infinity
/// (the zero function).
std::optional<std::int64_t> ord_along(const RatFun& f, const Hypersurface& h, int variant = 0);

/// Coefficient of (x - z)^{-1} where x = t^direction in the adapted basis,
/// as a rational function of the remaining dim-1 coordinates.
RatFun residue_along(const RatFun& f, const Hypersurface& h, int variant = 0);

/// residue_along(f) + residue_along(g), computed without reducing the
/// individual residues.
RatFun residue_sum_along(const RatFun& f, const RatFun& g, const Hypersurface& h, int variant = 0);

/// Restriction of a function regular along h to the hypersurface.
RatFun restrict_to(const RatFun& f, const Hypersurface& h, int variant = 0);

}  // namespace daha
