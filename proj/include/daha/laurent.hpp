#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daha/scalar.hpp"

namespace daha {

/// Exponent vector of a monomial t^e on a torus Spec C[Z^n]. On the affine
/// torus the coordinates are (level m, coweight b_1..b_rank); the monomial
/// (1,0,..,0) is the central coordinate zeta.
using Exponent = std::vector<std::int64_t>;

/// Integer matrix stored row-major, square unless stated.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMatrix identity(std::size_t n);
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  Exponent apply(const Exponent& e) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

std::int64_t dot(const Exponent& a, const Exponent& b);
Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a);
Exponent scaled(const Exponent& a, std::int64_t k);
bool is_zero(const Exponent& e);
/// Positive in the lexicographic total order: first nonzero entry > 0.
bool lex_positive(const Exponent& e);
std::string exponent_to_string(const Exponent& e);

/// A monomial substitution t^e -> v^{<eta,e>} t^{A e}. Covers both the
/// straight Weyl action (eta = 0) and its q-twisted variant.
struct MonomialMap {
  IntMatrix matrix;
  Exponent v_weight;  // eta; empty means zero
  Scalar factor(const Exponent& e) const;
};

/// Sparse Laurent polynomial over Q(v) in a fixed number of variables.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Scalar>;

  explicit LaurentPoly(std::size_t dim = 0) : dim_(dim) {}
  static LaurentPoly constant(std::size_t dim, const Scalar& c);
  static LaurentPoly monomial(const Exponent& e, const Scalar& c = Scalar(1));

  std::size_t dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Coefficient of t^e (zero when absent).
  Scalar coeff(const Exponent& e) const;
  /// The constant scalar if this is c * t^0.
  std::optional<Scalar> as_constant() const;

  void add_term(const Exponent& e, const Scalar& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly scaled(const Scalar& c) const;
  LaurentPoly shifted(const Exponent& e) const;  // times t^e
  LaurentPoly pow(std::int64_t k) const;         // k >= 0
  LaurentPoly mapped(const MonomialMap& m) const;

  /// Exact division by the binomial (1 - c t^mu) with mu lex-positive.
  /// Returns nullopt when the binomial does not divide.
  std::optional<LaurentPoly> divide_binomial(const Scalar& c, const Exponent& mu) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;
  std::string to_string() const;

 private:
  std::size_t dim_;
  Terms terms_;
};

}  // namespace daha
