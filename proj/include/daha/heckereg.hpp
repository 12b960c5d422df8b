#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "daha/cherednik.hpp"

namespace daha {

/// c_w = prod over D(w) of (1 - t^{alpha^vee}) / (1 - q t^{alpha^vee}), q = v^2.
RatFun c_function(const RootDatum& d, const AffineWeylElement& w);

/// A_w, realized as [w] in the star-mode algebra.
AlgebraElement make_A(std::shared_ptr<const RootDatum> d, const AffineWeylElement& w);

/// tau_{w,l} = c_w [w] * t^l [e]. The shift sits on the right, which is the
/// side for which tau_{w,l+l'} = tau_{w,l'} tau_{e,l}.
AlgebraElement make_tau_hecke(std::shared_ptr<const RootDatum> d, const AffineWeylElement& w,
                              const AffineCoweight& l);

/// The Iwahori-Hecke generator c_i [s_i] + (1 - c_i) [e], with c_i the
/// c-function of s_i. It satisfies (T - 1)(T + q^{-1}) = 0 and is the image
/// of v^{-1} tau_i under the straight-to-star shift.
AlgebraElement make_T(std::shared_ptr<const RootDatum> d, std::size_t i);

/// Membership in the Hecke algebra for a star-mode element written in the
/// A basis. Throws DomainError for straight-mode input.
MembershipReport check_H_membership(const AlgebraElement& x);

/// Rational function in one variable x over Q(v), kept reduced with a monic
/// denominator.
class UnivariateRat {
 public:
  using Poly = std::vector<Scalar>;  // coefficient of x^k at index k

  UnivariateRat() : den_{Scalar(1)} {}
  UnivariateRat(Poly num, Poly den);
  static UnivariateRat constant(const Scalar& c);
  static UnivariateRat x_power(std::int64_t k, const Scalar& c = Scalar(1));
  /// sum c_k x^k over a finite set of (possibly negative) k.
  static UnivariateRat laurent(const std::map<std::int64_t, Scalar>& coeffs);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.empty(); }

  UnivariateRat operator-() const;
  friend UnivariateRat operator+(const UnivariateRat& a, const UnivariateRat& b);
  friend UnivariateRat operator-(const UnivariateRat& a, const UnivariateRat& b);
  friend UnivariateRat operator*(const UnivariateRat& a, const UnivariateRat& b);
  friend UnivariateRat operator/(const UnivariateRat& a, const UnivariateRat& b);
  friend bool operator==(const UnivariateRat& a, const UnivariateRat& b) = default;

  /// Substitutes x -> c x.
  UnivariateRat rescaled(const Scalar& c) const;
  /// ord_x at 0; nullopt for the zero function.
  std::optional<std::int64_t> order_at_zero() const;
  /// True if the only possible pole is at x = 0.
  bool poles_only_at_zero() const;
  /// Laurent coefficients at x = 0 from the lowest order up to x^upto.
  std::map<std::int64_t, Scalar> laurent_expansion(std::int64_t upto) const;

  std::string to_string(const char* var = "x") const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

struct TruncationBudget {
  int order = 8;       // series order N
  std::int64_t q0 = 2; // residue field size
  int depth = 5;       // level depth of the rank-1 cell enumeration
};

/// The criterion ord f_i >= -1 and Res f_0 + Res f_1 = 0. Throws DomainError
/// if either function has a pole away from 0.
bool lattice_preservation(const UnivariateRat& f0, const UnivariateRat& f1);

/// Brute force: f_0 e(x) + f_1 e(-x) has no negative powers of x for every
/// e = x^j, 0 <= j <= budget.order.
bool lattice_preservation_oracle(const UnivariateRat& f0, const UnivariateRat& f1, const TruncationBudget& budget);

/// Rank-1 intertwiner integral at lambda^{alpha^vee} = X.
struct Rank1Result {
  Rational oracle;       // point count over the residue rings, at X = q0^{-s}
  Rational closed_form;  // partial geometric sum at X = q0^{-s}
  std::vector<std::pair<int, std::int64_t>> strata;  // (depth k, number of points)
};

/// Partial sum 1 + (1 - q^{-1}) sum_{k=1}^{depth} (qX)^k as a polynomial in X.
UnivariateRat rank1_partial_sum(int depth);
/// The series summed in closed form.
UnivariateRat rank1_full_sum();
/// (1 - X)/(1 - qX), the rank-1 c-function factor.
UnivariateRat rank1_c_factor();
/// Full sum minus the partial sum of the given depth, summed in closed form.
UnivariateRat rank1_tail(int depth);
/// The constant with full sum = constant * c-factor.
Scalar rank1_normalization();

/// Runs both computations. Throws CapacityError if the budget cannot be
/// stratified (depth < 1, q0 < 2, or too many residue classes).
Rank1Result rank1_intertwiner_oracle(const TruncationBudget& budget, int s);

/// Value of a scalar that is a rational function of q = v^2 at q = q0.
Rational eval_at_q(const Scalar& c, const Rational& q0);
Rational eval_at_q(const UnivariateRat& f, const Rational& q0, const Rational& x);

}  // namespace daha
