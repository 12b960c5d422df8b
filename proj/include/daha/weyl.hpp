#pragma once

#include <compare>
#include <vector>

#include "daha/rootdata.hpp"

namespace daha {

/// Element t_a u of the affine Weyl group W x L. The finite part is kept as
/// its matrix on coweights and (redundantly) on weights, so no root datum is
/// needed for the group law. Equality is on the canonical pair (u, a).
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  static AffineWeylElement identity(std::size_t rank);
  static AffineWeylElement translation(const Exponent& a);
  AffineWeylElement(IntMatrix coweight_matrix, IntMatrix weight_matrix, Exponent translation);

  std::size_t rank() const noexcept { return a_.size(); }
  const Exponent& translation_part() const noexcept { return a_; }
  /// Finite part acting on coweights (columns are images of simple coroots).
  const IntMatrix& finite() const noexcept { return u_; }
  /// Finite part acting on weights.
  const IntMatrix& finite_on_weights() const noexcept { return uw_; }
  bool is_identity() const;
  bool is_translation() const { return u_ == IntMatrix::identity(rank()); }

  friend AffineWeylElement operator*(const AffineWeylElement& x, const AffineWeylElement& y);
  AffineWeylElement inverse() const;

  friend bool operator==(const AffineWeylElement& x, const AffineWeylElement& y) {
    return x.a_ == y.a_ && x.u_ == y.u_;
  }
  friend std::strong_ordering operator<=>(const AffineWeylElement& x, const AffineWeylElement& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.u_.a <=> y.u_.a;
  }

 private:
  IntMatrix u_, uw_;
  Exponent a_;
};

/// Simple reflection s_i, i = 0 being the affine node.
AffineWeylElement simple_reflection(const RootDatum& d, std::size_t i);
/// Reflection in an affine root (n, beta): t_{n beta^vee} s_beta.
AffineWeylElement reflection(const RootDatum& d, const AffineRoot& r);
/// Product s_{i1} ... s_{ik}.
AffineWeylElement from_word(const RootDatum& d, const std::vector<std::size_t>& word);

/// Action on affine weights: a(m, beta) = (m + <a, beta>, beta).
AffineWeight act_weight(const AffineWeylElement& w, const AffineWeight& x);
/// The o-action on L_aff: a o (m, b) = (m + Psi(a, b), b).
AffineCoweight act_circ(const RootDatum& d, const AffineWeylElement& w, const AffineCoweight& l);
/// Matrix of the o-action on L_aff coordinates (level first).
IntMatrix circ_matrix(const RootDatum& d, const AffineWeylElement& w);

/// D(w): positive affine roots sent to negative ones, in a fixed order.
std::vector<AffineRoot> inversion_set(const RootDatum& d, const AffineWeylElement& w);
/// D(w^{-1}) = {alpha > 0 : w^{-1}(alpha) < 0}, the roots made negative by
/// w^{-1}; this is the set that left coefficients of [w] see.
std::vector<AffineRoot> left_inversion_set(const RootDatum& d, const AffineWeylElement& w);
std::size_t length(const RootDatum& d, const AffineWeylElement& w);
/// True if l(w s_i) < l(w).
bool is_right_descent(const RootDatum& d, const AffineWeylElement& w, std::size_t i);
std::vector<std::size_t> reduced_word(const RootDatum& d, const AffineWeylElement& w);

/// rho_hat - w(rho_hat), as an affine weight (delta coefficient, finite part).
/// Computed as the sum over D(w^{-1}); the sum over D(w) itself is
/// rho_hat - w^{-1}(rho_hat).
AffineWeight delta_hat(const RootDatum& d, const AffineWeylElement& w);
/// Plain sum of the roots in D(w).
AffineWeight inversion_sum(const RootDatum& d, const AffineWeylElement& w);

/// Weight of an affine Kac-Moody algebra truncated to (level, finite part,
/// delta coefficient); used to evaluate rho_hat - w(rho_hat).
struct ExtendedWeight {
  std::int64_t level = 0;
  Exponent finite;
  std::int64_t delta = 0;
  friend bool operator==(const ExtendedWeight&, const ExtendedWeight&) = default;
};
ExtendedWeight act_extended(const RootDatum& d, const AffineWeylElement& w, const ExtendedWeight& x);
/// rho_hat = (-h_dual, rho, 0).
ExtendedWeight rho_hat(const RootDatum& d);
/// rho_hat - w(rho_hat), computed through the level -h_dual action.
ExtendedWeight rho_hat_defect(const RootDatum& d, const AffineWeylElement& w);

/// Subword criterion on one reduced word of w; both lengths must be <= 10.
bool bruhat_leq(const RootDatum& d, const AffineWeylElement& u, const AffineWeylElement& w);

/// All elements of length <= radius (at most 12), by breadth-first search over words,
/// ordered by (length, canonical pair). The BFS distance is returned too.
struct BallEntry {
  AffineWeylElement element;
  std::size_t word_length;
  std::vector<std::size_t> word;
};
std::vector<BallEntry> weyl_ball(const RootDatum& d, std::size_t radius);

/// Order used for serialization: by length, then by the canonical pair.
bool canonical_less(const RootDatum& d, const AffineWeylElement& x, const AffineWeylElement& y);

/// Element (w, l) of the double affine Weyl group W_hat x L_aff.
struct DoubleAffineWeylElement {
  AffineWeylElement hat;
  AffineCoweight lattice;
  friend bool operator==(const DoubleAffineWeylElement&, const DoubleAffineWeylElement&) = default;
};
DoubleAffineWeylElement dw_identity(const RootDatum& d);
DoubleAffineWeylElement dw_multiply(const RootDatum& d, const DoubleAffineWeylElement& x,
                                    const DoubleAffineWeylElement& y);

}  // namespace daha
