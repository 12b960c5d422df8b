#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daha/laurent.hpp"
#include "daha/scalar.hpp"

namespace daha {

/// Finite simply-laced root datum. Weights are written in the basis of
/// fundamental weights, coweights in the basis of simple coroots, so the
/// pairing <beta, b> is a plain dot product.
struct RootDatum {
  std::string label;
  std::size_t rank = 0;
  IntMatrix cartan;
  /// Positive roots as weight vectors, ordered by (height, lexicographic).
  std::vector<Exponent> positive_roots;
  /// The matching coroots as coweight vectors (simple-coroot coordinates).
  std::vector<Exponent> positive_coroots;
  Exponent theta;
  Exponent theta_coroot;
  Exponent rho;
  std::int64_t h_dual = 0;
  IntMatrix psi;

  Exponent simple_root(std::size_t i) const;
  Exponent simple_coroot(std::size_t i) const;

  /// Index into positive_roots of +-beta, or -1 if beta is not a root.
  int root_index(const Exponent& beta) const;
  bool is_root(const Exponent& beta) const { return root_index(beta) >= 0; }
  /// True for positive roots, and more generally for nonzero weights that are
  /// nonnegative combinations of simple roots.
  bool is_positive(const Exponent& beta) const;
  /// The coroot of a (positive or negative) root; throws DomainError otherwise.
  Exponent coroot(const Exponent& beta) const;
  /// All roots, positive ones first then their negatives.
  std::vector<Exponent> roots() const;
  /// Psi(a) as a weight vector.
  Exponent psi_of(const Exponent& a) const { return psi.apply(a); }
};

/// "A1".."A4" and "D4".
RootDatum build_root_datum(const std::string& label);
std::vector<std::string> supported_types();

std::int64_t psi_pair(const RootDatum& d, const Exponent& a, const Exponent& b);

/// Affine root (level n, finite root); also used for arbitrary affine
/// weights (n, beta) where beta need not be a root.
struct AffineRoot {
  std::int64_t level = 0;
  Exponent finite;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};
using AffineWeight = AffineRoot;

/// An element (m, b) of L_aff = Z + L, stored as the exponent (m, b_1..b_rank).
using AffineCoweight = Exponent;

/// Positive affine root: level > 0, or level 0 and a positive finite root.
bool affine_positive(const RootDatum& d, const AffineRoot& r);
AffineRoot negate(const AffineRoot& r);

/// Simple affine roots: index 0 is (1, -theta), index i is (0, alpha_i).
AffineRoot simple_affine_root(const RootDatum& d, std::size_t i);

/// Coroot of an affine root as an element of L_aff: (n, coroot). With this
/// orientation s_alpha o alpha_vee = -alpha_vee under the o-action.
AffineCoweight affine_coroot(const RootDatum& d, const AffineRoot& r);

/// Pairing of rho_hat with an element of L_aff. The level coordinate of L_aff
/// is the negative of the central coefficient, hence the sign of h_dual.
std::int64_t rho_hat_pairing(const RootDatum& d, const AffineCoweight& l);

/// Inverse: affine root whose coroot is l, if any.
std::optional<AffineRoot> root_of_coroot(const RootDatum& d, const AffineCoweight& l);

}  // namespace daha
