#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "daha/groupalg.hpp"

namespace daha {

/// An A-torsor over a finite set X, A = Z^n, trivialized by one base point
/// per x. A point is written (x, a), meaning base_point(x) + a.
struct FiniteTorsor {
  std::vector<std::string> base;      // labels of X
  std::size_t lattice_dim = 0;
  std::vector<Exponent> base_points;  // one per x, in absolute coordinates

  std::size_t size() const noexcept { return base.size(); }
  void validate() const;
};

using TorsorPoint = std::pair<std::size_t, Exponent>;

/// Finitely supported function on the torus points, no stored zeros.
class TorsorFunction {
 public:
  using Values = std::map<TorsorPoint, Scalar>;

  explicit TorsorFunction(FiniteTorsor torsor);
  const FiniteTorsor& torsor() const noexcept { return torsor_; }
  const Values& values() const noexcept { return values_; }
  Scalar at(std::size_t x, const Exponent& a) const;
  void set(std::size_t x, const Exponent& a, const Scalar& c);
  void add(std::size_t x, const Exponent& a, const Scalar& c);

  /// (T_c phi)(x, a) = phi(x, a - c).
  TorsorFunction translated(const Exponent& c) const;
  /// The same function written against new base points.
  TorsorFunction retrivialized(const std::vector<Exponent>& new_base_points) const;

  friend bool operator==(const TorsorFunction& a, const TorsorFunction& b) {
    return a.torsor_.base_points == b.torsor_.base_points && a.values_ == b.values_;
  }

 private:
  FiniteTorsor torsor_;
  Values values_;
};

/// phi -> (sum_a phi(x, a) t^a)_x.
std::vector<LaurentPoly> mellin(const TorsorFunction& phi);
TorsorFunction mellin_inverse(const FiniteTorsor& torsor, const std::vector<LaurentPoly>& images);

/// A unimodular simplicial cone, given by a Z-basis of generators.
class Cone {
 public:
  explicit Cone(std::vector<Exponent> generators);
  /// w(L+), the image of the cone of positive affine coroots.
  static Cone weyl_image(const RootDatum& d, const AffineWeylElement& w);

  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  std::size_t dim() const noexcept { return gens_.size(); }
  /// Coordinates of a lattice point in the generator basis.
  Exponent coordinates(const Exponent& p) const;
  Exponent point(const Exponent& coords) const;
  bool contains(const Exponent& p) const;
  /// Graded degree: the sum of the generator coordinates.
  std::int64_t degree(const Exponent& p) const;
  /// Graded order: by degree, ties broken lexicographically.
  bool graded_less(const Exponent& a, const Exponent& b) const;
  Cone opposite() const;

 private:
  std::vector<Exponent> gens_;
  IntMatrix inverse_;  // rows map absolute coordinates to generator coordinates
};

using TermList = std::vector<std::pair<Exponent, Scalar>>;

/// num / prod (1 - c t^mu)^k with every mu in the cone, supported in
/// shift + cone, truncated to graded degree `order`.
struct ConeSeries {
  Cone cone;
  Exponent shift;
  LaurentPoly numerator;
  std::vector<std::pair<Binomial, int>> denominators;
  int order = 0;
};

/// Orients the denominators of f into the cone. Throws ExpansionDomainError
/// if some binomial exponent lies in neither the cone nor its negative.
ConeSeries cone_expand(const RatFun& f, const Cone& cone, int order);
/// The expansion terms of degree <= series.order, in graded order.
TermList series_terms(const ConeSeries& series);
/// The summation map.
RatFun cone_sum(const ConeSeries& series);
/// Recovers the numerator from truncated terms by multiplying back by the
/// denominators and keeping degrees <= order.
LaurentPoly resum_terms(const TermList& terms, const std::vector<std::pair<Binomial, int>>& denominators,
                        const Cone& cone, int order);

/// Straight <-> star transfer t^l -> q^{+-<rho_hat,l>} t^l on the
/// coefficients: straight input goes to star mode with the + sign, star
/// input back to straight mode. Each direction inverts the other.
AlgebraElement rho_shift(const AlgebraElement& x);
RatFun rho_shift_coefficient(const RootDatum& d, const RatFun& f, int sign);

}  // namespace daha
