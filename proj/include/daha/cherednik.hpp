#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daha/groupalg.hpp"

namespace daha {

/// Which residue is compared with Res(f_w) along T_{alpha,z}: the coefficient
/// of s_alpha w as it stands, or its pullback by s_alpha.
enum class ResidueTwist { none, pullback };

std::string to_string(ResidueTwist t);
ResidueTwist residue_twist_from_string(const std::string& s);

/// Loci of the membership conditions. For a positive affine root alpha the
/// pole locus is t^{alpha^vee} = pole_value * q^{height_shift * (<rho_hat, alpha^vee> - 1)}
/// and the vanishing locus is the same with vanish_value.
struct MembershipConfig {
  Scalar pole_value;
  Scalar vanish_value;
  ResidueTwist residue_twist = ResidueTwist::none;
  std::int64_t height_shift = 0;

  Scalar pole_at(const RootDatum& d, const AffineRoot& alpha) const;
  Scalar vanish_at(const RootDatum& d, const AffineRoot& alpha) const;

  /// Straight-mode residue model: poles on t^{alpha^vee} = 1, zeros on r^2.
  static MembershipConfig cherednik();
  /// Star-mode Hecke side: poles on q^{-1} and zeros on 1 for simple roots,
  /// shifted by q^{1 - height} for the others.
  static MembershipConfig hecke();
  static MembershipConfig named(const std::string& name);
};

enum class ViolationKind { stray_pole, high_order_pole, residue_mismatch, missing_vanishing };
std::string to_string(ViolationKind k);
ViolationKind violation_kind_from_string(const std::string& s);

struct Violation {
  ViolationKind kind;
  AffineWeylElement w;
  /// Root whose hypersurface is involved; unset for stray poles that do not
  /// lie on any root hypersurface.
  std::optional<AffineRoot> alpha;
  Scalar value;
  RatFun detail;
  std::string message;
};

struct MembershipReport {
  bool compliant = true;
  std::vector<Violation> violations;
};

MembershipReport check_membership(const AlgebraElement& x, const MembershipConfig& cfg);

/// Demazure-Lusztig generator tau_i = a(X)[s_i] + b(X)[e], X = t^{alpha_i^vee},
/// a = (r - r^{-1} X)/(1 - X), b = (r - r^{-1})/(1 - X^{-1}), r = v.
/// sign = -1 flips the sign of b; it exists for mutation testing.
AlgebraElement make_tau(std::shared_ptr<const RootDatum> d, std::size_t i, int sign = 1);
/// tau_i^{-1} = tau_i - (r - r^{-1}).
AlgebraElement make_tau_inverse(std::shared_ptr<const RootDatum> d, std::size_t i);
/// Product of tau_i along a word.
AlgebraElement make_tau_word(std::shared_ptr<const RootDatum> d, const std::vector<std::size_t>& word);
/// Y_a = t^{(0,a)} [e], realized by a monomial of the torus.
AlgebraElement make_Y(std::shared_ptr<const RootDatum> d, const Exponent& a);
/// zeta = t^{(1,0)} [e].
AlgebraElement make_zeta(std::shared_ptr<const RootDatum> d);

/// Tokens: tauI, tauI^-1, Y[a1,..,an], Y[..]^-1, zeta, zeta^-1, e.
AlgebraElement evaluate_word(std::shared_ptr<const RootDatum> d, const std::vector<std::string>& tokens);
std::vector<std::string> tokenize_word(const std::string& text);

struct RelationResult {
  bool holds;
  AlgebraElement difference;  // lhs - rhs
};
RelationResult verify_relation(std::shared_ptr<const RootDatum> d, const std::vector<std::string>& lhs,
                               const std::vector<std::string>& rhs);

struct RelationInstance {
  std::string family;  // quadratic, braid, tau-conjugation, affine-tau-conjugation, commutation
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
};

/// Quadratic and braid relations of the affine Hecke algebra of d.
std::vector<RelationInstance> hecke_relation_instances(const RootDatum& d);
/// Cross relations between tau_i and Y_a for coweights a with entries in
/// [-bound, bound]: tau_i^{-1} Y_a tau_i^{-1} = Y_a X_i^{-1} when <alpha_i, a> = 1,
/// tau_i Y_a tau_i = Y_a X_i when <alpha_i, a> = -1 and tau_i Y_a = Y_a tau_i
/// when <alpha_i, a> = 0, with X_0 = zeta Y_{-theta^vee}.
std::vector<RelationInstance> bernstein_instances(const RootDatum& d, int bound = 1);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace daha
