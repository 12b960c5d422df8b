#include "daha/cherednik.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "daha/error.hpp"

namespace daha {

std::string to_string(ResidueTwist t) { return t == ResidueTwist::none ? "none" : "pullback"; }

ResidueTwist residue_twist_from_string(const std::string& s) {
  if (s == "none") return ResidueTwist::none;
  if (s == "pullback") return ResidueTwist::pullback;
  throw ParseError("unknown residue twist '" + s + "'");
}

namespace {

Scalar shifted_value(const RootDatum& d, const Scalar& base, std::int64_t shift, const AffineRoot& alpha) {
  if (shift == 0) return base;
  const auto h = rho_hat_pairing(d, affine_coroot(d, alpha));
  return base * Scalar::q().pow(shift * (h - 1));
}

}  // namespace

Scalar MembershipConfig::pole_at(const RootDatum& d, const AffineRoot& alpha) const {
  return shifted_value(d, pole_value, height_shift, alpha);
}

Scalar MembershipConfig::vanish_at(const RootDatum& d, const AffineRoot& alpha) const {
  return shifted_value(d, vanish_value, height_shift, alpha);
}

MembershipConfig MembershipConfig::cherednik() { return {Scalar(1), Scalar::q(), ResidueTwist::none, 0}; }

MembershipConfig MembershipConfig::hecke() { return {Scalar::q().inverse(), Scalar(1), ResidueTwist::none, -1}; }

MembershipConfig MembershipConfig::named(const std::string& name) {
  if (name == "cherednik") return cherednik();
  if (name == "hecke") return hecke();
  throw ParseError("unknown membership config '" + name + "' (expected cherednik or hecke)");
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::stray_pole: return "stray-pole";
    case ViolationKind::high_order_pole: return "high-order-pole";
    case ViolationKind::residue_mismatch: return "residue-mismatch";
    case ViolationKind::missing_vanishing: return "missing-vanishing";
  }
  return "?";
}

ViolationKind violation_kind_from_string(const std::string& s) {
  for (auto k : {ViolationKind::stray_pole, ViolationKind::high_order_pole, ViolationKind::residue_mismatch,
                 ViolationKind::missing_vanishing})
    if (to_string(k) == s) return k;
  throw ParseError("unknown violation kind '" + s + "'");
}

MembershipReport check_membership(const AlgebraElement& x, const MembershipConfig& cfg) {
  const RootDatum& d = x.datum();
  const std::size_t dim = torus_dim(d);
  MembershipReport rep;
  auto report = [&](ViolationKind k, const AffineWeylElement& w, std::optional<AffineRoot> alpha, const Scalar& z,
                    RatFun detail, std::string msg) {
    rep.violations.push_back({k, w, std::move(alpha), z, std::move(detail), std::move(msg)});
  };
  auto hypersurface = [&](const AffineRoot& alpha, const Scalar& z) {
    return Hypersurface{affine_coroot(d, alpha), z};
  };

  // Simple poles found so far, keyed by (w, alpha).
  std::vector<std::pair<AffineWeylElement, AffineRoot>> poles;
  for (const auto& [w, f] : x.terms()) {
    std::set<AffineRoot> seen;
    for (const auto& [b, mult] : f.den()) {
      auto alpha = root_of_coroot(d, b.mu);
      if (!alpha || !affine_positive(d, *alpha)) {
        report(ViolationKind::stray_pole, w, std::nullopt, b.c.inverse(), RatFun::inverse_binomial(b.c, b.mu, mult),
               "pole along t^" + exponent_to_string(b.mu) + " = " + b.c.inverse().to_string() +
                   ", which is not an affine coroot hypersurface");
        continue;
      }
      const Scalar zp = cfg.pole_at(d, *alpha);
      if (!(b.c * zp).is_one()) {
        report(ViolationKind::stray_pole, w, alpha, b.c.inverse(), RatFun::inverse_binomial(b.c, b.mu, mult),
               "pole at t^" + exponent_to_string(b.mu) + " = " + b.c.inverse().to_string() + " instead of " +
                   zp.to_string());
        continue;
      }
      if (!seen.insert(*alpha).second) continue;
      const auto ord = ord_along(f, hypersurface(*alpha, zp));
      if (ord && *ord < -1) {
        report(ViolationKind::high_order_pole, w, alpha, zp, f,
               "pole of order " + std::to_string(-*ord) + " along t^" + exponent_to_string(b.mu) + " = " +
                   zp.to_string());
      } else if (ord && *ord == -1) {
        poles.emplace_back(w, *alpha);
      }
    }
    for (const auto& alpha : left_inversion_set(d, w)) {
      const Scalar zv = cfg.vanish_at(d, alpha);
      const auto ord = ord_along(f, hypersurface(alpha, zv));
      if (ord && *ord < 1) {
        RatFun detail(dim - 1);
        if (*ord == 0) detail = restrict_to(f, hypersurface(alpha, zv));
        report(ViolationKind::missing_vanishing, w, alpha, zv, detail,
               "coefficient does not vanish along t^" + exponent_to_string(affine_coroot(d, alpha)) + " = " +
                   zv.to_string());
      }
    }
  }

  std::set<std::pair<std::pair<AffineWeylElement, AffineWeylElement>, AffineRoot>> done;
  for (const auto& [w, alpha] : poles) {
    const AffineWeylElement partner = reflection(d, alpha) * w;
    auto key = std::make_pair(std::min(w, partner), std::max(w, partner));
    if (!done.insert({key, alpha}).second) continue;
    const Scalar zp = cfg.pole_at(d, alpha);
    const Hypersurface h = hypersurface(alpha, zp);
    RatFun g = x.coefficient(partner);
    if (cfg.residue_twist == ResidueTwist::pullback) g = weyl_substitute(d, g, reflection(d, alpha), x.mode());
    try {
      RatFun sum = residue_sum_along(x.coefficient(w), g, h);
      if (!sum.is_zero())
        report(ViolationKind::residue_mismatch, w, alpha, zp, sum,
               "residues along t^" + exponent_to_string(h.direction) + " = " + zp.to_string() +
                   " do not cancel against the partner coefficient");
    } catch (const HigherOrderPoleError&) {
      // the partner's higher-order pole has been reported on its own
    }
  }
  rep.compliant = rep.violations.empty();
  return rep;
}

// --- generators -------------------------------------------------------------

namespace {

Exponent simple_affine_coroot(const RootDatum& d, std::size_t i) { return affine_coroot(d, simple_affine_root(d, i)); }

RatFun one(const RootDatum& d) { return RatFun::constant(torus_dim(d), Scalar(1)); }

}  // namespace

AlgebraElement make_tau(std::shared_ptr<const RootDatum> d, std::size_t i, int sign) {
  if (i > d->rank) throw DomainError("generator index " + std::to_string(i) + " out of range");
  const Scalar r = Scalar::v(), ri = r.inverse();
  const Exponent x = simple_affine_coroot(*d, i);
  RatFun X = RatFun::monomial(x);
  RatFun a = (one(*d).scaled(r) - X.scaled(ri)) * RatFun::inverse_binomial(Scalar(1), x);
  RatFun b = one(*d).scaled(sign > 0 ? r - ri : ri - r) * RatFun::inverse_binomial(Scalar(1), -x);
  AlgebraElement t(d, Mode::straight);
  t.add_term(simple_reflection(*d, i), a);
  t.add_term(AffineWeylElement::identity(d->rank), b);
  return t;
}

AlgebraElement make_tau_inverse(std::shared_ptr<const RootDatum> d, std::size_t i) {
  const Scalar c = Scalar::v() - Scalar::v().inverse();
  const std::size_t n = torus_dim(*d);
  return make_tau(d, i) - AlgebraElement::term(d, Mode::straight, AffineWeylElement::identity(d->rank),
                                               RatFun::constant(n, c));
}

AlgebraElement make_tau_word(std::shared_ptr<const RootDatum> d, const std::vector<std::size_t>& word) {
  AlgebraElement x = AlgebraElement::identity(d, Mode::straight);
  for (auto i : word) x = x * make_tau(d, i);
  return x;
}

AlgebraElement make_Y(std::shared_ptr<const RootDatum> d, const Exponent& a) {
  if (a.size() != d->rank) throw DomainError("Y index has the wrong rank");
  Exponent l{0};
  l.insert(l.end(), a.begin(), a.end());
  const std::size_t rank = d->rank;
  return AlgebraElement::term(std::move(d), Mode::straight, AffineWeylElement::identity(rank), RatFun::monomial(l));
}

AlgebraElement make_zeta(std::shared_ptr<const RootDatum> d) {
  Exponent l(torus_dim(*d), 0);
  l[0] = 1;
  const std::size_t rank = d->rank;
  return AlgebraElement::term(std::move(d), Mode::straight, AffineWeylElement::identity(rank), RatFun::monomial(l));
}

// --- words and relations -----------------------------------------------------

std::vector<std::string> tokenize_word(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if ((std::isspace(static_cast<unsigned char>(ch)) || ch == '*') && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

namespace {

AlgebraElement evaluate_token(const std::shared_ptr<const RootDatum>& d, const std::string& tok) {
  std::string body = tok;
  bool inverse = false;
  if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
    inverse = true;
    body.resize(body.size() - 3);
  }
  auto bad = [&]() { return ParseError("malformed generator token '" + tok + "'"); };
  if (body == "e") {
    if (inverse) throw bad();
    return AlgebraElement::identity(d, Mode::straight);
  }
  if (body == "zeta") {
    Exponent l(torus_dim(*d), 0);
    l[0] = inverse ? -1 : 1;
    return AlgebraElement::term(d, Mode::straight, AffineWeylElement::identity(d->rank), RatFun::monomial(l));
  }
  if (body.rfind("tau", 0) == 0) {
    const std::string idx = body.substr(3);
    if (idx.empty() || idx.size() > 2 || !std::all_of(idx.begin(), idx.end(), ::isdigit)) throw bad();
    const std::size_t i = std::stoul(idx);
    if (i > d->rank) throw ParseError("generator index out of range in '" + tok + "'");
    return inverse ? make_tau_inverse(d, i) : make_tau(d, i);
  }
  if (body.size() >= 3 && body[0] == 'Y' && body[1] == '[' && body.back() == ']') {
    Exponent a;
    std::stringstream ss(body.substr(2, body.size() - 3));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        a.push_back(std::stoll(item, &used));
        if (used != item.size()) throw bad();
      } catch (const std::logic_error&) {
        throw bad();
      }
    }
    if (a.size() != d->rank) throw ParseError("Y index in '" + tok + "' must have " + std::to_string(d->rank) + " entries");
    return make_Y(d, inverse ? -a : a);
  }
  throw bad();
}

}  // namespace

AlgebraElement evaluate_word(std::shared_ptr<const RootDatum> d, const std::vector<std::string>& tokens) {
  AlgebraElement x = AlgebraElement::identity(d, Mode::straight);
  for (const auto& tok : tokens) x = x * evaluate_token(d, tok);
  return x;
}

RelationResult verify_relation(std::shared_ptr<const RootDatum> d, const std::vector<std::string>& lhs,
                               const std::vector<std::string>& rhs) {
  AlgebraElement diff = evaluate_word(d, lhs) - evaluate_word(d, rhs);
  const bool holds = diff.is_zero();
  return {holds, std::move(diff)};
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
  return s.empty() ? "e" : s;
}

namespace {

std::string tau(std::size_t i, bool inv = false) { return "tau" + std::to_string(i) + (inv ? "^-1" : ""); }

std::string y_token(const Exponent& a, bool inv = false) {
  std::string s = "Y[";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + "]" + (inv ? "^-1" : "");
}

// <alpha_i, alpha_j^vee> on the finite parts of simple affine roots.
std::int64_t affine_cartan(const RootDatum& d, std::size_t i, std::size_t j) {
  return dot(simple_affine_root(d, i).finite, d.coroot(simple_affine_root(d, j).finite));
}

}  // namespace

std::vector<RelationInstance> hecke_relation_instances(const RootDatum& d) {
  std::vector<RelationInstance> out;
  for (std::size_t i = 0; i <= d.rank; ++i) {
    out.push_back({"inverse", {tau(i), tau(i, true)}, {"e"}});
    out.push_back({"inverse", {tau(i, true), tau(i)}, {"e"}});
  }
  for (std::size_t i = 0; i <= d.rank; ++i)
    for (std::size_t j = i + 1; j <= d.rank; ++j) {
      const auto p = affine_cartan(d, i, j) * affine_cartan(d, j, i);
      if (p == 0) out.push_back({"braid", {tau(i), tau(j)}, {tau(j), tau(i)}});
      if (p == 1) out.push_back({"braid", {tau(i), tau(j), tau(i)}, {tau(j), tau(i), tau(j)}});
      // p = 4 (affine A1): no braid relation
    }
  return out;
}

std::vector<RelationInstance> bernstein_instances(const RootDatum& d, int bound) {
  std::vector<RelationInstance> out;
  const std::size_t n = d.rank;
  std::vector<Exponent> box{Exponent(n, -bound)};
  // all coweights with entries in [-bound, bound], lexicographic
  for (;;) {
    Exponent next = box.back();
    std::size_t k = n;
    while (k > 0 && next[k - 1] == bound) next[--k] = -bound;
    if (k == 0) break;
    ++next[k - 1];
    box.push_back(next);
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const AffineRoot ai = simple_affine_root(d, i);
    // X_i as a word: Y_{alpha_i^vee}, or zeta Y_{-theta^vee} for the affine node
    std::vector<std::string> xi, xi_inv;
    if (i == 0) {
      xi = {"zeta", y_token(-d.theta_coroot)};
      xi_inv = {"zeta^-1", y_token(d.theta_coroot)};
    } else {
      xi = {y_token(d.simple_coroot(i - 1))};
      xi_inv = {y_token(d.simple_coroot(i - 1), true)};
    }
    const std::string family = i == 0 ? "affine-tau-conjugation" : "tau-conjugation";
    for (const auto& a : box) {
      if (is_zero(a)) continue;
      const auto p = dot(ai.finite, a);
      std::vector<std::string> rhs{y_token(a)};
      if (p == 1) {
        rhs.insert(rhs.end(), xi_inv.begin(), xi_inv.end());
        out.push_back({family, {tau(i, true), y_token(a), tau(i, true)}, rhs});
      } else if (p == -1) {
        rhs.insert(rhs.end(), xi.begin(), xi.end());
        out.push_back({family, {tau(i), y_token(a), tau(i)}, rhs});
      } else if (p == 0) {
        out.push_back({"commutation", {tau(i), y_token(a)}, {y_token(a), tau(i)}});
      }
    }
  }
  return out;
}

}  // namespace daha
