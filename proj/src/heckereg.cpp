#include "daha/heckereg.hpp"

#include <sstream>

#include "daha/error.hpp"

namespace daha {

RatFun c_function(const RootDatum& d, const AffineWeylElement& w) {
  const std::size_t n = torus_dim(d);
  LaurentPoly num = LaurentPoly::constant(n, Scalar(1));
  RatFun::Denominator den;
  for (const auto& alpha : inversion_set(d, w)) {
    const AffineCoweight mu = affine_coroot(d, alpha);
    LaurentPoly factor = LaurentPoly::constant(n, Scalar(1));
    factor.add_term(mu, Scalar(-1));
    num = num * factor;
    den[Binomial{mu, Scalar::q()}] += 1;
  }
  return RatFun(std::move(num), std::move(den));
}

AlgebraElement make_A(std::shared_ptr<const RootDatum> d, const AffineWeylElement& w) {
  return AlgebraElement::group_element(std::move(d), Mode::star, w);
}

AlgebraElement make_tau_hecke(std::shared_ptr<const RootDatum> d, const AffineWeylElement& w,
                              const AffineCoweight& l) {
  if (l.size() != torus_dim(*d)) throw DomainError("coweight has the wrong dimension for " + d->label);
  const RatFun c = c_function(*d, w);
  auto shift = AlgebraElement::term(d, Mode::star, AffineWeylElement::identity(d->rank), RatFun::monomial(l));
  return AlgebraElement::term(d, Mode::star, w, c) * shift;
}

AlgebraElement make_T(std::shared_ptr<const RootDatum> d, std::size_t i) {
  const AffineWeylElement s = simple_reflection(*d, i);
  const RatFun c = c_function(*d, s);
  const std::size_t n = torus_dim(*d);
  AlgebraElement r(d, Mode::star);
  r.add_term(s, c);
  r.add_term(AffineWeylElement::identity(d->rank), RatFun::constant(n, Scalar(1)) - c);
  return r;
}

MembershipReport check_H_membership(const AlgebraElement& x) {
  if (x.mode() != Mode::star) throw DomainError("Hecke membership expects a star-mode element");
  return check_membership(x, MembershipConfig::hecke());
}

// --- UnivariateRat ----------------------------------------------------------

namespace {

using Poly = UnivariateRat::Poly;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Scalar& c) {
  Poly r;
  if (c.is_zero()) return r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.empty()) throw ArithmeticError("polynomial division by zero");
  rem = a;
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Scalar());
  const Scalar lead_inv = b.back().inverse();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Scalar f = rem.back() * lead_inv;
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[i + shift] -= f * b[i];
    rem.pop_back();  // the leading term cancels exactly
    trim(rem);
  }
  trim(quot);
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::size_t low_index(const Poly& p) {
  std::size_t i = 0;
  while (i < p.size() && p[i].is_zero()) ++i;
  return i;
}

}  // namespace

UnivariateRat::UnivariateRat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw ArithmeticError("univariate rational function with zero denominator");
  reduce();
}

void UnivariateRat::reduce() {
  if (num_.empty()) {
    den_ = {Scalar(1)};
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.size() > 1) {
    Poly q, r;
    divmod(num_, g, q, r);
    num_ = std::move(q);
    divmod(den_, g, q, r);
    den_ = std::move(q);
  }
  const Scalar lead = den_.back();
  if (!lead.is_one()) {
    const Scalar inv = lead.inverse();
    num_ = scale(num_, inv);
    den_ = scale(den_, inv);
  }
}

UnivariateRat UnivariateRat::constant(const Scalar& c) { return UnivariateRat(Poly{c}, Poly{Scalar(1)}); }

UnivariateRat UnivariateRat::x_power(std::int64_t k, const Scalar& c) {
  Poly mono(static_cast<std::size_t>(k >= 0 ? k : -k) + 1);
  mono.back() = Scalar(1);
  if (k >= 0) return UnivariateRat(scale(mono, c), Poly{Scalar(1)});
  return UnivariateRat(Poly{c}, std::move(mono));
}

UnivariateRat UnivariateRat::laurent(const std::map<std::int64_t, Scalar>& coeffs) {
  if (coeffs.empty()) return UnivariateRat();
  const std::int64_t low = std::min<std::int64_t>(0, coeffs.begin()->first);
  Poly num(static_cast<std::size_t>(coeffs.rbegin()->first - low) + 1);
  for (const auto& [k, c] : coeffs) num[static_cast<std::size_t>(k - low)] += c;
  Poly den(static_cast<std::size_t>(-low) + 1);
  den.back() = Scalar(1);
  return UnivariateRat(std::move(num), std::move(den));
}

UnivariateRat UnivariateRat::operator-() const {
  UnivariateRat r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

UnivariateRat operator+(const UnivariateRat& a, const UnivariateRat& b) {
  if (a.den_ == b.den_) return UnivariateRat(add(a.num_, b.num_), a.den_);
  return UnivariateRat(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
}

UnivariateRat operator-(const UnivariateRat& a, const UnivariateRat& b) { return a + (-b); }

UnivariateRat operator*(const UnivariateRat& a, const UnivariateRat& b) {
  return UnivariateRat(mul(a.num_, b.num_), mul(a.den_, b.den_));
}

UnivariateRat operator/(const UnivariateRat& a, const UnivariateRat& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero function");
  return UnivariateRat(mul(a.num_, b.den_), mul(a.den_, b.num_));
}

UnivariateRat UnivariateRat::rescaled(const Scalar& c) const {
  if (c.is_zero()) throw DomainError("rescaling by zero");
  Poly n = num_, d = den_;
  Scalar p(1);
  for (std::size_t i = 0; i < std::max(n.size(), d.size()); ++i, p *= c) {
    if (i < n.size()) n[i] *= p;
    if (i < d.size()) d[i] *= p;
  }
  return UnivariateRat(std::move(n), std::move(d));
}

std::optional<std::int64_t> UnivariateRat::order_at_zero() const {
  if (is_zero()) return std::nullopt;
  return static_cast<std::int64_t>(low_index(num_)) - static_cast<std::int64_t>(low_index(den_));
}

bool UnivariateRat::poles_only_at_zero() const { return low_index(den_) + 1 == den_.size(); }

std::map<std::int64_t, Scalar> UnivariateRat::laurent_expansion(std::int64_t upto) const {
  std::map<std::int64_t, Scalar> out;
  if (is_zero()) return out;
  const std::size_t kn = low_index(num_), kd = low_index(den_);
  const std::int64_t lowest = static_cast<std::int64_t>(kn) - static_cast<std::int64_t>(kd);
  if (upto < lowest) return out;
  const auto count = static_cast<std::size_t>(upto - lowest) + 1;
  // p(x)/u(x) with u(0) != 0, expanded term by term.
  auto at = [](const Poly& p, std::size_t off, std::size_t i) { return off + i < p.size() ? p[off + i] : Scalar(); };
  const Scalar u0_inv = den_[kd].inverse();
  std::vector<Scalar> s(count);
  for (std::size_t i = 0; i < count; ++i) {
    Scalar acc = at(num_, kn, i);
    for (std::size_t j = 1; j <= i; ++j) acc -= at(den_, kd, j) * s[i - j];
    s[i] = acc * u0_inv;
    if (!s[i].is_zero()) out.emplace(lowest + static_cast<std::int64_t>(i), s[i]);
  }
  return out;
}

std::string UnivariateRat::to_string(const char* var) const {
  auto poly = [var](const Poly& p) {
    if (p.empty()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << p[i].to_string();
      if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
  };
  if (den_.size() == 1) return poly(num_);
  return "(" + poly(num_) + ")/(" + poly(den_) + ")";
}

// --- lattice preservation -------------------------------------------------

bool lattice_preservation(const UnivariateRat& f0, const UnivariateRat& f1) {
  if (!f0.poles_only_at_zero() || !f1.poles_only_at_zero())
    throw DomainError("lattice criterion needs functions whose only pole is at x = 0");
  for (const auto* f : {&f0, &f1}) {
    const auto ord = f->order_at_zero();
    if (ord && *ord < -1) return false;
  }
  auto residue = [](const UnivariateRat& f) {
    auto e = f.laurent_expansion(-1);
    auto it = e.find(-1);
    return it == e.end() ? Scalar() : it->second;
  };
  return (residue(f0) + residue(f1)).is_zero();
}

bool lattice_preservation_oracle(const UnivariateRat& f0, const UnivariateRat& f1, const TruncationBudget& budget) {
  if (budget.order < 0) throw CapacityError("series order must be nonnegative");
  // Only the polar parts can produce negative powers after multiplying by x^j, j >= 0.
  const auto p0 = f0.laurent_expansion(-1);
  const auto p1 = f1.laurent_expansion(-1);
  for (int j = 0; j <= budget.order; ++j) {
    std::map<std::int64_t, Scalar> image;
    for (const auto& [k, c] : p0) image[k + j] += c;
    for (const auto& [k, c] : p1) image[k + j] += (j % 2 == 0) ? c : -c;
    for (const auto& [k, c] : image)
      if (k < 0 && !c.is_zero()) return false;
  }
  return true;
}

// --- rank one ---------------------------------------------------------------

UnivariateRat rank1_partial_sum(int depth) {
  if (depth < 0) throw CapacityError("depth must be nonnegative");
  const Scalar q = Scalar::q();
  const Scalar w = Scalar(1) - q.inverse();
  Poly p(static_cast<std::size_t>(depth) + 1);
  p[0] = Scalar(1);
  for (int k = 1; k <= depth; ++k) p[static_cast<std::size_t>(k)] = w * q.pow(k);
  return UnivariateRat(std::move(p), Poly{Scalar(1)});
}

UnivariateRat rank1_full_sum() {
  const Scalar q = Scalar::q();
  const UnivariateRat qx = UnivariateRat::x_power(1, q);
  const UnivariateRat one = UnivariateRat::constant(Scalar(1));
  return one + UnivariateRat::constant(Scalar(1) - q.inverse()) * qx / (one - qx);
}

UnivariateRat rank1_c_factor() {
  const UnivariateRat one = UnivariateRat::constant(Scalar(1));
  return (one - UnivariateRat::x_power(1)) / (one - UnivariateRat::x_power(1, Scalar::q()));
}

UnivariateRat rank1_tail(int depth) {
  const Scalar q = Scalar::q();
  const UnivariateRat qx = UnivariateRat::x_power(1, q);
  const UnivariateRat one = UnivariateRat::constant(Scalar(1));
  return UnivariateRat::constant(Scalar(1) - q.inverse()) * UnivariateRat::x_power(depth + 1, q.pow(depth + 1)) /
         (one - qx);
}

Scalar rank1_normalization() {
  const UnivariateRat ratio = rank1_full_sum() / rank1_c_factor();
  if (ratio.num().size() != 1 || ratio.den().size() != 1)
    throw ArithmeticError("rank-1 full sum is not a constant multiple of the c-factor");
  return ratio.num()[0];
}

Rank1Result rank1_intertwiner_oracle(const TruncationBudget& budget, int s) {
  if (budget.depth < 1) throw CapacityError("rank-1 oracle needs depth >= 1");
  if (budget.q0 < 2) throw CapacityError("rank-1 oracle needs q0 >= 2");
  if (s < 1) throw DomainError("rank-1 oracle needs s >= 1");
  constexpr std::int64_t kMaxClasses = 10'000'000;
  std::int64_t classes = 1;
  for (int i = 0; i < budget.depth; ++i) {
    if (classes > kMaxClasses / budget.q0) throw CapacityError("rank-1 oracle: too many residue classes");
    classes *= budget.q0;
  }
  mpz_class qs;
  mpz_ui_pow_ui(qs.get_mpz_t(), static_cast<unsigned long>(budget.q0), static_cast<unsigned long>(s));
  const Rational x_val(mpz_class(1), qs);

  // The line over the field, truncated to pi^{-depth} O / O: one residue class
  // a per unit-measure coset of O. The class a = 0 is O itself (weight 1); a
  // class of q0-adic valuation v lies in the shell |x| = q^{depth - v} and
  // carries weight X^{depth - v}.
  std::map<int, std::int64_t> counts;
  for (std::int64_t a = 0; a < classes; ++a) {
    int k = 0;
    if (a != 0) {
      int v = 0;
      for (std::int64_t b = a; b % budget.q0 == 0; b /= budget.q0) ++v;
      k = budget.depth - v;
    }
    ++counts[k];
  }
  Rank1Result r;
  r.oracle = 0;
  Rational weight = 1;
  for (int k = 0; k <= budget.depth; ++k) {
    const std::int64_t c = counts.count(k) ? counts[k] : 0;
    r.strata.emplace_back(k, c);
    r.oracle += weight * Rational(static_cast<long>(c));
    weight *= x_val;
  }
  r.oracle.canonicalize();
  r.closed_form = eval_at_q(rank1_partial_sum(budget.depth), Rational(static_cast<long>(budget.q0)), x_val);
  return r;
}

Rational eval_at_q(const Scalar& c, const Rational& q0) {
  auto eval = [&q0](const QPoly& p) {
    Rational acc = 0;
    const auto& co = p.coeffs();
    for (std::size_t i = co.size(); i-- > 0;) {
      if (i % 2 == 1) {
        if (co[i] != 0) throw DomainError("scalar is not a rational function of q = v^2");
        continue;
      }
      acc = acc * q0 + co[i];
    }
    return acc;
  };
  const Rational den = eval(c.den());
  if (den == 0) throw ArithmeticError("scalar evaluated at a pole");
  Rational r = eval(c.num()) / den;
  r.canonicalize();
  return r;
}

Rational eval_at_q(const UnivariateRat& f, const Rational& q0, const Rational& x) {
  auto eval = [&](const Poly& p) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + eval_at_q(p[i], q0);
    return acc;
  };
  const Rational den = eval(f.den());
  if (den == 0) throw ArithmeticError("function evaluated at a pole");
  Rational r = eval(f.num()) / den;
  r.canonicalize();
  return r;
}

}  // namespace daha
