#include "daha/ratfun.hpp"

#include <numeric>
#include <sstream>

#include "daha/error.hpp"

namespace daha {

LaurentPoly Binomial::as_poly() const {
  LaurentPoly p = LaurentPoly::constant(mu.size(), Scalar(1));
  p.add_term(mu, -c);
  return p;
}

RatFun::RatFun(LaurentPoly num) : num_(std::move(num)) {}

RatFun::RatFun(LaurentPoly num, Denominator den) : RatFun(std::move(num), std::move(den), true) {}

RatFun::RatFun(LaurentPoly num, Denominator den, bool reduce) : num_(std::move(num)) {
  for (auto& [b, mult] : den) {
    if (mult < 0) throw DomainError("negative binomial multiplicity");
    if (mult == 0) continue;
    if (b.mu.size() != num_.dim()) throw DomainError("binomial dimension mismatch");
    if (b.c.is_zero()) continue;
    if (daha::is_zero(b.mu)) {
      Scalar s = Scalar(1) - b.c;
      if (s.is_zero()) throw ArithmeticError("denominator factor (1 - 1) vanishes identically");
      num_ = num_.scaled(s.pow(-mult));
      continue;
    }
    if (lex_positive(b.mu)) {
      den_[b] += mult;
    } else {
      // 1/(1 - c t^mu) = -c^{-1} t^{-mu} / (1 - c^{-1} t^{-mu})
      Scalar ci = b.c.inverse();
      Exponent flipped = -b.mu;
      num_ = num_.shifted(daha::scaled(flipped, mult)).scaled((-ci).pow(mult));
      den_[Binomial{flipped, ci}] += mult;
    }
  }
  if (reduce || num_.is_zero()) normalize();
}

RatFun RatFun::constant(std::size_t dim, const Scalar& c) { return RatFun(LaurentPoly::constant(dim, c)); }

RatFun RatFun::monomial(const Exponent& e, const Scalar& c) { return RatFun(LaurentPoly::monomial(e, c)); }

RatFun RatFun::inverse_binomial(const Scalar& c, const Exponent& mu, int mult) {
  Denominator d;
  d[Binomial{mu, c}] = mult;
  return RatFun(LaurentPoly::constant(mu.size(), Scalar(1)), std::move(d));
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divide_binomial(it->first.c, it->first.mu);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

std::optional<Scalar> RatFun::as_constant() const {
  if (!den_.empty()) return std::nullopt;
  return num_.as_constant();
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

LaurentPoly expand_factors(std::size_t dim, const RatFun::Denominator& d) {
  LaurentPoly p = LaurentPoly::constant(dim, Scalar(1));
  for (const auto& [b, m] : d)
    for (int i = 0; i < m; ++i) p = p * b.as_poly();
  return p;
}

}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.dim() != b.dim()) throw DomainError("rational function dimension mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RatFun r;
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    r.normalize();
    return r;
  }
  RatFun::Denominator lcm = a.den_, extra_a, extra_b;
  for (const auto& [f, m] : b.den_) {
    auto& slot = lcm[f];
    slot = std::max(slot, m);
  }
  for (const auto& [f, m] : lcm) {
    auto ia = a.den_.find(f);
    auto ib = b.den_.find(f);
    const int ma = ia == a.den_.end() ? 0 : ia->second;
    const int mb = ib == b.den_.end() ? 0 : ib->second;
    if (m > ma) extra_a[f] = m - ma;
    if (m > mb) extra_b[f] = m - mb;
  }
  RatFun r;
  r.num_ = a.num_ * expand_factors(a.dim(), extra_a) + b.num_ * expand_factors(b.dim(), extra_b);
  r.den_ = std::move(lcm);
  r.normalize();
  return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.dim() != b.dim()) throw DomainError("rational function dimension mismatch");
  if (a.is_zero() || b.is_zero()) return RatFun(a.dim());
  RatFun r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& [f, m] : b.den_) r.den_[f] += m;
  r.normalize();
  return r;
}

RatFun RatFun::scaled(const Scalar& c) const {
  if (c.is_zero()) return RatFun(dim());
  RatFun r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
  LaurentPoly top = expand_factors(dim(), den_);
  const auto& t = num_.terms();
  auto it = t.begin();
  const Exponent e0 = it->first;
  const Scalar c0 = it->second;
  LaurentPoly unit = LaurentPoly::monomial(-e0, c0.inverse());
  if (t.size() == 1) return RatFun(top * unit);
  if (t.size() == 2) {
    ++it;
    Denominator d;
    d[Binomial{it->first - e0, -(it->second / c0)}] = 1;
    return RatFun(top * unit, std::move(d));
  }
  throw RepresentationError("inverse of " + num_.to_string() +
                            " leaves the binomial-factored denominator class");
}

RatFun RatFun::mapped(const MonomialMap& m) const {
  LaurentPoly n = num_.mapped(m);
  Denominator d;
  for (const auto& [b, k] : den_) d[Binomial{m.matrix.apply(b.mu), b.c * m.factor(b.mu)}] += k;
  return RatFun(std::move(n), std::move(d));
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.dim() != b.dim()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

std::string RatFun::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (const auto& [b, m] : den_) {
    if (!first) os << "*";
    first = false;
    os << "(1 - " << b.c.to_string() << "*t^" << exponent_to_string(b.mu) << ")";
    if (m > 1) os << "^" << m;
  }
  os << ")";
  return os.str();
}

// --- hypersurfaces -----------------------------------------------------------

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t j = 0; j < m.cols; ++j) m(dst, j) += k * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
  for (std::size_t i = 0; i < m.rows; ++i) m(i, dst) += k * m(i, src);
}

void check_primitive(const Exponent& d) {
  std::int64_t g = 0;
  for (auto x : d) g = std::gcd(g, x);
  if (g != 1) throw UnsupportedLocusError("hypersurface direction " + exponent_to_string(d) + " is not primitive");
}

}  // namespace

AdaptedBasis adapted_basis(const Exponent& direction, int variant) {
  check_primitive(direction);
  const std::size_t n = direction.size();
  IntMatrix fwd = IntMatrix::identity(n), bwd = IntMatrix::identity(n);
  Exponent w = direction;
  // Integer row reduction of w to a unit vector; every elementary operation
  // on fwd is mirrored by its inverse (as a column operation) on bwd.
  for (;;) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != 0 && (p == n || std::abs(w[i]) < std::abs(w[p]))) p = i;
    bool reduced = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == p || w[j] == 0) continue;
      const std::int64_t q = w[j] / w[p];
      w[j] -= q * w[p];
      row_axpy(fwd, j, p, -q);
      col_axpy(bwd, p, j, q);
      reduced = false;
    }
    if (reduced) {
      if (p != 0) {
        std::swap(w[p], w[0]);
        for (std::size_t j = 0; j < n; ++j) std::swap(fwd(p, j), fwd(0, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(bwd(i, p), bwd(i, 0));
      }
      if (w[0] < 0) {
        for (std::size_t j = 0; j < n; ++j) fwd(0, j) = -fwd(0, j);
        for (std::size_t i = 0; i < n; ++i) bwd(i, 0) = -bwd(i, 0);
      }
      break;
    }
  }
  // Alternative completions: shears that fix the first basis vector.
  if (variant != 0 && n >= 2) {
    row_axpy(fwd, 0, 1, variant);
    col_axpy(bwd, 1, 0, -variant);
    if (n >= 3) {
      row_axpy(fwd, 1, 2, variant);
      col_axpy(bwd, 2, 1, -variant);
    }
  }
  return {std::move(fwd), std::move(bwd)};
}

namespace {

struct LocalExpansion {
  std::int64_t order;
  RatFun leading;  // coefficient of (x - z)^order, in the remaining coordinates
};

class PowerCache {
 public:
  explicit PowerCache(const Scalar& z) : z_(z), one_(z.is_one()) {}
  Scalar operator()(std::int64_t k) {
    if (one_ || k == 0) return Scalar(1);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(k, z_.pow(k)).first->second;
  }

 private:
  Scalar z_;
  bool one_;
  std::map<std::int64_t, Scalar> cache_;
};

// Leading term of f in powers of (x - z), x = t^direction. With
// want_leading = false only the order is computed.
LocalExpansion local_expansion(const RatFun& f, const Hypersurface& h, int variant, bool want_leading = true,
                               bool reduce = true) {
  const std::size_t n = f.dim();
  if (h.direction.size() != n) throw DomainError("hypersurface dimension mismatch");
  if (h.value.is_zero()) throw DomainError("hypersurface value must be nonzero");
  if (n == 0) throw DomainError("hypersurface in a zero-dimensional torus");
  AdaptedBasis basis = adapted_basis(h.direction, variant);
  const MonomialMap to_local{basis.forward, {}};
  const Scalar& z = h.value;
  const Scalar zi = z.inverse();
  PowerCache zpow(z);
  Exponent e0(n, 0);
  e0[0] = 1;

  auto restrict_poly = [&](const LaurentPoly& p) {
    LaurentPoly r(n - 1);
    for (const auto& [e, c] : p.terms()) r.add_term(Exponent(e.begin() + 1, e.end()), c * zpow(e[0]));
    return r;
  };

  LaurentPoly num = f.num().mapped(to_local);
  LaurentPoly restricted = restrict_poly(num);
  std::int64_t num_mult = 0;
  while (restricted.is_zero()) {
    auto quotient = num.divide_binomial(zi, e0);
    if (!quotient) throw ArithmeticError("numerator vanishes on a hypersurface it is not divisible by");
    num = std::move(*quotient);
    ++num_mult;
    restricted = restrict_poly(num);
  }

  Scalar divisor(1);
  std::int64_t den_mult = 0;
  RatFun::Denominator rest_den;
  for (const auto& [b, m] : f.den()) {
    Exponent mu = basis.forward.apply(b.mu);
    Exponent rest(mu.begin() + 1, mu.end());
    if (daha::is_zero(rest)) {
      const std::int64_t k = mu[0];
      Scalar at = b.c * zpow(k);
      if (at.is_one()) {
        if (want_leading) divisor *= (-b.c * Scalar(k) * zpow(k - 1)).pow(m);
        den_mult += m;
      } else if (want_leading) {
        divisor *= (Scalar(1) - at).pow(m);
      }
    } else if (want_leading) {
      rest_den[Binomial{rest, b.c * zpow(mu[0])}] += m;
    }
  }
  if (!want_leading) return {num_mult - den_mult, RatFun(n - 1)};
  LaurentPoly top = restricted.scaled((-zi).pow(num_mult) / divisor);
  return {num_mult - den_mult, RatFun(std::move(top), std::move(rest_den), reduce)};
}

}  // namespace

std::optional<std::int64_t> ord_along(const RatFun& f, const Hypersurface& h, int variant) {
  check_primitive(h.direction);
  if (f.is_zero()) return std::nullopt;
  return local_expansion(f, h, variant, false).order;
}

namespace {

RatFun residue_impl(const RatFun& f, const Hypersurface& h, int variant, bool reduce) {
  check_primitive(h.direction);
  if (f.is_zero()) return RatFun(f.dim() - 1);
  auto loc = local_expansion(f, h, variant, true, reduce);
  if (loc.order < -1)
    throw HigherOrderPoleError(loc.order, "pole of order " + std::to_string(-loc.order) + " along t^" +
                                              exponent_to_string(h.direction) + " = " + h.value.to_string());
  if (loc.order >= 0) return RatFun(f.dim() - 1);
  return loc.leading;
}

}  // namespace

RatFun residue_along(const RatFun& f, const Hypersurface& h, int variant) { return residue_impl(f, h, variant, true); }

RatFun residue_sum_along(const RatFun& f, const RatFun& g, const Hypersurface& h, int variant) {
  if (f.dim() != g.dim()) throw DomainError("rational function dimension mismatch");
  RatFun sum = residue_impl(f, h, variant, false) + residue_impl(g, h, variant, false);
  if (sum.is_zero()) return sum;
  return RatFun(sum.num(), sum.den());
}

RatFun restrict_to(const RatFun& f, const Hypersurface& h, int variant) {
  check_primitive(h.direction);
  if (f.is_zero()) return RatFun(f.dim() - 1);
  auto loc = local_expansion(f, h, variant);
  if (loc.order < 0) throw HigherOrderPoleError(loc.order, "restriction of a function with a pole");
  if (loc.order > 0) return RatFun(f.dim() - 1);
  return loc.leading;
}

}  // namespace daha
