#include "daha/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "daha/error.hpp"

namespace daha {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::is_monomial() const noexcept {
  if (c_.empty()) return false;
  return std::count_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; }) == 1;
}

std::size_t QPoly::low_degree() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.c_.size() == 1) return b.scaled(a.c_[0]);
  if (b.c_.size() == 1) return a.scaled(b.c_[0]);
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  QPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> r(k, Rational(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  rem = a;
  std::vector<Rational> q;
  const auto db = b.degree();
  if (rem.degree() >= db) q.assign(static_cast<std::size_t>(rem.degree() - db + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    const auto shift = static_cast<std::size_t>(rem.degree() - db);
    Rational f = rem.leading() / b.leading();
    q[shift] = f;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[i + shift] -= f * b.c_[i];
    rem.trim();
  }
  quot = QPoly(std::move(q));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::strong_ordering operator<=>(const QPoly& a, const QPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string QPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// --- Scalar --------------------------------------------------------------

Scalar::Scalar(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(1)) {}

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("scalar with zero denominator");
  normalize();
}

Scalar Scalar::v_power(std::int64_t k) {
  if (k >= 0) return Scalar(QPoly::monomial(1, static_cast<std::size_t>(k)), QPoly::constant(1));
  return Scalar(QPoly::constant(1), QPoly::monomial(1, static_cast<std::size_t>(-k)));
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  // Monomial denominators (the common case: Laurent polynomials in v) only
  // need a power of v cancelled.
  if (den_.is_monomial()) {
    const auto k = std::min(den_.low_degree(), num_.low_degree());
    if (k > 0) {
      std::vector<Rational> n(num_.coeffs().begin() + static_cast<std::ptrdiff_t>(k), num_.coeffs().end());
      std::vector<Rational> d(den_.coeffs().begin() + static_cast<std::ptrdiff_t>(k), den_.coeffs().end());
      num_ = QPoly(std::move(n));
      den_ = QPoly(std::move(d));
    }
  } else {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      QPoly q, r;
      QPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      QPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(1 / lead);
    den_ = den_.scaled(1 / lead);
  }
}

bool Scalar::is_one() const { return den_.degree() == 0 && num_ == den_; }

bool Scalar::is_monomial() const { return is_zero() || (num_.is_monomial() && den_.is_monomial()); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  // Normalized monomial denominators are pure powers of v.
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    const auto ka = static_cast<std::size_t>(a.den_.degree());
    const auto kb = static_cast<std::size_t>(b.den_.degree());
    const auto k = std::max(ka, kb);
    return Scalar(a.num_.shifted(k - ka) + b.num_.shifted(k - kb), QPoly::monomial(1, k));
  }
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(std::int64_t k) const {
  if (k == 1) return *this;
  if (k == 0 || is_one()) return Scalar(1);
  Scalar base = k >= 0 ? *this : inverse();
  std::uint64_t e = static_cast<std::uint64_t>(k >= 0 ? k : -k);
  Scalar acc(1);
  while (e) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return acc;
}

Rational Scalar::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d == 0) throw ArithmeticError("scalar evaluated at a pole");
  return num_.eval(at) / d;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string Scalar::to_string() const {
  if (den_.degree() == 0) {
    if (num_.degree() <= 0) return num_.to_string();
    return "(" + num_.to_string() + ")";
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace daha
