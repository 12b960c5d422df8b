#include "daha/laurent.hpp"

#include <sstream>

#include "daha/error.hpp"

namespace daha {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Exponent IntMatrix::apply(const Exponent& e) const {
  Exponent r(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols; ++j) s += (*this)(i, j) * e[j];
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const auto x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::int64_t dot(const Exponent& a, const Exponent& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Exponent operator-(const Exponent& a) { return scaled(a, -1); }

Exponent scaled(const Exponent& a, std::int64_t k) {
  Exponent r(a);
  for (auto& x : r) x *= k;
  return r;
}

bool is_zero(const Exponent& e) {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

bool lex_positive(const Exponent& e) {
  for (auto x : e)
    if (x != 0) return x > 0;
  return false;
}

std::string exponent_to_string(const Exponent& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

Scalar MonomialMap::factor(const Exponent& e) const {
  if (v_weight.empty()) return Scalar(1);
  const auto k = dot(v_weight, e);
  return k == 0 ? Scalar(1) : Scalar::v_power(k);
}

// --- LaurentPoly -----------------------------------------------------------

LaurentPoly LaurentPoly::constant(std::size_t dim, const Scalar& c) {
  LaurentPoly p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Scalar& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Scalar LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<Scalar> LaurentPoly::as_constant() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && daha::is_zero(terms_.begin()->first)) return terms_.begin()->second;
  return std::nullopt;
}

void LaurentPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != dim_) throw DomainError("exponent dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return LaurentPoly(dim_);
  LaurentPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  LaurentPoly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
  return r;
}

LaurentPoly LaurentPoly::pow(std::int64_t k) const {
  LaurentPoly acc = constant(dim_, Scalar(1));
  for (std::int64_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

LaurentPoly LaurentPoly::mapped(const MonomialMap& m) const {
  LaurentPoly r(m.matrix.rows);
  for (const auto& [e, c] : terms_) r.add_term(m.matrix.apply(e), c * m.factor(e));
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_binomial(const Scalar& c, const Exponent& mu) const {
  std::size_t k = 0;
  while (k < mu.size() && mu[k] == 0) ++k;
  if (k == mu.size() || mu[k] < 0) throw DomainError("binomial exponent must be lex-positive");
  // Split the support into cosets of Z*mu; inside a coset the polynomial is
  // univariate in y = t^mu and we divide by (1 - c y) synthetically.
  std::map<Exponent, std::map<std::int64_t, Scalar>> classes;
  for (const auto& [e, coef] : terms_) {
    std::int64_t j = e[k] >= 0 ? e[k] / mu[k] : -((-e[k] + mu[k] - 1) / mu[k]);
    classes[e - daha::scaled(mu, j)].emplace(j, coef);
  }
  LaurentPoly quotient(dim_);
  for (const auto& [rep, column] : classes) {
    const std::int64_t jmin = column.begin()->first;
    const std::int64_t span = column.rbegin()->first - jmin;
    if (span == 0) return std::nullopt;
    Scalar prev;
    for (std::int64_t i = 0; i <= span; ++i) {
      auto it = column.find(jmin + i);
      Scalar a = it == column.end() ? Scalar() : it->second;
      Scalar qi = a + c * prev;
      if (i == span) {
        if (!qi.is_zero()) return std::nullopt;
      } else {
        quotient.add_term(rep + daha::scaled(mu, jmin + i), qi);
        prev = qi;
      }
    }
  }
  return quotient;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (!daha::is_zero(e)) os << "*t^" << exponent_to_string(e);
  }
  return os.str();
}

}  // namespace daha
