#pragma once
// Independent numerical evaluation used as a reference by the unit tests:
// every symbolic identity is also checked at exact rational sample points.

#include <random>
#include <stdexcept>

#include "daha/ratfun.hpp"

namespace oracle {

using daha::Rational;

inline Rational rpow(const Rational& x, std::int64_t k) {
  Rational acc = 1, base = k >= 0 ? x : Rational(1) / x;
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) acc *= base;
  return acc;
}

inline Rational eval_poly(const daha::LaurentPoly& p, const std::vector<Rational>& t, const Rational& v) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational m = c.eval(v);
    for (std::size_t i = 0; i < e.size(); ++i) m *= rpow(t[i], e[i]);
    s += m;
  }
  return s;
}

inline Rational eval(const daha::RatFun& f, const std::vector<Rational>& t, const Rational& v) {
  Rational d = 1;
  for (const auto& [b, m] : f.den()) {
    Rational x = 1;
    for (std::size_t i = 0; i < b.mu.size(); ++i) x *= rpow(t[i], b.mu[i]);
    Rational f = 1 - b.c.eval(v) * x;
    if (f == 0) throw std::domain_error("sample point on a pole");
    d *= rpow(f, m);
  }
  return eval_poly(f.num(), t, v) / d;
}

/// Random small rationals away from 0 and +-1.
inline std::vector<Rational> sample(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(2, 23), den(1, 7);
  std::vector<Rational> r(n);
  for (auto& x : r) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
    if (rng() & 1U) x = -x;
  }
  return r;
}

}  // namespace oracle
