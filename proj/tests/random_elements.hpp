#pragma once

#include <random>

#include "daha/groupalg.hpp"

namespace testgen {

inline daha::AffineWeylElement random_weyl(const daha::RootDatum& d, std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> gen(0, d.rank), len(0, max_len);
  std::vector<std::size_t> w(len(rng));
  for (auto& i : w) i = gen(rng);
  return daha::from_word(d, w);
}

inline daha::Exponent random_exponent(std::mt19937& rng, std::size_t n, int spread) {
  std::uniform_int_distribution<int> e(-spread, spread);
  daha::Exponent x(n);
  for (auto& c : x) c = e(rng);
  return x;
}

inline daha::Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), k(-2, 2);
  int a = c(rng);
  if (a == 0) a = 1;
  return daha::Scalar(a) * daha::Scalar::v_power(k(rng));
}

/// Random Laurent polynomial with up to `terms` terms.
inline daha::LaurentPoly random_poly(std::mt19937& rng, std::size_t n, std::size_t terms, int spread = 2) {
  daha::LaurentPoly p(n);
  std::uniform_int_distribution<std::size_t> count(1, terms);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) p.add_term(random_exponent(rng, n, spread), random_scalar(rng));
  if (p.is_zero()) p = daha::LaurentPoly::constant(n, daha::Scalar(1));
  return p;
}

/// Random rational function with up to two binomial denominator factors.
inline daha::RatFun random_ratfun(std::mt19937& rng, std::size_t n, int spread = 2) {
  daha::RatFun::Denominator den;
  std::uniform_int_distribution<int> nf(0, 2);
  const int k = nf(rng);
  for (int i = 0; i < k; ++i) {
    daha::Exponent mu = random_exponent(rng, n, 1);
    if (daha::is_zero(mu)) mu[n - 1] = 1;
    den[daha::Binomial{mu, random_scalar(rng)}] += 1;
  }
  // keep the constructor's orientation step from seeing c = 1 at mu = 0
  return daha::RatFun(random_poly(rng, n, 3, spread), den);
}

inline daha::AlgebraElement random_element(const std::shared_ptr<const daha::RootDatum>& d, daha::Mode mode,
                                           std::mt19937& rng, std::size_t support, std::size_t max_len) {
  daha::AlgebraElement x(d, mode);
  std::uniform_int_distribution<std::size_t> count(1, support);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i)
    x.add_term(random_weyl(*d, rng, max_len), random_ratfun(rng, daha::torus_dim(*d)));
  return x;
}

}  // namespace testgen
