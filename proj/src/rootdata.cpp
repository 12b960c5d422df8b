#include "daha/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "daha/error.hpp"

namespace daha {

namespace {

IntMatrix cartan_for(const std::string& label) {
  auto chain = [](std::size_t n) {
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      c(i, i) = 2;
      if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
    }
    return c;
  };
  if (label == "A1") return chain(1);
  if (label == "A2") return chain(2);
  if (label == "A3") return chain(3);
  if (label == "A4") return chain(4);
  if (label == "D4") {
    IntMatrix c(4, 4);
    for (std::size_t i = 0; i < 4; ++i) c(i, i) = 2;
    for (std::size_t j : {0, 2, 3}) c(1, j) = c(j, 1) = -1;
    return c;
  }
  std::string names;
  for (const auto& s : supported_types()) names += (names.empty() ? "" : ", ") + s;
  throw ConfigurationError("unsupported root system '" + label + "'; supported types: " + names);
}

std::int64_t height(const Exponent& coeffs) { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

}  // namespace

std::vector<std::string> supported_types() { return {"A1", "A2", "A3", "A4", "D4"}; }

Exponent RootDatum::simple_root(std::size_t i) const {
  Exponent r(rank);
  for (std::size_t j = 0; j < rank; ++j) r[j] = cartan(i, j);
  return r;
}

Exponent RootDatum::simple_coroot(std::size_t i) const {
  Exponent r(rank, 0);
  r[i] = 1;
  return r;
}

int RootDatum::root_index(const Exponent& beta) const {
  for (std::size_t k = 0; k < positive_roots.size(); ++k)
    if (positive_roots[k] == beta || positive_roots[k] == -beta) return static_cast<int>(k);
  return -1;
}

Exponent RootDatum::coroot(const Exponent& beta) const {
  const int k = root_index(beta);
  if (k < 0) throw DomainError(exponent_to_string(beta) + " is not a root of " + label);
  return positive_roots[k] == beta ? positive_coroots[k] : -positive_coroots[k];
}

bool RootDatum::is_positive(const Exponent& beta) const {
  if (std::find(positive_roots.begin(), positive_roots.end(), beta) != positive_roots.end()) return true;
  // Sign of the simple-root coefficients: solve cartan * c = beta over Q.
  std::vector<Rational> c(rank);
  std::vector<std::vector<Rational>> m(rank, std::vector<Rational>(rank + 1));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) m[i][j] = cartan(i, j);
    m[i][rank] = beta[i];
  }
  for (std::size_t col = 0; col < rank; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    for (std::size_t i = 0; i < rank; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= rank; ++j) m[i][j] -= f * m[col][j];
    }
  }
  bool nonzero = false;
  for (std::size_t i = 0; i < rank; ++i) {
    Rational ci = m[i][rank] / m[i][i];
    if (ci < 0) return false;
    if (ci != 0) nonzero = true;
  }
  return nonzero;
}

std::vector<Exponent> RootDatum::roots() const {
  std::vector<Exponent> all = positive_roots;
  for (const auto& r : positive_roots) all.push_back(-r);
  return all;
}

RootDatum build_root_datum(const std::string& label) {
  RootDatum d;
  d.label = label;
  d.cartan = cartan_for(label);
  d.rank = d.cartan.rows;
  const std::size_t n = d.rank;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = d.cartan(i, j);
      if (i == j ? c != 2 : (c != 0 && c != -1) || c != d.cartan(j, i))
        throw ConfigurationError("not a simply-laced Cartan matrix");
    }

  // Positive roots in simple-root coordinates, by closure under simple
  // reflections: s_i(c) = c - <alpha, alpha_i^vee> e_i.
  std::set<Exponent> seen;
  std::vector<Exponent> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    Exponent c = frontier.back();
    frontier.pop_back();
    const Exponent w = d.cartan.apply(c);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent r = c;
      r[i] -= w[i];
      if (!lex_positive(r) || std::any_of(r.begin(), r.end(), [](auto x) { return x < 0; })) continue;
      if (seen.insert(r).second) frontier.push_back(r);
    }
  }
  std::vector<Exponent> coeffs(seen.begin(), seen.end());
  std::sort(coeffs.begin(), coeffs.end(), [](const Exponent& a, const Exponent& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (const auto& c : coeffs) {
    d.positive_coroots.push_back(c);  // simply laced: coroot coefficients = root coefficients
    d.positive_roots.push_back(d.cartan.apply(c));
  }
  d.theta_coroot = coeffs.back();
  d.theta = d.positive_roots.back();
  if (coeffs.size() > 1 && height(coeffs[coeffs.size() - 2]) == height(coeffs.back()))
    throw ConfigurationError("highest root is not unique");
  d.rho = Exponent(n, 1);
  d.h_dual = 1 + dot(d.rho, d.theta_coroot);

  // Psi(a) = (1/h) sum_{alpha > 0} <alpha, a> alpha.
  d.psi = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (const auto& alpha : d.positive_roots) s += alpha[i] * alpha[j];
      if (s % d.h_dual != 0) throw ConfigurationError("Psi form is not integral");
      d.psi(i, j) = s / d.h_dual;
    }
  if (d.psi != d.cartan) throw ConfigurationError("Psi form does not restrict to the Cartan pairing");
  return d;
}

std::int64_t psi_pair(const RootDatum& d, const Exponent& a, const Exponent& b) {
  if (a.size() != d.rank || b.size() != d.rank) throw DomainError("coweight has the wrong rank");
  return dot(d.psi.apply(a), b);
}

bool affine_positive(const RootDatum& d, const AffineRoot& r) {
  return r.level > 0 || (r.level == 0 && d.is_positive(r.finite));
}

AffineRoot negate(const AffineRoot& r) { return {-r.level, -r.finite}; }

AffineRoot simple_affine_root(const RootDatum& d, std::size_t i) {
  if (i > d.rank) throw DomainError("simple affine root index out of range");
  if (i == 0) return {1, -d.theta};
  return {0, d.simple_root(i - 1)};
}

AffineCoweight affine_coroot(const RootDatum& d, const AffineRoot& r) {
  Exponent c = d.coroot(r.finite);
  AffineCoweight l{r.level};
  l.insert(l.end(), c.begin(), c.end());
  return l;
}

std::int64_t rho_hat_pairing(const RootDatum& d, const AffineCoweight& l) {
  if (l.size() != d.rank + 1) throw DomainError("affine coweight has the wrong rank");
  return d.h_dual * l[0] + dot(d.rho, Exponent(l.begin() + 1, l.end()));
}

std::optional<AffineRoot> root_of_coroot(const RootDatum& d, const AffineCoweight& l) {
  if (l.size() != d.rank + 1) return std::nullopt;
  Exponent b(l.begin() + 1, l.end());
  for (std::size_t k = 0; k < d.positive_coroots.size(); ++k) {
    if (d.positive_coroots[k] == b) return AffineRoot{l[0], d.positive_roots[k]};
    if (d.positive_coroots[k] == -b) return AffineRoot{l[0], -d.positive_roots[k]};
  }
  return std::nullopt;
}

}  // namespace daha
