#include "daha/mellin.hpp"

#include <algorithm>

#include "daha/error.hpp"

namespace daha {

void FiniteTorsor::validate() const {
  if (base_points.size() != base.size()) throw DomainError("torsor needs exactly one base point per element of X");
  for (const auto& b : base_points)
    if (b.size() != lattice_dim) throw DomainError("torsor base point has the wrong dimension");
}

// --- TorsorFunction ---------------------------------------------------------

TorsorFunction::TorsorFunction(FiniteTorsor torsor) : torsor_(std::move(torsor)) { torsor_.validate(); }

Scalar TorsorFunction::at(std::size_t x, const Exponent& a) const {
  auto it = values_.find({x, a});
  return it == values_.end() ? Scalar() : it->second;
}

void TorsorFunction::set(std::size_t x, const Exponent& a, const Scalar& c) {
  if (x >= torsor_.size()) throw DomainError("torsor point outside the base set");
  if (a.size() != torsor_.lattice_dim) throw DomainError("torsor point has the wrong dimension");
  if (c.is_zero())
    values_.erase({x, a});
  else
    values_[{x, a}] = c;
}

void TorsorFunction::add(std::size_t x, const Exponent& a, const Scalar& c) { set(x, a, at(x, a) + c); }

TorsorFunction TorsorFunction::translated(const Exponent& c) const {
  if (c.size() != torsor_.lattice_dim) throw DomainError("translation has the wrong dimension");
  TorsorFunction r(torsor_);
  for (const auto& [p, v] : values_) r.values_.emplace(TorsorPoint{p.first, p.second + c}, v);
  return r;
}

TorsorFunction TorsorFunction::retrivialized(const std::vector<Exponent>& new_base_points) const {
  FiniteTorsor t = torsor_;
  t.base_points = new_base_points;
  TorsorFunction r(t);
  for (const auto& [p, v] : values_) {
    // base + a = new_base + a'
    const Exponent a = p.second + torsor_.base_points[p.first] - new_base_points[p.first];
    r.values_.emplace(TorsorPoint{p.first, a}, v);
  }
  return r;
}

std::vector<LaurentPoly> mellin(const TorsorFunction& phi) {
  const auto& t = phi.torsor();
  std::vector<LaurentPoly> out(t.size(), LaurentPoly(t.lattice_dim));
  for (const auto& [p, v] : phi.values()) out[p.first].add_term(p.second, v);
  return out;
}

TorsorFunction mellin_inverse(const FiniteTorsor& torsor, const std::vector<LaurentPoly>& images) {
  if (images.size() != torsor.size()) throw DomainError("one Laurent polynomial per torsor fiber expected");
  TorsorFunction phi(torsor);
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x].dim() != torsor.lattice_dim) throw DomainError("Mellin image has the wrong dimension");
    for (const auto& [e, c] : images[x].terms()) phi.set(x, e, c);
  }
  return phi;
}

// --- Cone -------------------------------------------------------------------

Cone::Cone(std::vector<Exponent> generators) : gens_(std::move(generators)) {
  const std::size_t n = gens_.size();
  if (n == 0) throw DomainError("cone needs at least one generator");
  for (const auto& g : gens_)
    if (g.size() != n) throw DomainError("cone generators must form a square basis");
  // Invert the generator matrix (generators as columns) over Q and demand
  // an integral inverse.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(gens_[j][i]));
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("cone generators are linearly dependent");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  inverse_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = m[i][n + j];
      x.canonicalize();
      if (x.get_den() != 1) throw DomainError("cone generators must form a basis of the lattice");
      inverse_(i, j) = x.get_num().get_si();
    }
}

Cone Cone::weyl_image(const RootDatum& d, const AffineWeylElement& w) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i <= d.rank; ++i)
    gens.push_back(act_circ(d, w, affine_coroot(d, simple_affine_root(d, i))));
  return Cone(std::move(gens));
}

Exponent Cone::coordinates(const Exponent& p) const {
  if (p.size() != dim()) throw DomainError("lattice point has the wrong dimension for the cone");
  return inverse_.apply(p);
}

Exponent Cone::point(const Exponent& coords) const {
  Exponent p(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) p[j] += coords[i] * gens_[i][j];
  return p;
}

bool Cone::contains(const Exponent& p) const {
  const auto c = coordinates(p);
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t Cone::degree(const Exponent& p) const {
  std::int64_t s = 0;
  for (auto x : coordinates(p)) s += x;
  return s;
}

bool Cone::graded_less(const Exponent& a, const Exponent& b) const {
  const auto da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

Cone Cone::opposite() const {
  std::vector<Exponent> g;
  for (const auto& x : gens_) g.push_back(-x);
  return Cone(std::move(g));
}

// --- expansion --------------------------------------------------------------

ConeSeries cone_expand(const RatFun& f, const Cone& cone, int order) {
  const std::size_t n = f.dim();
  if (n != cone.dim()) throw DomainError("cone and function live on different tori");
  LaurentPoly num = f.num();
  std::vector<std::pair<Binomial, int>> dens;
  for (const auto& [b, m] : f.den()) {
    if (cone.contains(b.mu)) {
      dens.emplace_back(b, m);
    } else if (cone.contains(-b.mu)) {
      // 1/(1 - c t^mu) = -c^{-1} t^{-mu} / (1 - c^{-1} t^{-mu})
      const Scalar ci = b.c.inverse();
      num = num.shifted(daha::scaled(-b.mu, m)).scaled((-ci).pow(m));
      dens.emplace_back(Binomial{-b.mu, ci}, m);
    } else {
      throw ExpansionDomainError("denominator exponent " + exponent_to_string(b.mu) +
                                 " is not comparable with the cone in either orientation");
    }
  }
  Exponent low(n, 0);
  bool first = true;
  for (const auto& [e, c] : num.terms()) {
    const auto co = cone.coordinates(e);
    for (std::size_t i = 0; i < n; ++i) low[i] = first ? co[i] : std::min(low[i], co[i]);
    first = false;
  }
  return ConeSeries{cone, cone.point(low), std::move(num), std::move(dens), order};
}

namespace {

LaurentPoly truncate(const LaurentPoly& p, const Cone& cone, std::int64_t max_degree) {
  LaurentPoly r(p.dim());
  for (const auto& [e, c] : p.terms())
    if (cone.degree(e) <= max_degree) r.add_term(e, c);
  return r;
}

}  // namespace

TermList series_terms(const ConeSeries& s) {
  const Cone& cone = s.cone;
  const std::size_t n = cone.dim();
  if (s.numerator.is_zero()) return {};
  std::int64_t dmin = 0;
  bool first = true;
  for (const auto& [e, c] : s.numerator.terms()) {
    const auto d = cone.degree(e);
    dmin = first ? d : std::min(dmin, d);
    first = false;
  }
  const std::int64_t budget = s.order - dmin;
  LaurentPoly prod = LaurentPoly::constant(n, Scalar(1));
  if (budget >= 0) {
    for (const auto& [b, m] : s.denominators) {
      if (!cone.contains(b.mu) || daha::is_zero(b.mu))
        throw ExpansionDomainError("series denominator " + exponent_to_string(b.mu) + " is not in the cone");
      const std::int64_t step = cone.degree(b.mu);
      LaurentPoly geo(n);
      Scalar ck(1);
      for (std::int64_t k = 0; k * step <= budget; ++k, ck *= b.c) geo.add_term(daha::scaled(b.mu, k), ck);
      for (int i = 0; i < m; ++i) prod = truncate(prod * geo, cone, budget);
    }
  }
  const LaurentPoly full = truncate(s.numerator * prod, cone, s.order);
  TermList out(full.terms().begin(), full.terms().end());
  std::sort(out.begin(), out.end(), [&cone](const auto& a, const auto& b) { return cone.graded_less(a.first, b.first); });
  return out;
}

RatFun cone_sum(const ConeSeries& s) {
  RatFun::Denominator den;
  for (const auto& [b, m] : s.denominators) den[b] += m;
  return RatFun(s.numerator, std::move(den));
}

LaurentPoly resum_terms(const TermList& terms, const std::vector<std::pair<Binomial, int>>& denominators,
                        const Cone& cone, int order) {
  LaurentPoly p(cone.dim());
  for (const auto& [e, c] : terms) p.add_term(e, c);
  for (const auto& [b, m] : denominators)
    for (int i = 0; i < m; ++i) p = truncate(p * b.as_poly(), cone, order);
  return truncate(p, cone, order);
}

// --- straight / star transfer -----------------------------------------------

RatFun rho_shift_coefficient(const RootDatum& d, const RatFun& f, int sign) {
  const std::size_t n = torus_dim(d);
  Exponent eta(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Exponent unit(n, 0);
    unit[j] = 1;
    eta[j] = 2 * sign * rho_hat_pairing(d, unit);  // q = v^2
  }
  return f.mapped(MonomialMap{IntMatrix::identity(n), eta});
}

AlgebraElement rho_shift(const AlgebraElement& x) {
  const RootDatum& d = x.datum();
  const bool to_star = x.mode() == Mode::straight;
  const int sign = to_star ? 1 : -1;
  AlgebraElement r(x.datum_ptr(), to_star ? Mode::star : Mode::straight);
  for (const auto& [w, f] : x.terms()) r.add_term(w, rho_shift_coefficient(d, f, sign));
  return r;
}

}  // namespace daha
