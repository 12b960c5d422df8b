#include "daha/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "daha/error.hpp"

namespace daha {

AffineWeylElement::AffineWeylElement(IntMatrix coweight_matrix, IntMatrix weight_matrix, Exponent translation)
    : u_(std::move(coweight_matrix)), uw_(std::move(weight_matrix)), a_(std::move(translation)) {}

AffineWeylElement AffineWeylElement::identity(std::size_t rank) {
  return {IntMatrix::identity(rank), IntMatrix::identity(rank), Exponent(rank, 0)};
}

AffineWeylElement AffineWeylElement::translation(const Exponent& a) {
  return {IntMatrix::identity(a.size()), IntMatrix::identity(a.size()), a};
}

bool AffineWeylElement::is_identity() const { return daha::is_zero(a_) && is_translation(); }

AffineWeylElement operator*(const AffineWeylElement& x, const AffineWeylElement& y) {
  if (x.rank() != y.rank()) throw DomainError("affine Weyl elements of different rank");
  return {x.u_ * y.u_, x.uw_ * y.uw_, x.a_ + x.u_.apply(y.a_)};
}

AffineWeylElement AffineWeylElement::inverse() const {
  IntMatrix ui = uw_.transpose();
  return {ui, u_.transpose(), -ui.apply(a_)};
}

namespace {

// Finite reflection s_beta: on coweights b -> b - <beta,b> beta^vee, on
// weights gamma -> gamma - <gamma,beta^vee> beta.
AffineWeylElement finite_reflection(const RootDatum& d, const Exponent& beta) {
  const Exponent bv = d.coroot(beta);
  const std::size_t n = d.rank;
  IntMatrix u = IntMatrix::identity(n), uw = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      u(i, j) -= bv[i] * beta[j];
      uw(i, j) -= beta[i] * bv[j];
    }
  return {u, uw, Exponent(n, 0)};
}

}  // namespace

AffineWeylElement reflection(const RootDatum& d, const AffineRoot& r) {
  AffineWeylElement s = finite_reflection(d, r.finite);
  if (r.level == 0) return s;
  return AffineWeylElement::translation(scaled(d.coroot(r.finite), r.level)) * s;
}

AffineWeylElement simple_reflection(const RootDatum& d, std::size_t i) {
  if (i > d.rank) throw DomainError("generator index " + std::to_string(i) + " out of range for " + d.label);
  return reflection(d, simple_affine_root(d, i));
}

AffineWeylElement from_word(const RootDatum& d, const std::vector<std::size_t>& word) {
  AffineWeylElement w = AffineWeylElement::identity(d.rank);
  for (auto i : word) w = w * simple_reflection(d, i);
  return w;
}

AffineWeight act_weight(const AffineWeylElement& w, const AffineWeight& x) {
  Exponent beta = w.finite_on_weights().apply(x.finite);
  return {x.level + dot(w.translation_part(), beta), std::move(beta)};
}

AffineCoweight act_circ(const RootDatum& d, const AffineWeylElement& w, const AffineCoweight& l) {
  return circ_matrix(d, w).apply(l);
}

IntMatrix circ_matrix(const RootDatum& d, const AffineWeylElement& w) {
  const std::size_t n = d.rank;
  const IntMatrix& u = w.finite();
  // row 0: (1, a^T Psi u)
  const Exponent psi_a = d.psi.apply(w.translation_part());
  IntMatrix m(n + 1, n + 1);
  m(0, 0) = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < n; ++k) s += psi_a[k] * u(k, j);
    m(0, j + 1) = s;
    for (std::size_t i = 0; i < n; ++i) m(i + 1, j + 1) = u(i, j);
  }
  return m;
}

std::vector<AffineRoot> inversion_set(const RootDatum& d, const AffineWeylElement& w) {
  // w(n, beta) has level n + <a, u beta>, so levels above max |<a, root>| stay positive.
  std::int64_t bound = 0;
  for (const auto& beta : d.positive_roots) bound = std::max(bound, std::abs(dot(w.translation_part(), beta)));
  std::vector<AffineRoot> out;
  const auto all = d.roots();
  for (std::int64_t n = 0; n <= bound; ++n)
    for (const auto& beta : all) {
      AffineRoot r{n, beta};
      if (!affine_positive(d, r)) continue;
      if (!affine_positive(d, act_weight(w, r))) out.push_back(std::move(r));
    }
  return out;
}

std::size_t length(const RootDatum& d, const AffineWeylElement& w) { return inversion_set(d, w).size(); }

bool is_right_descent(const RootDatum& d, const AffineWeylElement& w, std::size_t i) {
  return !affine_positive(d, act_weight(w, simple_affine_root(d, i)));
}

std::vector<std::size_t> reduced_word(const RootDatum& d, const AffineWeylElement& w) {
  std::vector<std::size_t> rev;
  AffineWeylElement x = w;
  const std::size_t len = length(d, w);
  while (!x.is_identity()) {
    std::size_t i = 0;
    while (i <= d.rank && !is_right_descent(d, x, i)) ++i;
    if (i > d.rank || rev.size() >= len) throw DomainError("descent peeling failed to terminate");
    rev.push_back(i);
    x = x * simple_reflection(d, i);
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<AffineRoot> left_inversion_set(const RootDatum& d, const AffineWeylElement& w) {
  return inversion_set(d, w.inverse());
}

namespace {

AffineWeight root_sum(const RootDatum& d, const std::vector<AffineRoot>& roots) {
  AffineWeight s{0, Exponent(d.rank, 0)};
  for (const auto& r : roots) {
    s.level += r.level;
    s.finite = s.finite + r.finite;
  }
  return s;
}

}  // namespace

AffineWeight inversion_sum(const RootDatum& d, const AffineWeylElement& w) { return root_sum(d, inversion_set(d, w)); }

AffineWeight delta_hat(const RootDatum& d, const AffineWeylElement& w) {
  return root_sum(d, left_inversion_set(d, w));
}

ExtendedWeight act_extended(const RootDatum& d, const AffineWeylElement& w, const ExtendedWeight& x) {
  const Exponent& a = w.translation_part();
  const Exponent beta = w.finite_on_weights().apply(x.finite);
  const Exponent psi_a = d.psi.apply(a);
  return {x.level, beta + scaled(psi_a, x.level), x.delta + dot(a, beta) + x.level * dot(a, psi_a) / 2};
}

ExtendedWeight rho_hat(const RootDatum& d) { return {-d.h_dual, d.rho, 0}; }

ExtendedWeight rho_hat_defect(const RootDatum& d, const AffineWeylElement& w) {
  const ExtendedWeight r = rho_hat(d);
  const ExtendedWeight wr = act_extended(d, w, r);
  return {r.level - wr.level, r.finite - wr.finite, r.delta - wr.delta};
}

bool bruhat_leq(const RootDatum& d, const AffineWeylElement& u, const AffineWeylElement& w) {
  constexpr std::size_t kBudget = 10;
  const std::size_t lw = length(d, w), lu = length(d, u);
  if (lw > kBudget || lu > kBudget)
    throw CapacityError("Bruhat comparison beyond length " + std::to_string(kBudget));
  if (lu > lw) return false;
  const auto word = reduced_word(d, w);
  std::vector<AffineWeylElement> gens;
  for (auto i : word) gens.push_back(simple_reflection(d, i));
  for (std::uint32_t mask = 0; mask < (1U << word.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) < lu) continue;
    AffineWeylElement x = AffineWeylElement::identity(d.rank);
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask & (1U << k)) x = x * gens[k];
    if (x == u) return true;
  }
  return false;
}

std::vector<BallEntry> weyl_ball(const RootDatum& d, std::size_t radius) {
  if (radius > 12) throw CapacityError("Weyl ball radius is limited to 12");
  std::vector<AffineWeylElement> gens;
  for (std::size_t i = 0; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));
  std::map<AffineWeylElement, std::size_t> index;
  std::vector<BallEntry> out;
  std::deque<std::size_t> queue;
  out.push_back({AffineWeylElement::identity(d.rank), 0, {}});
  index.emplace(out[0].element, 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    if (out[k].word_length == radius) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      AffineWeylElement y = out[k].element * gens[i];
      if (index.count(y)) continue;
      auto word = out[k].word;
      word.push_back(i);
      index.emplace(y, out.size());
      out.push_back({std::move(y), out[k].word_length + 1, std::move(word)});
      queue.push_back(out.size() - 1);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BallEntry& x, const BallEntry& y) {
    return x.word_length != y.word_length ? x.word_length < y.word_length : x.element < y.element;
  });
  return out;
}

bool canonical_less(const RootDatum& d, const AffineWeylElement& x, const AffineWeylElement& y) {
  const auto lx = length(d, x), ly = length(d, y);
  return lx != ly ? lx < ly : x < y;
}

DoubleAffineWeylElement dw_identity(const RootDatum& d) {
  return {AffineWeylElement::identity(d.rank), AffineCoweight(d.rank + 1, 0)};
}

DoubleAffineWeylElement dw_multiply(const RootDatum& d, const DoubleAffineWeylElement& x,
                                    const DoubleAffineWeylElement& y) {
  return {x.hat * y.hat, x.lattice + act_circ(d, x.hat, y.lattice)};
}

}  // namespace daha
