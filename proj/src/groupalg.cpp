#include "daha/groupalg.hpp"

#include <mutex>
#include <sstream>

#include "daha/error.hpp"

namespace daha {

std::string to_string(Mode m) { return m == Mode::straight ? "straight" : "star"; }

Mode mode_from_string(const std::string& s) {
  if (s == "straight") return Mode::straight;
  if (s == "star") return Mode::star;
  throw ParseError("unknown action mode '" + s + "' (expected straight or star)");
}

std::shared_ptr<const RootDatum> shared_root_datum(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<const RootDatum>(build_root_datum(label));
  cache.emplace(label, d);
  return d;
}

MonomialMap substitution_map(const RootDatum& d, const AffineWeylElement& w, Mode mode) {
  MonomialMap m{circ_matrix(d, w), {}};
  if (mode == Mode::star) {
    // eta_j = 2 (rho_hat(M e_j) - rho_hat(e_j)), the exponent of v.
    const std::size_t n = torus_dim(d);
    m.v_weight.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      Exponent col(n, 0);
      for (std::size_t i = 0; i < n; ++i) col[i] = m.matrix(i, j);
      Exponent ej(n, 0);
      ej[j] = 1;
      m.v_weight[j] = 2 * (rho_hat_pairing(d, col) - rho_hat_pairing(d, ej));
    }
  }
  return m;
}

RatFun weyl_substitute(const RootDatum& d, const RatFun& f, const AffineWeylElement& w, Mode mode) {
  if (w.is_identity()) return f;
  return f.mapped(substitution_map(d, w, mode));
}

AlgebraElement::AlgebraElement(std::shared_ptr<const RootDatum> datum, Mode mode)
    : datum_(std::move(datum)), mode_(mode) {
  if (!datum_) throw DomainError("algebra element without a root datum");
}

AlgebraElement AlgebraElement::identity(std::shared_ptr<const RootDatum> datum, Mode mode) {
  const std::size_t rank = datum->rank;
  return group_element(std::move(datum), mode, AffineWeylElement::identity(rank));
}

AlgebraElement AlgebraElement::term(std::shared_ptr<const RootDatum> datum, Mode mode, const AffineWeylElement& w,
                                    const RatFun& f) {
  AlgebraElement r(std::move(datum), mode);
  r.add_term(w, f);
  return r;
}

AlgebraElement AlgebraElement::group_element(std::shared_ptr<const RootDatum> datum, Mode mode,
                                             const AffineWeylElement& w) {
  const std::size_t n = torus_dim(*datum);
  return term(std::move(datum), mode, w, RatFun::constant(n, Scalar(1)));
}

RatFun AlgebraElement::coefficient(const AffineWeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFun(torus_dim(*datum_)) : it->second;
}

void AlgebraElement::add_term(const AffineWeylElement& w, const RatFun& f) {
  if (f.dim() != torus_dim(*datum_)) throw DomainError("coefficient lives on a torus of the wrong dimension");
  if (w.rank() != datum_->rank) throw DomainError("Weyl element of the wrong rank");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_compatible(const AlgebraElement& y) const {
  if (mode_ != y.mode_) throw DomainError("cannot combine " + daha::to_string(mode_) + " and " +
                                          daha::to_string(y.mode_) + " elements");
  if (datum_->label != y.datum_->label) throw DomainError("algebra elements over different root data");
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, f] : r.terms_) f = -f;
  return r;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  x.check_compatible(y);
  AlgebraElement r = x;
  for (const auto& [w, f] : y.terms_) r.add_term(w, f);
  return r;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return x + (-y); }

AlgebraElement AlgebraElement::multiply(const AlgebraElement& x, const AlgebraElement& y, std::size_t support_bound) {
  x.check_compatible(y);
  AlgebraElement r(x.datum_, x.mode_);
  for (const auto& [w, f] : x.terms_) {
    const MonomialMap sub = substitution_map(*x.datum_, w, x.mode_);
    for (const auto& [w2, g] : y.terms_) {
      r.add_term(w * w2, f * (w.is_identity() ? g : g.mapped(sub)));
      if (r.terms_.size() > support_bound)
        throw CapacityError("product support exceeds " + std::to_string(support_bound) + " terms");
    }
  }
  return r;
}

AlgebraElement AlgebraElement::scaled(const RatFun& c) const {
  AlgebraElement r(datum_, mode_);
  for (const auto& [w, f] : terms_) r.add_term(w, c * f);
  return r;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.mode_ != y.mode_ || x.datum_->label != y.datum_->label) return false;
  if (x.terms_.size() != y.terms_.size()) return false;
  for (auto ix = x.terms_.begin(), iy = y.terms_.begin(); ix != x.terms_.end(); ++ix, ++iy)
    if (!(ix->first == iy->first) || !(ix->second == iy->second)) return false;
  return true;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.to_string() << ")[";
    const auto word = reduced_word(*datum_, w);
    if (word.empty()) os << "e";
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << "s" << word[k];
    os << "]";
  }
  return os.str();
}

}  // namespace daha
