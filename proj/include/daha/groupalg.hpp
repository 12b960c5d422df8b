#pragma once

#include <map>
#include <memory>
#include <string>

#include "daha/ratfun.hpp"
#include "daha/weyl.hpp"

namespace daha {

/// straight: [w] f = f^w [w] with t^l -> t^{w o l}.
/// star: the same conjugated by t^l -> q^{<rho_hat, l>} t^l, so that
/// t^l -> q^{<rho_hat, w o l> - <rho_hat, l>} t^{w o l}.
enum class Mode { straight, star };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

/// Shared immutable root datum, cached per label.
std::shared_ptr<const RootDatum> shared_root_datum(const std::string& label);

/// Dimension of the affine torus (level coordinate plus rank).
inline std::size_t torus_dim(const RootDatum& d) { return d.rank + 1; }

/// The monomial substitution f -> f^w in the given mode.
MonomialMap substitution_map(const RootDatum& d, const AffineWeylElement& w, Mode mode);
RatFun weyl_substitute(const RootDatum& d, const RatFun& f, const AffineWeylElement& w, Mode mode);

/// Finite sum sum_w f_w [w] with coefficients written on the left.
class AlgebraElement {
 public:
  using Terms = std::map<AffineWeylElement, RatFun>;
  static constexpr std::size_t kDefaultSupportBound = 512;

  AlgebraElement(std::shared_ptr<const RootDatum> datum, Mode mode);
  static AlgebraElement identity(std::shared_ptr<const RootDatum> datum, Mode mode);
  /// f [w]
  static AlgebraElement term(std::shared_ptr<const RootDatum> datum, Mode mode, const AffineWeylElement& w,
                             const RatFun& f);
  /// 1 [w]
  static AlgebraElement group_element(std::shared_ptr<const RootDatum> datum, Mode mode, const AffineWeylElement& w);

  const RootDatum& datum() const noexcept { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const noexcept { return datum_; }
  Mode mode() const noexcept { return mode_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }

  /// f_w, or zero.
  RatFun coefficient(const AffineWeylElement& w) const;
  void add_term(const AffineWeylElement& w, const RatFun& f);

  AlgebraElement operator-() const;
  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }
  static AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y,
                                 std::size_t support_bound = kDefaultSupportBound);
  /// c * x (left multiplication by the coefficient c).
  AlgebraElement scaled(const RatFun& c) const;
  /// x with every coefficient transformed by fn.
  template <class Fn>
  AlgebraElement map_coefficients(Fn&& fn, Mode new_mode) const {
    AlgebraElement r(datum_, new_mode);
    for (const auto& [w, f] : terms_) r.add_term(w, fn(f));
    return r;
  }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

  std::string to_string() const;

 private:
  void check_compatible(const AlgebraElement& y) const;
  std::shared_ptr<const RootDatum> datum_;
  Mode mode_;
  Terms terms_;
};

}  // namespace daha
