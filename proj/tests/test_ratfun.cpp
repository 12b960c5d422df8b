#include "doctest.h"

#include "daha/error.hpp"
#include "daha/ratfun.hpp"
#include "oracles.hpp"

using namespace daha;
using oracle::Rational;

namespace {

RatFun t(const Exponent& e, const Scalar& c = Scalar(1)) { return RatFun::monomial(e, c); }
RatFun one(std::size_t n) { return RatFun::constant(n, Scalar(1)); }

// A point of the torus with adapted coordinates x' = (x0, rest...).
std::vector<Rational> from_adapted(const AdaptedBasis& b, const std::vector<Rational>& xp) {
  const std::size_t n = xp.size();
  std::vector<Rational> pt(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pt[i] *= oracle::rpow(xp[j], b.forward(j, i));
  return pt;
}

}  // namespace

TEST_CASE("binomial denominators cancel against numerators") {
  Exponent mu{1, -1};
  RatFun f(LaurentPoly::constant(2, Scalar(1)) - LaurentPoly::monomial(scaled(mu, 2), Scalar::q()),
           {{Binomial{mu, Scalar::v()}, 1}});
  CHECK(f.is_polynomial());
  CHECK(f == one(2) + t(mu, Scalar::v()));
}

TEST_CASE("denominator orientation is normalized") {
  Exponent mu{0, 1};
  RatFun a = RatFun::inverse_binomial(Scalar(3), -mu);
  REQUIRE(a.den().size() == 1);
  CHECK(lex_positive(a.den().begin()->first.mu));
  RatFun expect = t(mu, Scalar(Rational(-1, 3))) * RatFun::inverse_binomial(Scalar(Rational(1, 3)), mu);
  CHECK(a.same_representation(expect));
  CHECK_THROWS_AS(RatFun::inverse_binomial(Scalar(1), Exponent{0, 0}), ArithmeticError);
}

TEST_CASE("field operations agree with pointwise evaluation") {
  std::mt19937 rng(7);
  const Scalar v = Scalar::v();
  RatFun f = (t({1, 0}) - t({0, 2}, v)) * RatFun::inverse_binomial(v * v, {1, -1}, 2);
  RatFun g = (one(2) + t({-1, 1}, Scalar(5))) * RatFun::inverse_binomial(Scalar(2), {0, 1}) +
             RatFun::inverse_binomial(v.inverse(), {1, 1});
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto pt = oracle::sample(rng, 2);
    Rational at = oracle::sample(rng, 1)[0];
    try {
      const Rational fv = oracle::eval(f, pt, at), gv = oracle::eval(g, pt, at);
      CHECK(oracle::eval(f + g, pt, at) == fv + gv);
      CHECK(oracle::eval(f - g, pt, at) == fv - gv);
      CHECK(oracle::eval(f * g, pt, at) == fv * gv);
      CHECK(oracle::eval(g * f.num().scaled(Scalar(1)), pt, at) == gv * oracle::eval_poly(f.num(), pt, at));
      ++checked;
    } catch (const std::domain_error&) {
    } catch (const ArithmeticError&) {
    }
  }
  CHECK(checked > 30);
  CHECK(((f + g) - g) == f);
  CHECK((f * g - g * f).is_zero());
}

TEST_CASE("inverses stay inside the representation or fail loudly") {
  RatFun b = one(2) - t({1, 1}, Scalar(4));
  CHECK((b * b.inverse()) == one(2));
  RatFun m = t({2, -1}, Scalar(Rational(2, 3)));
  CHECK((m * m.inverse()) == one(2));
  RatFun tri = one(2) + t({1, 0}) + t({0, 1});
  CHECK_THROWS_AS(tri.inverse(), RepresentationError);
  CHECK_THROWS_AS(RatFun(2).inverse(), ArithmeticError);
}

TEST_CASE("monomial maps act on numerator and denominator") {
  IntMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  MonomialMap m{swap, {1, 0}};
  RatFun f = t({1, 2}) * RatFun::inverse_binomial(Scalar(2), {1, 0});
  RatFun g = f.mapped(m);
  CHECK(g == t({2, 1}, Scalar::v()) * RatFun::inverse_binomial(Scalar(2) * Scalar::v(), {0, 1}));
}

TEST_CASE("adapted bases are unimodular and send the direction to e0") {
  for (const Exponent& d : {Exponent{1, -1}, Exponent{3, 5}, Exponent{0, -1}, Exponent{2, -3, 7}, Exponent{-4, 6, 9}}) {
    for (int variant = 0; variant < 3; ++variant) {
      AdaptedBasis b = adapted_basis(d, variant);
      Exponent e0(d.size(), 0);
      e0[0] = 1;
      CHECK(b.forward.apply(d) == e0);
      CHECK(b.forward * b.backward == IntMatrix::identity(d.size()));
    }
  }
  CHECK_THROWS_AS(adapted_basis({2, 4}), UnsupportedLocusError);
}

TEST_CASE("vanishing order and residue in one variable") {
  const Scalar z(Rational(3, 2));
  Hypersurface h{{1}, z};
  RatFun simple = RatFun::inverse_binomial(z.inverse(), {1});
  CHECK(ord_along(simple, h) == -1);
  CHECK(ord_along(one(1) - t({1}, z.inverse()), h) == 1);
  CHECK(ord_along(RatFun(1), h) == std::nullopt);
  // 1/(1 - c x^2) with c z^2 = 1 has a simple pole at z.
  RatFun sq = t({3}) * RatFun::inverse_binomial(z.pow(-2), {2});
  CHECK(ord_along(sq, h) == -1);
  for (const RatFun& f : {simple, sq, simple + t({-2}, Scalar(7)), simple * (one(1) + t({1}))}) {
    auto res = residue_along(f, h).as_constant();
    REQUIRE(res);
    const Rational r = res->eval(1);
    // (x - z) f(x) -> Res as x -> z, with error O(x - z).
    for (int k = 4; k <= 8; k += 2) {
      Rational eps(1, 1);
      for (int i = 0; i < k; ++i) eps /= 10;
      const Rational x = z.eval(1) + eps;
      Rational approx = (x - z.eval(1)) * oracle::eval(f, {x}, 1);
      Rational err = approx - r;
      if (err < 0) err = -err;
      CHECK(err < 1000 * eps);
    }
  }
  RatFun dbl = simple * simple;
  CHECK(ord_along(dbl, h) == -2);
  CHECK_THROWS_AS(residue_along(dbl, h), HigherOrderPoleError);
}

TEST_CASE("order, residue and restriction in several variables are basis independent") {
  std::mt19937 rng(11);
  const Scalar q = Scalar::q();
  Hypersurface h{{1, -1, 1}, q.inverse()};
  RatFun f = (t({0, 1, 0}) + t({1, 0, 2}, Scalar(3))) * RatFun::inverse_binomial(q, {1, -1, 1}) *
             RatFun::inverse_binomial(Scalar(2), {0, 1, 1});
  RatFun reg = (one(3) - t({1, -1, 1}, q)) * f;
  for (int variant = 0; variant < 3; ++variant) {
    CHECK(ord_along(f, h, variant) == -1);
    CHECK(ord_along(reg, h, variant) == 0);
    CHECK(ord_along(reg * (one(3) - t({2, -2, 2}, q * q)), h, variant) == 1);
    AdaptedBasis b = adapted_basis(h.direction, variant);
    RatFun res = residue_along(f, h, variant);
    RatFun rst = restrict_to(reg, h, variant);
    const Rational zv = q.inverse().eval(Rational(3, 2));
    int checked = 0;
    for (int trial = 0; trial < 10; ++trial) {
      auto y = oracle::sample(rng, 2);
      try {
        auto pt = from_adapted(b, {zv, y[0], y[1]});
        CHECK(oracle::eval(rst, y, Rational(3, 2)) == oracle::eval(reg, pt, Rational(3, 2)));
        // residue of f = restriction of (x - z) f = -z * restriction of (1 - x/z) f
        CHECK(oracle::eval(res, y, Rational(3, 2)) == -zv * oracle::eval(reg, pt, Rational(3, 2)));
        ++checked;
      } catch (const std::domain_error&) {
      }
    }
    CHECK(checked >= 8);
  }
  CHECK(residue_along(f, h, 0).dim() == 2);
  CHECK_THROWS_AS(ord_along(f, Hypersurface{{2, -2, 2}, q}), UnsupportedLocusError);
}
