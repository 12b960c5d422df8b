#include "doctest.h"

#include <random>

#include "daha/error.hpp"
#include "daha/json_io.hpp"
#include "random_elements.hpp"

using namespace daha;
using io::Json;

TEST_CASE("rationals and scalars round-trip exactly") {
  CHECK(io::to_json(Rational(7)).dump() == "7");
  CHECK(io::to_json(Rational(-3, 4)).dump() == "\"-3/4\"");
  CHECK(io::rational_from_json(Json("6/8")) == Rational(3, 4));
  CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json("x")), ParseError);
  const Scalar a = Scalar::v() + Scalar(Rational(1, 3));
  CHECK(io::to_json(a).dump() == "[\"1/3\",1]");
  const Scalar b = a / (Scalar(1) - Scalar::q());
  CHECK(io::scalar_from_json(io::to_json(b)) == b);
  CHECK(io::scalar_from_json(io::to_json(Scalar::v_power(-3))) == Scalar::v_power(-3));
  CHECK(io::scalar_from_json(Json(5)) == Scalar(5));
}

TEST_CASE("RatFun round-trips bit-exactly") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const RatFun f = testgen::random_ratfun(rng, 3);
    const RatFun g = io::ratfun_from_json(io::parse(io::to_json(f).dump()));
    CHECK(g.same_representation(f));
    CHECK(io::to_json(g).dump() == io::to_json(f).dump());
  }
  CHECK(io::ratfun_from_json(io::to_json(RatFun(2))).is_zero());
  CHECK_THROWS_AS(io::ratfun_from_json(io::parse(R"({"dim":2,"num":[[[0],1]],"den":[]})")), ParseError);
  CHECK_THROWS_AS(io::ratfun_from_json(io::parse(R"({"dim":2,"num":[],"den":[[1,[0,0],1]]})")), ParseError);
}

TEST_CASE("root datum document") {
  auto d = shared_root_datum("A1");
  CHECK(io::to_json(*d).dump() ==
        R"({"label":"A1","cartan_matrix":[[2]],"positive_roots":[[2]],"theta":[2],"rho":[1],"h_dual":2,"psi_matrix":[[2]]})");
}

TEST_CASE("Weyl elements from words and canonical pairs") {
  std::mt19937 rng(4);
  for (const char* label : {"A1", "A2", "D4"}) {
    auto d = shared_root_datum(label);
    for (int trial = 0; trial < 20; ++trial) {
      const auto w = testgen::random_weyl(*d, rng, 6);
      const Json j = io::to_json(*d, w);
      CHECK(io::weyl_from_json(*d, j) == w);
      Json pair = j;
      pair.erase("word");
      CHECK(io::weyl_from_json(*d, pair) == w);
      CHECK(io::weyl_from_json(*d, j.at("word")) == w);
    }
  }
  auto d = shared_root_datum("A2");
  Json bad = io::to_json(*d, simple_reflection(*d, 1));
  bad["word"] = Json::array({2});
  CHECK_THROWS_AS(io::weyl_from_json(*d, bad), ParseError);
  CHECK_THROWS_AS(io::weyl_from_json(*d, io::parse("[0, 3]")), ParseError);
  CHECK_THROWS_AS(io::weyl_from_json(*d, io::parse(R"({"finite":[[2,0],[0,1]],"translation":[0,0]})")), ParseError);
}

TEST_CASE("algebra elements and reports round-trip") {
  std::mt19937 rng(12);
  for (auto mode : {Mode::straight, Mode::star}) {
    auto d = shared_root_datum("A2");
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = testgen::random_element(d, mode, rng, 3, 3);
      const auto text = io::to_json(x).dump();
      const auto y = io::element_from_json(io::parse(text));
      CHECK(y == x);
      CHECK(io::to_json(y).dump() == text);
      const auto rep = check_membership(x, MembershipConfig::cherednik());
      const auto rj = io::to_json(*d, rep);
      CHECK(io::to_json(*d, io::report_from_json(*d, rj)).dump() == rj.dump());
    }
  }
  Json wrong = io::to_json(AlgebraElement::identity(shared_root_datum("A1"), Mode::star));
  wrong["schema"] = "daha.element/99";
  CHECK_THROWS_AS(io::element_from_json(wrong), ParseError);
  wrong["schema"] = io::kElementSchema;
  wrong["type"] = "E8";
  CHECK_THROWS_AS(io::element_from_json(wrong), ConfigurationError);
  CHECK_THROWS_AS(io::parse("{not json"), ParseError);
}

TEST_CASE("torsor functions and cone series round-trip") {
  FiniteTorsor t{{"a", "b"}, 2, {Exponent{0, 0}, Exponent{1, -1}}};
  TorsorFunction phi(t);
  phi.set(0, Exponent{1, 2}, Scalar::v());
  phi.set(1, Exponent{-1, 0}, Scalar(Rational(2, 3)));
  CHECK(io::torsor_function_from_json(io::to_json(phi)) == phi);

  auto d = shared_root_datum("A1");
  const Cone cone = Cone::weyl_image(*d, simple_reflection(*d, 0));
  LaurentPoly num(2);
  num.add_term(Exponent{0, 0}, Scalar(1));
  num.add_term(Exponent{1, 1}, Scalar(3));
  RatFun::Denominator den;
  den[Binomial{Exponent{0, 1}, Scalar::q()}] = 2;
  const auto s = cone_expand(RatFun(num, den), cone, 9);
  const auto back = io::cone_series_from_json(io::to_json(s));
  CHECK(io::to_json(back).dump() == io::to_json(s).dump());
  CHECK(cone_sum(back) == cone_sum(s));
  Json broken = io::to_json(s);
  broken["shift"] = Json::array({100, 100});
  CHECK_THROWS_AS(io::cone_series_from_json(broken), ParseError);
}
