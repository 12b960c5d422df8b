#include "daha/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "daha/error.hpp"

#ifndef DAHA_FIXTURE_DIR
#define DAHA_FIXTURE_DIR "fixtures"
#endif

namespace daha {

namespace {

using K = ViolationKind;

struct Builder {
  std::vector<Fixture> out;

  void add(std::string name, std::string description, std::string config, AlgebraElement x, K kind) {
    out.push_back(Fixture{std::move(name), std::move(description), std::move(config), std::move(x), {kind}});
  }
};

Exponent coroot(std::initializer_list<std::int64_t> c) { return Exponent(c); }

AlgebraElement on_identity(const std::shared_ptr<const RootDatum>& d, Mode mode, const RatFun& f) {
  return AlgebraElement::term(d, mode, AffineWeylElement::identity(d->rank), f);
}

}  // namespace

std::vector<Fixture> builtin_fixtures() {
  auto a1 = shared_root_datum("A1");
  auto a2 = shared_root_datum("A2");
  const auto straight = Mode::straight;
  const auto star = Mode::star;
  Builder b;

  b.add("bare_reflection", "the group element [s_1] with coefficient 1", "cherednik",
        AlgebraElement::group_element(a2, straight, simple_reflection(*a2, 1)), K::missing_vanishing);

  // Cherednik side, straight mode.
  b.add("v01_affine_reflection", "[s_0] in A1 does not vanish on its inversion hyperplane", "cherednik",
        AlgebraElement::group_element(a1, straight, simple_reflection(*a1, 0)), K::missing_vanishing);
  b.add("v02_length_two", "[s_1 s_2] with coefficient 1", "cherednik",
        AlgebraElement::group_element(a2, straight, from_word(*a2, {1, 2})), K::missing_vanishing);
  b.add("v03_translation", "a bare translation t_{alpha_1^vee}", "cherednik",
        AlgebraElement::group_element(a2, straight, AffineWeylElement::translation(coroot({1, 0}))),
        K::missing_vanishing);
  b.add("v04_pole_off_locus", "1/(1 - 2 X) [e] in A1", "cherednik",
        on_identity(a1, straight, RatFun::inverse_binomial(Scalar(2), coroot({0, 1}))), K::stray_pole);
  b.add("v05_non_root_direction", "pole along alpha_1^vee - alpha_2^vee", "cherednik",
        on_identity(a2, straight, RatFun::inverse_binomial(Scalar(1), coroot({0, 1, -1}))), K::stray_pole);
  b.add("v06_pole_at_q", "1/(1 - q^-1 t^{theta^vee}) [e]", "cherednik",
        on_identity(a2, straight, RatFun::inverse_binomial(Scalar::q().inverse(), coroot({0, 1, 1}))),
        K::stray_pole);
  b.add("v07_double_pole", "1/(1 - X)^2 [e] in A1", "cherednik",
        on_identity(a1, straight, RatFun::inverse_binomial(Scalar(1), coroot({0, 1}), 2)), K::high_order_pole);
  b.add("v08_double_affine_pole", "double pole along the affine simple coroot", "cherednik",
        on_identity(a2, straight, RatFun::inverse_binomial(Scalar(1), coroot({1, -1, -1}), 2)),
        K::high_order_pole);
  b.add("v09_unpartnered_pole", "1/(1 - X) [e] with no [s] term", "cherednik",
        on_identity(a1, straight, RatFun::inverse_binomial(Scalar(1), coroot({0, 1}))), K::residue_mismatch);
  b.add("v10_mutated_tau", "tau_2 with the sign of its [e] coefficient flipped", "cherednik", make_tau(a2, 2, -1),
        K::residue_mismatch);
  {
    const auto tau = make_tau(a2, 1);
    const auto s1 = simple_reflection(*a2, 1);
    const auto e = AffineWeylElement::identity(2);
    AlgebraElement x(a2, straight);
    x.add_term(s1, tau.coefficient(s1) * RatFun::constant(3, Scalar(2)));
    x.add_term(e, tau.coefficient(e));
    b.add("v11_unbalanced_tau", "2 a(X) [s_1] + b(X) [e]", "cherednik", x, K::residue_mismatch);
  }

  // Hecke side, star mode.
  b.add("v12_bare_A", "A_{s_1} = [s_1] in A1 on the Hecke side", "hecke", make_A(a1, simple_reflection(*a1, 1)),
        K::missing_vanishing);
  b.add("v13_bare_affine_A", "A_{s_0} in A2", "hecke", make_A(a2, simple_reflection(*a2, 0)), K::missing_vanishing);
  b.add("v14_tau_without_shift", "c_s [s] in A1", "hecke",
        AlgebraElement::term(a1, star, simple_reflection(*a1, 1), c_function(*a1, simple_reflection(*a1, 1))),
        K::residue_mismatch);
  {
    const auto s1 = simple_reflection(*a2, 1);
    const RatFun c = c_function(*a2, s1);
    AlgebraElement x(a2, star);
    x.add_term(s1, c);
    x.add_term(AffineWeylElement::identity(2), RatFun::constant(3, Scalar(1)) + c);
    b.add("v15_mutated_T", "c_1 [s_1] + (1 + c_1) [e]", "hecke", x, K::residue_mismatch);
  }
  b.add("v16_cherednik_pole", "1/(1 - X) [e] seen from the Hecke side", "hecke",
        on_identity(a1, star, RatFun::inverse_binomial(Scalar(1), coroot({0, 1}))), K::stray_pole);
  b.add("v17_double_pole", "1/(1 - q t^{alpha_1^vee})^2 [e]", "hecke",
        on_identity(a2, star, RatFun::inverse_binomial(Scalar::q(), coroot({0, 1, 0}), 2)), K::high_order_pole);
  b.add("v18_half_shift", "1/(1 - v t^{alpha_2^vee}) [e]", "hecke",
        on_identity(a2, star, RatFun::inverse_binomial(Scalar::v(), coroot({0, 0, 1}))), K::stray_pole);
  b.add("v19_c_times_s2", "c_2 [s_2] in A2", "hecke",
        AlgebraElement::term(a2, star, simple_reflection(*a2, 2), c_function(*a2, simple_reflection(*a2, 2))),
        K::residue_mismatch);
  b.add("v20_double_affine_pole", "1/(1 - q t^{alpha_0^vee})^2 [e] in A1", "hecke",
        on_identity(a1, star, RatFun::inverse_binomial(Scalar::q(), coroot({1, -1}), 2)), K::high_order_pole);
  return std::move(b.out);
}

io::Json fixture_to_json(const Fixture& f) {
  io::Json kinds = io::Json::array();
  for (auto k : f.expected) kinds.push_back(to_string(k));
  io::Json j;
  j["schema"] = io::kFixtureSchema;
  j["name"] = f.name;
  j["description"] = f.description;
  j["config"] = f.config;
  j["expected"] = {{"compliant", false}, {"kinds", kinds}};
  j["element"] = io::to_json(f.element);
  return j;
}

Fixture fixture_from_json(const io::Json& j) {
  io::check_schema(j, io::kFixtureSchema);
  try {
    Fixture f{j.at("name").get<std::string>(), j.value("description", std::string()),
              j.at("config").get<std::string>(), io::element_from_json(j.at("element")), {}};
    for (const auto& k : j.at("expected").at("kinds")) f.expected.push_back(violation_kind_from_string(k.get<std::string>()));
    return f;
  } catch (const io::Json::exception& e) {
    throw ParseError(std::string("malformed fixture: ") + e.what());
  }
}

std::vector<Fixture> load_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ConfigurationError("fixture directory not found: " + dir);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> out;
  for (const auto& p : paths) {
    const auto j = io::read_file(p.string());
    if (j.is_object() && j.value("schema", std::string()) == io::kFixtureSchema) out.push_back(fixture_from_json(j));
  }
  return out;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("DAHA_FIXTURES"); env && *env) return env;
  return DAHA_FIXTURE_DIR;
}

}  // namespace daha
