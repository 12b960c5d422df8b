#include "daha/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "daha/error.hpp"

namespace daha::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::int64_t as_int(const Json& j) {
  if (!j.is_number_integer()) fail("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

}  // namespace

void check_schema(const Json& j, const char* expected) {
  if (!j.is_object() || !j.contains("schema")) return;
  const Json& s = j.at("schema");
  if (!s.is_string() || s.get<std::string>() != expected)
    fail("schema mismatch: expected " + std::string(expected) + ", got " + s.dump());
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

// --- scalars ----------------------------------------------------------------

Json to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(r.get_str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail("expected a rational, got " + j.dump());
  Rational r;
  if (r.set_str(j.get<std::string>(), 10) != 0) fail("malformed rational '" + j.get<std::string>() + "'");
  if (r.get_den() == 0) fail("rational with zero denominator");
  r.canonicalize();
  return r;
}

namespace {

Json poly_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

QPoly poly_from(const Json& j) {
  if (!j.is_array()) fail("expected a coefficient array, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return QPoly(std::move(c));
}

}  // namespace

Json to_json(const Scalar& s) {
  if (s.den().degree() == 0 && s.den().leading() == 1) return poly_json(s.num());
  Json j = Json::object();
  j["num"] = poly_json(s.num());
  j["den"] = poly_json(s.den());
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Scalar(rational_from_json(j));
  if (j.is_array()) return Scalar(poly_from(j), QPoly::constant(1));
  const QPoly den = poly_from(field(j, "den"));
  if (den.is_zero()) fail("scalar with zero denominator");
  return Scalar(poly_from(field(j, "num")), den);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols; ++k) r.push_back(m(i, k));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail("expected a matrix");
  const std::size_t r = j.size();
  const std::size_t c = r ? j[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) fail("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = as_int(j[i][k]);
  }
  return m;
}

Exponent exponent_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an integer vector, got " + j.dump());
  Exponent e;
  for (const auto& x : j) e.push_back(as_int(x));
  return e;
}

// --- rational functions -----------------------------------------------------

Json to_json(const RatFun& f) {
  Json j = Json::object();
  j["dim"] = f.dim();
  Json num = Json::array();
  for (const auto& [e, c] : f.num().terms()) num.push_back(Json::array({Json(e), to_json(c)}));
  Json den = Json::array();
  for (const auto& [b, m] : f.den()) den.push_back(Json::array({to_json(b.c), Json(b.mu), m}));
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

RatFun ratfun_from_json(const Json& j) {
  check_schema(j, kRatFunSchema);
  const auto dim = static_cast<std::size_t>(as_int(field(j, "dim")));
  LaurentPoly num(dim);
  for (const auto& t : field(j, "num")) {
    if (!t.is_array() || t.size() != 2) fail("numerator term must be [exponent, scalar]");
    const Exponent e = exponent_from_json(t[0]);
    if (e.size() != dim) fail("numerator exponent has the wrong dimension");
    num.add_term(e, scalar_from_json(t[1]));
  }
  RatFun::Denominator den;
  for (const auto& t : field(j, "den")) {
    if (!t.is_array() || t.size() != 3) fail("denominator factor must be [scalar, exponent, multiplicity]");
    const Exponent mu = exponent_from_json(t[1]);
    if (mu.size() != dim) fail("denominator exponent has the wrong dimension");
    const auto m = as_int(t[2]);
    if (m < 0) fail("negative multiplicity");
    den[Binomial{mu, scalar_from_json(t[0])}] += static_cast<int>(m);
  }
  try {
    return RatFun(std::move(num), std::move(den));
  } catch (const ArithmeticError& e) {
    fail(std::string("invalid rational function: ") + e.what());
  }
}

// --- root data and Weyl elements ---------------------------------------------

Json to_json(const RootDatum& d) {
  Json j = Json::object();
  j["label"] = d.label;
  j["cartan_matrix"] = to_json(d.cartan);
  j["positive_roots"] = d.positive_roots;
  j["theta"] = d.theta;
  j["rho"] = d.rho;
  j["h_dual"] = d.h_dual;
  j["psi_matrix"] = to_json(d.psi);
  return j;
}

Json to_json(const RootDatum& d, const AffineWeylElement& w) {
  Json j = Json::object();
  j["word"] = reduced_word(d, w);
  j["finite"] = to_json(w.finite());
  j["translation"] = w.translation_part();
  return j;
}

namespace {

// Finite Weyl group elements keyed by their coweight matrix.
const std::map<IntMatrix, AffineWeylElement>& finite_group(const RootDatum& d) {
  static std::mutex mu;
  static std::map<std::string, std::map<IntMatrix, AffineWeylElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace(d.label);
  if (inserted) {
    auto& group = it->second;
    const auto e = AffineWeylElement::identity(d.rank);
    group.emplace(e.finite(), e);
    std::vector<AffineWeylElement> frontier{e};
    while (!frontier.empty()) {
      std::vector<AffineWeylElement> next;
      for (const auto& x : frontier)
        for (std::size_t i = 1; i <= d.rank; ++i) {
          const auto y = x * simple_reflection(d, i);
          if (group.emplace(y.finite(), y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  return it->second;
}

}  // namespace

AffineWeylElement weyl_from_json(const RootDatum& d, const Json& j) {
  std::optional<AffineWeylElement> from_pair;
  if (j.is_object() && j.contains("finite") && j.contains("translation")) {
    const IntMatrix u = matrix_from_json(j.at("finite"));
    const Exponent a = exponent_from_json(j.at("translation"));
    if (a.size() != d.rank) fail("translation has the wrong rank for " + d.label);
    const auto& group = finite_group(d);
    auto it = group.find(u);
    if (it == group.end()) fail("finite part is not an element of the Weyl group of " + d.label);
    from_pair = AffineWeylElement::translation(a) * it->second;
  }
  if (j.is_array() || (j.is_object() && j.contains("word"))) {
    const Json& wj = j.is_array() ? j : j.at("word");
    std::vector<std::size_t> word;
    for (const auto& x : wj) {
      const auto i = as_int(x);
      if (i < 0 || static_cast<std::size_t>(i) > d.rank) fail("generator index out of range in word");
      word.push_back(static_cast<std::size_t>(i));
    }
    const auto w = from_word(d, word);
    if (from_pair && !(*from_pair == w)) fail("word and canonical pair describe different elements");
    return w;
  }
  if (from_pair) return *from_pair;
  fail("Weyl element needs a word or a {finite, translation} pair");
}

Json to_json(const AffineRoot& r) {
  Json j = Json::object();
  j["level"] = r.level;
  j["finite"] = r.finite;
  return j;
}

AffineRoot affine_root_from_json(const Json& j) {
  return AffineRoot{as_int(field(j, "level")), exponent_from_json(field(j, "finite"))};
}

// --- algebra elements -----------------------------------------------------------

Json to_json(const AlgebraElement& x) {
  const RootDatum& d = x.datum();
  std::vector<const AlgebraElement::Terms::value_type*> terms;
  for (const auto& t : x.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&d](const auto* a, const auto* b) { return canonical_less(d, a->first, b->first); });
  Json j = Json::object();
  j["schema"] = kElementSchema;
  j["type"] = d.label;
  j["mode"] = to_string(x.mode());
  Json arr = Json::array();
  for (const auto* t : terms) arr.push_back(Json::array({to_json(d, t->first), to_json(t->second)}));
  j["terms"] = std::move(arr);
  return j;
}

AlgebraElement element_from_json(const Json& j) {
  check_schema(j, kElementSchema);
  const Json& type = field(j, "type");
  if (!type.is_string()) fail("type must be a string");
  auto d = shared_root_datum(type.get<std::string>());
  const Json& mode = field(j, "mode");
  if (!mode.is_string()) fail("mode must be a string");
  Mode m;
  try {
    m = mode_from_string(mode.get<std::string>());
  } catch (const Error& e) {
    fail(e.what());
  }
  AlgebraElement x(d, m);
  for (const auto& t : field(j, "terms")) {
    if (!t.is_array() || t.size() != 2) fail("element term must be [weyl, ratfun]");
    const RatFun f = ratfun_from_json(t[1]);
    if (f.dim() != torus_dim(*d)) fail("coefficient lives on the wrong torus");
    x.add_term(weyl_from_json(*d, t[0]), f);
  }
  return x;
}

// --- reports ------------------------------------------------------------------

Json to_json(const RootDatum& d, const MembershipReport& r) {
  Json j = Json::object();
  j["schema"] = kReportSchema;
  j["compliant"] = r.compliant;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json o = Json::object();
    o["kind"] = to_string(v.kind);
    o["w"] = to_json(d, v.w);
    o["alpha"] = v.alpha ? to_json(*v.alpha) : Json(nullptr);
    o["value"] = to_json(v.value);
    o["detail"] = to_json(v.detail);
    o["message"] = v.message;
    vs.push_back(std::move(o));
  }
  j["violations"] = std::move(vs);
  return j;
}

MembershipReport report_from_json(const RootDatum& d, const Json& j) {
  check_schema(j, kReportSchema);
  MembershipReport r;
  r.compliant = field(j, "compliant").get<bool>();
  for (const auto& o : field(j, "violations")) {
    Violation v{violation_kind_from_string(field(o, "kind").get<std::string>()),
                weyl_from_json(d, field(o, "w")),
                std::nullopt,
                scalar_from_json(field(o, "value")),
                ratfun_from_json(field(o, "detail")),
                field(o, "message").get<std::string>()};
    if (!field(o, "alpha").is_null()) v.alpha = affine_root_from_json(o.at("alpha"));
    r.violations.push_back(std::move(v));
  }
  return r;
}

// --- Mellin / cones -------------------------------------------------------------

namespace {

Json torsor_json(const FiniteTorsor& t) {
  Json tj = Json::object();
  tj["base"] = t.base;
  tj["lattice_dim"] = t.lattice_dim;
  tj["base_points"] = t.base_points;
  return tj;
}

FiniteTorsor torsor_from_json(const Json& tj) {
  FiniteTorsor t;
  try {
    for (const auto& b : field(tj, "base")) t.base.push_back(b.get<std::string>());
  } catch (const Json::exception& e) {
    fail(e.what());
  }
  t.lattice_dim = static_cast<std::size_t>(as_int(field(tj, "lattice_dim")));
  for (const auto& b : field(tj, "base_points")) t.base_points.push_back(exponent_from_json(b));
  try {
    t.validate();
  } catch (const DomainError& e) {
    fail(e.what());
  }
  return t;
}

}  // namespace

Json to_json(const TorsorFunction& phi) {
  const auto& t = phi.torsor();
  Json j = Json::object();
  j["schema"] = kTorsorFunctionSchema;
  j["torsor"] = torsor_json(t);
  Json vals = Json::array();
  for (const auto& [p, c] : phi.values()) vals.push_back(Json::array({p.first, Json(p.second), to_json(c)}));
  j["values"] = std::move(vals);
  return j;
}

TorsorFunction torsor_function_from_json(const Json& j) {
  check_schema(j, kTorsorFunctionSchema);
  const FiniteTorsor t = torsor_from_json(field(j, "torsor"));
  try {
    TorsorFunction phi(t);
    for (const auto& v : field(j, "values")) {
      if (!v.is_array() || v.size() != 3) fail("torsor value must be [x, a, scalar]");
      phi.add(static_cast<std::size_t>(as_int(v[0])), exponent_from_json(v[1]), scalar_from_json(v[2]));
    }
    return phi;
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

Json to_json(const ConeSeries& s) {
  Json j = Json::object();
  j["schema"] = kConeSeriesSchema;
  j["dim"] = s.cone.dim();
  Json num = Json::array();
  for (const auto& [e, c] : s.numerator.terms()) num.push_back(Json::array({Json(e), to_json(c)}));
  Json den = Json::array();
  for (const auto& [b, m] : s.denominators) den.push_back(Json::array({to_json(b.c), Json(b.mu), m}));
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  j["cone"] = s.cone.generators();
  j["shift"] = s.shift;
  j["order"] = s.order;
  return j;
}

ConeSeries cone_series_from_json(const Json& j) {
  check_schema(j, kConeSeriesSchema);
  std::vector<Exponent> gens;
  for (const auto& g : field(j, "cone")) gens.push_back(exponent_from_json(g));
  try {
    Cone cone(std::move(gens));
    const std::size_t dim = cone.dim();
    if (static_cast<std::size_t>(as_int(field(j, "dim"))) != dim) fail("cone and series dimension differ");
    LaurentPoly num(dim);
    for (const auto& t : field(j, "num")) {
      if (!t.is_array() || t.size() != 2) fail("numerator term must be [exponent, scalar]");
      num.add_term(exponent_from_json(t[0]), scalar_from_json(t[1]));
    }
    std::vector<std::pair<Binomial, int>> dens;
    for (const auto& t : field(j, "den")) {
      if (!t.is_array() || t.size() != 3) fail("denominator factor must be [scalar, exponent, multiplicity]");
      Binomial b{exponent_from_json(t[1]), scalar_from_json(t[0])};
      if (b.mu.size() != dim || !cone.contains(b.mu) || daha::is_zero(b.mu))
        fail("series denominator exponent must be a nonzero cone point");
      dens.emplace_back(std::move(b), static_cast<int>(as_int(t[2])));
    }
    Exponent shift = exponent_from_json(field(j, "shift"));
    for (const auto& [e, c] : num.terms())
      if (!cone.contains(e - shift)) fail("numerator term outside shift + cone");
    return ConeSeries{std::move(cone), std::move(shift), std::move(num), std::move(dens),
                      static_cast<int>(as_int(field(j, "order")))};
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

Json to_json(const UnivariateRat& f) {
  Json j = Json::object();
  Json num = Json::array(), den = Json::array();
  for (const auto& c : f.num()) num.push_back(to_json(c));
  for (const auto& c : f.den()) den.push_back(to_json(c));
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

Json mellin_to_json(const FiniteTorsor& t, const std::vector<LaurentPoly>& images) {
  Json j = Json::object();
  j["schema"] = kMellinSchema;
  j["torsor"] = torsor_json(t);
  Json im = Json::array();
  for (const auto& p : images) im.push_back(to_json(RatFun(p)));
  j["images"] = std::move(im);
  return j;
}

std::pair<FiniteTorsor, std::vector<LaurentPoly>> mellin_from_json(const Json& j) {
  check_schema(j, kMellinSchema);
  FiniteTorsor t = torsor_from_json(field(j, "torsor"));
  std::vector<LaurentPoly> images;
  for (const auto& im : field(j, "images")) {
    const RatFun f = ratfun_from_json(im);
    if (!f.is_polynomial()) fail("Mellin images are Laurent polynomials");
    if (f.dim() != t.lattice_dim) fail("Mellin image has the wrong dimension");
    images.push_back(f.num());
  }
  if (images.size() != t.size()) fail("one Mellin image per base point expected");
  return {std::move(t), std::move(images)};
}

Json to_json(const Error& e) {
  Json j = Json::object();
  j["schema"] = kErrorSchema;
  j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
  if (auto* h = dynamic_cast<const HigherOrderPoleError*>(&e)) j["error"]["order"] = h->order();
  return j;
}

}  // namespace daha::io
