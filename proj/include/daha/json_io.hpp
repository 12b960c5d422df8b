#pragma once

#include "json.hpp"
#include <string>
#include <utility>
#include <vector>

#include "daha/error.hpp"

#include "daha/heckereg.hpp"
#include "daha/mellin.hpp"

namespace daha::io {

/// Field order is preserved so that output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kElementSchema = "daha.element/1";
inline constexpr const char* kRatFunSchema = "daha.ratfun/1";
inline constexpr const char* kReportSchema = "daha.membership-report/1";
inline constexpr const char* kTorsorFunctionSchema = "daha.torsor-function/1";
inline constexpr const char* kConeSeriesSchema = "daha.cone-series/1";
inline constexpr const char* kFixtureSchema = "daha.fixture/1";
inline constexpr const char* kSuiteSchema = "daha.suite-report/1";
inline constexpr const char* kMellinSchema = "daha.mellin-image/1";
inline constexpr const char* kErrorSchema = "daha.error/1";

/// Integers stay JSON integers; other rationals become "p/q" strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Coefficient array of the v-polynomial (lowest degree first) when the
/// denominator is 1, otherwise {"num": [...], "den": [...]}.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Exponent exponent_from_json(const Json& j);

/// {dim, num: [[exponent, scalar]...], den: [[scalar, exponent, mult]...]}
Json to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j);

/// {label, cartan_matrix, positive_roots, theta, rho, h_dual, psi_matrix}
Json to_json(const RootDatum& d);

/// {word, finite, translation}
Json to_json(const RootDatum& d, const AffineWeylElement& w);
AffineWeylElement weyl_from_json(const RootDatum& d, const Json& j);

Json to_json(const AffineRoot& r);
AffineRoot affine_root_from_json(const Json& j);

/// {schema, type, mode, terms: [[weyl, ratfun]...]} in canonical Weyl order.
Json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const Json& j);

Json to_json(const RootDatum& d, const MembershipReport& r);
MembershipReport report_from_json(const RootDatum& d, const Json& j);

Json to_json(const TorsorFunction& phi);
TorsorFunction torsor_function_from_json(const Json& j);

/// RatFun fields plus {cone, shift, order}.
Json to_json(const ConeSeries& s);
ConeSeries cone_series_from_json(const Json& j);

Json to_json(const UnivariateRat& f);

/// {schema, torsor, images: [ratfun...]}, one polynomial image per base point.
Json mellin_to_json(const FiniteTorsor& t, const std::vector<LaurentPoly>& images);
std::pair<FiniteTorsor, std::vector<LaurentPoly>> mellin_from_json(const Json& j);

/// {schema, error: {kind, message}}
Json to_json(const Error& e);

/// Throws ParseError if j carries a schema tag different from `expected`.
void check_schema(const Json& j, const char* expected);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace daha::io
