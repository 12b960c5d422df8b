// Python bindings. Documents cross the boundary as JSON text in the formats of
// docs/formats.md; the package wrapper turns them into Python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "daha/error.hpp"
#include "daha/fixtures.hpp"
#include "daha/heckereg.hpp"
#include "daha/json_io.hpp"
#include "daha/mellin.hpp"
#include "daha/suite.hpp"

namespace py = pybind11;
using namespace daha;
using io::Json;

namespace {

std::string dump(const Json& j) { return j.dump(); }

AffineWeylElement word_element(const RootDatum& d, const std::vector<std::size_t>& word) {
  for (auto i : word)
    if (i > d.rank) throw ParseError("generator index out of range for " + d.label);
  return from_word(d, word);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the regularized double affine Hecke algebra";

  auto base = py::register_exception<Error>(m, "DahaError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConfigurationError>(m, "ConfigurationError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<RepresentationError>(m, "RepresentationError", base.ptr());
  py::register_exception<ExpansionDomainError>(m, "ExpansionDomainError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def("root_datum", [](const std::string& label) { return dump(io::to_json(*shared_root_datum(label))); });
  m.def("weyl_ball", [](const std::string& label, std::size_t radius) {
    const auto d = shared_root_datum(label);
    std::vector<std::string> out;
    for (const auto& b : weyl_ball(*d, radius)) out.push_back(dump(io::to_json(*d, b.element)));
    return out;
  });
  m.def("multiply", [](const std::string& a, const std::string& b) {
    return dump(io::to_json(io::element_from_json(io::parse(a)) * io::element_from_json(io::parse(b))));
  });
  m.def("add", [](const std::string& a, const std::string& b) {
    return dump(io::to_json(io::element_from_json(io::parse(a)) + io::element_from_json(io::parse(b))));
  });
  m.def("check_membership", [](const std::string& element, const std::string& config) {
    const auto x = io::element_from_json(io::parse(element));
    return dump(io::to_json(x.datum(), check_membership(x, MembershipConfig::named(config))));
  });
  m.def("hecke_check", [](const std::string& element) {
    const auto x = io::element_from_json(io::parse(element));
    return dump(io::to_json(x.datum(), check_H_membership(x)));
  });
  m.def("tau", [](const std::string& label, std::size_t i) { return dump(io::to_json(make_tau(shared_root_datum(label), i))); });
  m.def("tau_word", [](const std::string& label, const std::vector<std::size_t>& word) {
    const auto d = shared_root_datum(label);
    word_element(*d, word);
    return dump(io::to_json(make_tau_word(d, word)));
  });
  m.def("hecke_T", [](const std::string& label, std::size_t i) { return dump(io::to_json(make_T(shared_root_datum(label), i))); });
  m.def("rho_shift", [](const std::string& element) {
    return dump(io::to_json(rho_shift(io::element_from_json(io::parse(element)))));
  });
  m.def("c_function", [](const std::string& label, const std::vector<std::size_t>& word) {
    const auto d = shared_root_datum(label);
    return dump(io::to_json(c_function(*d, word_element(*d, word))));
  });
  m.def("verify_relations", [](const std::string& label, const std::string& suite) {
    const auto d = shared_root_datum(label);
    if (suite != "bernstein" && suite != "hecke") throw ConfigurationError("unknown relation suite " + suite);
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& inst : suite == "bernstein" ? bernstein_instances(*d) : hecke_relation_instances(*d))
      out.emplace_back(inst.family + ": " + join_tokens(inst.lhs) + " = " + join_tokens(inst.rhs),
                       verify_relation(d, inst.lhs, inst.rhs).holds);
    return out;
  });
  m.def("rank1_oracle", [](std::int64_t q, int depth, int s) {
    const auto r = rank1_intertwiner_oracle(TruncationBudget{8, q, depth}, s);
    return std::make_pair(r.oracle.get_str(), r.closed_form.get_str());
  });
  m.def("mellin_transform", [](const std::string& fn) {
    const auto phi = io::torsor_function_from_json(io::parse(fn));
    return dump(io::mellin_to_json(phi.torsor(), mellin(phi)));
  });
  m.def("mellin_inverse", [](const std::string& images) {
    const auto [t, im] = io::mellin_from_json(io::parse(images));
    return dump(io::to_json(mellin_inverse(t, im)));
  });
  m.def("cone_expand", [](const std::string& f, const std::string& label, const std::vector<std::size_t>& word,
                          int order) {
    const auto d = shared_root_datum(label);
    return dump(io::to_json(cone_expand(io::ratfun_from_json(io::parse(f)), Cone::weyl_image(*d, word_element(*d, word)), order)));
  });
  m.def("cone_sum", [](const std::string& series) {
    return dump(io::to_json(cone_sum(io::cone_series_from_json(io::parse(series)))));
  });
  m.def("run_suite", [](std::uint64_t seed, const std::vector<int>& criteria) {
    SuiteOptions opts;
    opts.seed = seed;
    opts.only.insert(criteria.begin(), criteria.end());
    SuiteReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(opts);
    }
    return dump(to_json(r));
  }, py::arg("seed") = 0, py::arg("criteria") = std::vector<int>{});
  m.def("fixture_dir", &fixture_dir);
}
