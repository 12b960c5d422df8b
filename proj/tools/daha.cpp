// Command-line front end. Exit status: 0 success or compliant, 1 violation or
// failed check, 2 parse or usage error, 3 error raised by the core (capacity,
// representation, expansion domain, ...), reported as a JSON error document.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "daha/error.hpp"
#include "daha/fixtures.hpp"
#include "daha/heckereg.hpp"
#include "daha/json_io.hpp"
#include "daha/mellin.hpp"
#include "daha/suite.hpp"

using namespace daha;
using io::Json;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2, kCore = 3;

std::vector<std::size_t> parse_word(const std::string& text) {
  std::vector<std::size_t> word;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      const long v = std::stol(tok, &pos);
      if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
      word.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw ParseError("bad generator index '" + tok + "' in word " + text);
    }
  }
  return word;
}

AffineWeylElement checked_word(const RootDatum& d, const std::string& text) {
  const auto word = parse_word(text);
  for (auto i : word)
    if (i > d.rank) throw ParseError("generator index " + std::to_string(i) + " out of range for " + d.label);
  return from_word(d, word);
}

/// An element document, or a fixture document carrying one.
struct LoadedElement {
  AlgebraElement element;
  std::optional<std::string> fixture_config;
};

LoadedElement load_element(const std::string& path) {
  const Json j = io::read_file(path);
  if (j.is_object() && j.value("schema", std::string()) == io::kFixtureSchema) {
    auto f = fixture_from_json(j);
    return {std::move(f.element), f.config};
  }
  if (j.is_object() && j.contains("element") && !j.contains("terms")) return {io::element_from_json(j.at("element")), {}};
  return {io::element_from_json(j), {}};
}

void print_json(const Json& j, bool pretty = true) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

int report_membership(const AlgebraElement& x, const MembershipReport& rep, bool json) {
  if (json) {
    print_json(io::to_json(x.datum(), rep));
  } else if (rep.compliant) {
    std::cout << "compliant\n";
  } else {
    std::cout << "not compliant: " << rep.violations.size() << " violation(s)\n";
    for (const auto& v : rep.violations) {
      std::cout << "  " << to_string(v.kind) << "  w = " << io::to_json(x.datum(), v.w).at("word").dump();
      if (v.alpha) std::cout << "  alpha = (" << v.alpha->level << "; " << exponent_to_string(v.alpha->finite) << ")";
      std::cout << "  " << v.message << "\n";
    }
  }
  return rep.compliant ? kOk : kViolation;
}

/// Top-level RatFun documents carry their schema tag; embedded ones do not.
Json tagged(const RatFun& f) {
  Json j = Json::object();
  j["schema"] = io::kRatFunSchema;
  j.update(io::to_json(f));
  return j;
}

std::string default_type(std::size_t dim) { return "A" + std::to_string(dim - 1); }

}  // namespace

int main(int argc, char** argv) {
  // `daha multiply ...` is shorthand for `daha daha multiply ...`.
  static const std::set<std::string> algebra_verbs = {"multiply", "check-membership", "verify-relations", "cfun",
                                                      "hecke-check", "rank1-oracle"};
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && algebra_verbs.count(args[0])) args.insert(args.begin(), "daha");
  std::reverse(args.begin(), args.end());

  CLI::App app{"Exact computations in the regularized double affine Hecke algebra"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string type = "A1", config, word, out_dir;
  std::size_t radius = 3;
  int order = 8, depth = 5, s = 1, tau_sign = 1;
  std::int64_t q = 2;
  std::uint64_t seed = 0;
  std::vector<int> criteria;
  bool timings = false;
  std::vector<std::string> files;
  std::string suite_name = "bernstein";

  auto* roots = app.add_subcommand("roots", "Root data")->require_subcommand(1);
  auto* roots_info = roots->add_subcommand("info", "Print a root datum");
  roots_info->add_option("type", type, "Cartan type, e.g. A2")->required();

  auto* weyl = app.add_subcommand("weyl", "Affine Weyl group")->require_subcommand(1);
  auto* weyl_ball_cmd = weyl->add_subcommand("ball", "All elements up to a length, one JSON document per line");
  weyl_ball_cmd->add_option("--type", type)->required();
  weyl_ball_cmd->add_option("--radius", radius)->check(CLI::Range(0, 12));

  auto* alg = app.add_subcommand("daha", "Twisted group algebra")->require_subcommand(1);
  auto* multiply = alg->add_subcommand("multiply", "Product of two elements");
  multiply->add_option("files", files)->required()->expected(2)->check(CLI::ExistingFile);
  auto* check = alg->add_subcommand("check-membership", "Residue and vanishing conditions");
  check->add_option("file", files)->required()->expected(1);
  check->add_option("--config", config)->check(CLI::IsMember({"cherednik", "hecke"}));
  auto* verify = alg->add_subcommand("verify-relations", "Verify a relation instance list");
  verify->add_option("--type", type)->required();
  verify->add_option("--suite", suite_name)->check(CLI::IsMember({"bernstein", "hecke"}));
  auto* cfun = alg->add_subcommand("cfun", "c-function of a Weyl element");
  cfun->add_option("--type", type)->required();
  cfun->add_option("--word", word, "Comma separated generator indices")->required();
  auto* hecke_check = alg->add_subcommand("hecke-check", "Hecke-side membership of a star-mode element");
  hecke_check->add_option("file", files)->required()->expected(1);
  auto* rank1 = alg->add_subcommand("rank1-oracle", "Rank-1 point count against the partial geometric sum");
  rank1->add_option("--q", q)->check(CLI::Range(2, 97));
  rank1->add_option("--depth", depth);
  rank1->add_option("--s", s)->check(CLI::Range(1, 64));

  auto* mel = app.add_subcommand("mellin", "Mellin transform and cone series")->require_subcommand(1);
  auto* transform = mel->add_subcommand("transform", "Mellin transform of a torsor function");
  transform->add_option("file", files)->required()->expected(1);
  auto* inverse = mel->add_subcommand("inverse", "Inverse Mellin transform");
  inverse->add_option("file", files)->required()->expected(1);
  auto* expand = mel->add_subcommand("expand", "Expand a rational function in the cone w(L+)");
  expand->add_option("file", files)->required()->expected(1);
  expand->add_option("--cone", word, "Word of w, e.g. 0,1 (empty for the identity)");
  expand->add_option("--order", order)->check(CLI::Range(0, 64));
  expand->add_option("--type", type, "Defaults to A_{dim-1}");
  auto* sum = mel->add_subcommand("sum", "Sum a cone series back to a rational function");
  sum->add_option("file", files)->required()->expected(1);

  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");
  suite->add_option("--seed", seed);
  suite->add_option("--criterion", criteria, "Restrict to these criteria (1-9)")->check(CLI::Range(1, 9));
  suite->add_flag("--timings", timings, "Include elapsed times (the report is then not byte-stable)");
  suite->add_option("--tau-sign", tau_sign)->group("")->check(CLI::IsMember({-1, 1}));

  auto* fixtures = app.add_subcommand("fixtures")->group("");
  auto* generate = fixtures->add_subcommand("generate");
  generate->add_option("--out", out_dir)->required();

  for (auto* sub : {roots_info, weyl_ball_cmd, multiply, check, verify, cfun, hecke_check, rank1, transform, inverse,
                    expand, sum, suite})
    sub->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*roots_info) {
      const auto d = shared_root_datum(type);
      if (json) {
        print_json(io::to_json(*d));
      } else {
        std::cout << d->label << ": rank " << d->rank << ", h_dual " << d->h_dual << ", "
                  << d->positive_roots.size() << " positive roots\n";
      }
      return kOk;
    }
    if (*weyl_ball_cmd) {
      const auto d = shared_root_datum(type);
      for (const auto& b : weyl_ball(*d, radius)) print_json(io::to_json(*d, b.element), false);
      return kOk;
    }
    if (*multiply) {
      const auto x = load_element(files[0]).element, y = load_element(files[1]).element;
      print_json(io::to_json(x * y));
      return kOk;
    }
    if (*check) {
      const auto loaded = load_element(files[0]);
      const std::string name = !config.empty() ? config : loaded.fixture_config.value_or("cherednik");
      return report_membership(loaded.element, check_membership(loaded.element, MembershipConfig::named(name)), json);
    }
    if (*hecke_check) {
      const auto loaded = load_element(files[0]);
      return report_membership(loaded.element, check_H_membership(loaded.element), json);
    }
    if (*verify) {
      const auto d = shared_root_datum(type);
      const auto insts = suite_name == "bernstein" ? bernstein_instances(*d) : hecke_relation_instances(*d);
      bool all = true;
      Json rows = Json::array();
      for (const auto& inst : insts) {
        const bool holds = verify_relation(d, inst.lhs, inst.rhs).holds;
        all = all && holds;
        rows.push_back({{"family", inst.family}, {"lhs", join_tokens(inst.lhs)}, {"rhs", join_tokens(inst.rhs)},
                        {"status", holds ? "pass" : "fail"}});
        if (!json)
          std::cout << (holds ? "PASS  " : "FAIL  ") << inst.family << "  " << join_tokens(inst.lhs) << " = "
                    << join_tokens(inst.rhs) << "\n";
      }
      if (json) print_json({{"type", type}, {"suite", suite_name}, {"passed", all}, {"instances", rows}});
      else std::cout << insts.size() << " instances, " << (all ? "all pass" : "FAILURES") << "\n";
      return all ? kOk : kViolation;
    }
    if (*cfun) {
      const auto d = shared_root_datum(type);
      const RatFun c = c_function(*d, checked_word(*d, word));
      if (json) print_json(tagged(c));
      else std::cout << c.to_string() << "\n";
      return kOk;
    }
    if (*rank1) {
      const auto r = rank1_intertwiner_oracle(TruncationBudget{8, q, depth}, s);
      const Rational diff = r.oracle - r.closed_form;
      if (json) {
        Json strata = Json::array();
        for (const auto& [k, n] : r.strata) strata.push_back({k, n});
        print_json({{"q", q}, {"depth", depth}, {"s", s}, {"oracle", io::to_json(r.oracle)},
                    {"closed_form", io::to_json(r.closed_form)}, {"difference", io::to_json(diff)},
                    {"strata", strata}});
      } else {
        std::cout << "oracle      " << r.oracle.get_str() << "\nclosed form " << r.closed_form.get_str()
                  << "\ndifference  " << diff.get_str() << "\n";
      }
      return diff == 0 ? kOk : kViolation;
    }
    if (*transform) {
      const auto phi = io::torsor_function_from_json(io::read_file(files[0]));
      print_json(io::mellin_to_json(phi.torsor(), mellin(phi)));
      return kOk;
    }
    if (*inverse) {
      const auto [t, images] = io::mellin_from_json(io::read_file(files[0]));
      print_json(io::to_json(mellin_inverse(t, images)));
      return kOk;
    }
    if (*expand) {
      const RatFun f = io::ratfun_from_json(io::read_file(files[0]));
      if (f.dim() < 2) throw ParseError("expansion needs a function on an affine torus (dim >= 2)");
      if (!expand->count("--type")) type = default_type(f.dim());
      const auto d = shared_root_datum(type);
      if (torus_dim(*d) != f.dim()) throw ParseError("function dimension does not match type " + type);
      print_json(io::to_json(cone_expand(f, Cone::weyl_image(*d, checked_word(*d, word)), order)));
      return kOk;
    }
    if (*sum) {
      print_json(tagged(cone_sum(io::cone_series_from_json(io::read_file(files[0])))));
      return kOk;
    }
    if (*suite) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.tau_sign = tau_sign;
      opts.only.insert(criteria.begin(), criteria.end());
      const auto report = run_suite(opts);
      if (json) print_json(to_json(report, timings));
      else std::cout << format_report(report);
      return report.all_passed() ? kOk : kViolation;
    }
    if (*generate) {
      std::filesystem::create_directories(out_dir);
      for (const auto& f : builtin_fixtures()) {
        std::ofstream out(std::filesystem::path(out_dir) / (f.name + ".json"));
        out << fixture_to_json(f).dump(2) << "\n";
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    print_json(io::to_json(e));
    return kCore;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON document: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
