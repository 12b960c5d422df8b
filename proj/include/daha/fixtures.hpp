#pragma once

#include <string>
#include <vector>

#include "daha/json_io.hpp"

namespace daha {

/// A known non-member with the violation kinds its check must report.
struct Fixture {
  std::string name;
  std::string description;
  std::string config;  // "cherednik" or "hecke"
  AlgebraElement element;
  std::vector<ViolationKind> expected;
};

/// The bare reflection [s_1] in A2 plus the twenty constructed violators.
std::vector<Fixture> builtin_fixtures();

io::Json fixture_to_json(const Fixture& f);
Fixture fixture_from_json(const io::Json& j);

/// Every *.json file of dir carrying the fixture schema, sorted by name.
std::vector<Fixture> load_fixtures(const std::string& dir);

/// $DAHA_FIXTURES if set, otherwise the directory compiled in at build time.
std::string fixture_dir();

}  // namespace daha
