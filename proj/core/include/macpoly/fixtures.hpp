#pragma once

// Filling fixtures stored as JSON:
//
//   {"name": "...", "shape": [5,5,2], "basement": "inf" | "none" | [2,1,3],
//    "entries": [[col, row, value], ...],
//    "expected": {"inv": 22, "maj": 5, "perm_t": <MPoly JSON>, ...}}
//
// A file holds one such object or {"cases": [...]}. Recognized expectations:
// inv, maj, coinv, coinv_hhl, total_triples (integers); nonattacking, ordered,
// sorted (booleans); perm_t, weight (polynomials in q,t).

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "macpoly/polyring.hpp"
#include "macpoly/shapes.hpp"

namespace macpoly {

struct FillingFixture {
  std::string name;
  Filling filling;
  std::map<std::string, long long> expected_ints;
  std::map<std::string, bool> expected_flags;
  std::map<std::string, MPoly> expected_polys;
};

struct FixtureCheck {
  std::string fixture;
  std::string key;
  std::string expected;
  std::string actual;
  bool ok = false;
};

std::vector<FillingFixture> load_fixtures(const std::filesystem::path& file);
std::vector<FillingFixture> parse_fixtures(const std::string& json_text);
std::vector<FixtureCheck> check_fixture(const FillingFixture& fx);

}  // namespace macpoly
