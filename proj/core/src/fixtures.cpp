#include "macpoly/fixtures.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "json_detail.hpp"
#include "macpoly/modified.hpp"

namespace macpoly {

using json = nlohmann::ordered_json;

namespace {

Basement parse_basement(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return Basement::infinity();
    if (s == "none") return Basement::none();
    throw ArgumentError("unknown basement '" + s + "'");
  }
  return Basement::permutation(j.get<std::vector<Entry>>());
}

FillingFixture parse_case(const json& j) {
  Diagram shape(j.at("shape").get<std::vector<int>>());
  Filling f(shape, parse_basement(j.value("basement", json("none"))));
  std::vector<bool> seen(static_cast<std::size_t>(shape.size()), false);
  for (const json& e : j.at("entries")) {
    const Cell s{e.at(0).get<int>(), e.at(1).get<int>()};
    if (!shape.contains(s)) throw ArgumentError("fixture entry outside the shape");
    f.set(s, e.at(2).get<Entry>());
  }
  for (const Cell& s : shape.cells())
    if (f.at(s) < 1) throw ArgumentError("fixture leaves a cell unfilled");
  FillingFixture fx{j.value("name", std::string()), std::move(f), {}, {}, {}};
  const json expected = j.value("expected", json::object());
  for (const auto& [key, v] : expected.items()) {
    if (v.is_boolean())
      fx.expected_flags[key] = v.get<bool>();
    else if (v.is_number_integer())
      fx.expected_ints[key] = v.get<long long>();
    else
      fx.expected_polys.emplace(key, detail::mpoly_from(v));
  }
  return fx;
}

long long int_stat(const std::string& key, const Filling& f) {
  if (key == "inv") return inv(f);
  if (key == "maj") return maj(f);
  if (key == "coinv") return coinv_comp(f);
  if (key == "coinv_hhl") return coinv_hhl(f);
  if (key == "total_triples") return total_triples(f);
  throw ArgumentError("unknown integer expectation '" + key + "'");
}

bool flag_stat(const std::string& key, const Filling& f) {
  if (key == "nonattacking") return is_nonattacking(f);
  if (key == "ordered") return is_ordered(f);
  if (key == "sorted") return is_sorted_tableau(f);
  throw ArgumentError("unknown boolean expectation '" + key + "'");
}

MPoly poly_stat(const std::string& key, const Filling& f) {
  if (key == "perm_t") return perm_t(SortedTableau::certify(f));
  if (key == "weight") return sorted_tableau_weight(SortedTableau::certify(f));
  throw ArgumentError("unknown polynomial expectation '" + key + "'");
}

}  // namespace

std::vector<FillingFixture> parse_fixtures(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("invalid fixture JSON: ") + e.what());
  }
  std::vector<FillingFixture> out;
  try {
    if (j.contains("cases"))
      for (const json& c : j.at("cases")) out.push_back(parse_case(c));
    else
      out.push_back(parse_case(j));
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed fixture: ") + e.what());
  }
  return out;
}

std::vector<FillingFixture> load_fixtures(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ArgumentError("cannot open fixture file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixtures(ss.str());
}

std::vector<FixtureCheck> check_fixture(const FillingFixture& fx) {
  std::vector<FixtureCheck> out;
  for (const auto& [key, want] : fx.expected_ints) {
    const long long got = int_stat(key, fx.filling);
    out.push_back({fx.name, key, std::to_string(want), std::to_string(got), got == want});
  }
  for (const auto& [key, want] : fx.expected_flags) {
    const bool got = flag_stat(key, fx.filling);
    out.push_back({fx.name, key, want ? "true" : "false", got ? "true" : "false", got == want});
  }
  for (const auto& [key, want] : fx.expected_polys) {
    const MPoly got = poly_stat(key, fx.filling);
    out.push_back({fx.name, key, want.to_string(), got.to_string(), got == want});
  }
  return out;
}

}  // namespace macpoly
