#pragma once

// JSON serialization of polynomials.
//
//   MPoly / RPoly: {"n": 3, "terms": [{"x": [1,0,2], "q": 0, "t": 1, "c": "-2"}]}
//                  RPoly coefficients are "p/q" strings.
//   EResult:       {"n": 2, "terms": [{"x": [1,0], "num": <MPoly, n = 0>,
//                                      "den": [{"a": 1, "b": 2, "m": 1}]}]}
//
// Terms appear in canonical order, so equal polynomials serialize identically.

#include <string>
#include <string_view>

#include "macpoly/nonsymmetric.hpp"
#include "macpoly/polyring.hpp"

namespace macpoly {

// indent < 0 gives the compact single-line form.
std::string to_json(const MPoly& p, int indent = -1);
std::string to_json(const RPoly& p, int indent = -1);
std::string to_json(const EResult& e, int indent = -1);

// Throw ArgumentError on malformed input.
MPoly mpoly_from_json(std::string_view text);
RPoly rpoly_from_json(std::string_view text);
EResult eresult_from_json(std::string_view text);

}  // namespace macpoly
