#include "macpoly/json_io.hpp"

#include <json.hpp>

#include "json_detail.hpp"

namespace macpoly {

using json = nlohmann::ordered_json;

namespace detail {

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::exception&) {
    throw ArgumentError("bad integer coefficient '" + s + "'");
  }
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ArgumentError("zero denominator in '" + s + "'");
  return Rational(parse_integer(s.substr(0, slash)), den);
}

std::string format(const Integer& c) { return c.str(); }

std::string format(const Rational& c) {
  const Integer num = boost::multiprecision::numerator(c);
  const Integer den = boost::multiprecision::denominator(c);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

template <class Coeff>
json poly_to_json(const BasicPoly<Coeff>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"x", m.x}, {"q", m.q}, {"t", m.t}, {"c", format(c)}});
  return {{"n", p.nvars()}, {"terms", std::move(terms)}};
}

template <class Coeff, class Parse>
BasicPoly<Coeff> poly_from_json(const json& j, Parse&& parse) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    BasicPoly<Coeff> out(n);
    for (const json& term : j.at("terms")) {
      auto x = term.at("x").get<std::vector<std::uint32_t>>();
      if (x.size() != n) throw ArgumentError("term has the wrong number of x exponents");
      const std::string c = term.at("c").is_string() ? term.at("c").get<std::string>() : term.at("c").dump();
      out.add_term(Monomial(std::move(x), term.value("q", 0u), term.value("t", 0u)), parse(c));
    }
    return out;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

json mpoly_json(const MPoly& p) { return poly_to_json(p); }
MPoly mpoly_from(const json& j) { return poly_from_json<Integer>(j, parse_integer); }

}  // namespace detail

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const MPoly& p, int indent) { return detail::poly_to_json(p).dump(indent); }
std::string to_json(const RPoly& p, int indent) { return detail::poly_to_json(p).dump(indent); }

std::string to_json(const EResult& e, int indent) {
  json terms = json::array();
  for (const auto& [m, w] : e.coeffs()) {
    json den = json::array();
    for (const auto& [f, mult] : w.denominator()) den.push_back({{"a", f.a}, {"b", f.b}, {"m", mult}});
    terms.push_back({{"x", m.x}, {"num", detail::poly_to_json(w.numerator())}, {"den", std::move(den)}});
  }
  return json{{"n", e.nvars()}, {"terms", std::move(terms)}}.dump(indent);
}

MPoly mpoly_from_json(std::string_view text) { return detail::mpoly_from(parse(text)); }

RPoly rpoly_from_json(std::string_view text) {
  return detail::poly_from_json<Rational>(parse(text), detail::parse_rational);
}

EResult eresult_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    const auto n = j.at("n").get<std::size_t>();
    EResult out(n);
    for (const json& term : j.at("terms")) {
      auto x = term.at("x").get<std::vector<std::uint32_t>>();
      if (x.size() != n) throw ArgumentError("term has the wrong number of x exponents");
      MPoly num = detail::mpoly_from(term.at("num"));
      if (num.nvars() != 0) throw ArgumentError("EResult numerators carry no x variables");
      FactorMultiset den;
      for (const json& f : term.at("den"))
        den[QtFactor(f.at("a").get<std::uint32_t>(), f.at("b").get<std::uint32_t>())] += f.at("m").get<unsigned>();
      out.add(Monomial(std::move(x), 0, 0), QtRational(std::move(num), std::move(den)));
    }
    return out;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ArgumentError(std::string("malformed EResult JSON: ") + e.what());
  }
}

}  // namespace macpoly
