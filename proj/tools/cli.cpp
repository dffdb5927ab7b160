#include "cli.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "macpoly/integral.hpp"
#include "macpoly/json_io.hpp"
#include "macpoly/modified.hpp"
#include "macpoly/nonsymmetric.hpp"
#include "macpoly/quasisym.hpp"

namespace macpoly::cli {

using json = nlohmann::ordered_json;

Composition parse_shape(const std::string& text) {
  Composition out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int v = 0;
    const char* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (ec != std::errc() || ptr != end || v < 0) throw UsageError("bad shape part '" + part + "' in '" + text + "'");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in shape '" + text + "'");
  return out;
}

Rational parse_value(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad rational value '" + text + "'");
  }
}

std::string family_name(Family f) {
  switch (f) {
    case Family::htilde: return "htilde";
    case Family::j: return "j";
    case Family::e: return "e";
    case Family::f: return "f";
    case Family::p: return "p";
    case Family::g: return "g";
    case Family::qschur: return "qschur";
    case Family::schur: return "schur";
  }
  return "?";
}

namespace {

bool takes_partition(Family f) {
  return f == Family::htilde || f == Family::j || f == Family::p || f == Family::schur;
}

bool is_nonsymmetric(Family f) { return f == Family::e || f == Family::f; }

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

}  // namespace

void validate(const Request& r) {
  const std::string name = family_name(r.family);
  require(r.formula == Formula::automatic || r.family == Family::htilde || r.family == Family::j,
          "--formula applies only to htilde and j");
  require(!r.rows || r.family == Family::htilde, "--rows applies only to htilde");
  require(!r.integral || is_nonsymmetric(r.family), "--integral applies only to e and f");
  require(!r.verify || r.integral, "--verify needs --integral");
  require(!r.decompose || r.family == Family::g || r.family == Family::qschur, "--decompose applies only to g and qschur");
  require(!r.decompose || r.family != Family::g || (!r.q && !r.t), "--decompose cannot be combined with --q/--t");
  require(r.threads >= 1, "--threads must be at least 1");

  if (takes_partition(r.family)) {
    try {
      require_partition(r.shape);
    } catch (const ShapeError& e) {
      throw UsageError(name + " takes a partition (weakly decreasing, positive parts): " + e.what());
    }
  }
  if (r.family == Family::g || r.family == Family::qschur)
    for (int v : r.shape) require(v > 0, name + " takes a strong composition (positive parts)");

  if (is_nonsymmetric(r.family)) {
    require(!r.n || *r.n == static_cast<int>(r.shape.size()),
            name + ": --n must equal the number of parts of the composition");
    return;
  }
  require(r.n.has_value(), name + " needs --n");
  require(*r.n >= 1, "--n must be positive");
  if (r.family != Family::htilde && r.family != Family::j && r.family != Family::schur)
    require(static_cast<int>(r.shape.size()) <= *r.n, name + ": more parts than variables");
}

namespace {

Substitution substitution(const Request& r) { return Substitution::qt(r.q, r.t); }
bool specialized(const Request& r) { return r.q || r.t; }

std::string emit(const MPoly& p, const Request& r) {
  if (specialized(r)) {
    const RPoly s = specialize(p, substitution(r));
    return r.output == Output::json ? to_json(s, 2) : s.to_string();
  }
  return r.output == Output::json ? to_json(p, 2) : p.to_string();
}

std::string emit(const EResult& e, const Request& r) {
  if (specialized(r)) {
    const RPoly s = specialize(e, substitution(r));
    return r.output == Output::json ? to_json(s, 2) : s.to_string();
  }
  return r.output == Output::json ? to_json(e, 2) : e.to_string();
}

std::string gamma_label(const Composition& g) {
  std::string s = "M[";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + "]";
}

template <class Coeff, class CoeffJson>
std::string emit_decomposed(const std::string& poly, const QSymDecomposition<Coeff>& d, const Request& r,
                            CoeffJson&& coeff_json) {
  if (r.output == Output::json) {
    json terms = json::array();
    for (const auto& [g, c] : d.monomial_qsym_coeffs) terms.push_back({{"gamma", g}, {"coeff", coeff_json(c)}});
    json out{{"polynomial", json::parse(poly)},
             {"decomposition", {{"quasisymmetric", d.is_quasisymmetric}, {"terms", std::move(terms)}}}};
    if (d.witness)
      out["decomposition"]["witness"] = {monomial_to_string(d.witness->first), monomial_to_string(d.witness->second)};
    return out.dump(2);
  }
  std::string out = poly + "\n";
  if (!d.is_quasisymmetric) {
    out += "not quasisymmetric";
    if (d.witness)
      out += ": " + monomial_to_string(d.witness->first) + " vs " + monomial_to_string(d.witness->second);
    return out;
  }
  for (const auto& [g, c] : d.monomial_qsym_coeffs) out += gamma_label(g) + ": " + c.to_string() + "\n";
  out.pop_back();
  return out;
}

}  // namespace

std::string run(const Request& r) {
  validate(r);
  const int n = r.n.value_or(static_cast<int>(r.shape.size()));
  switch (r.family) {
    case Family::htilde: {
      const Partition lambda = r.rows ? conjugate(r.shape) : r.shape;
      return emit(r.formula == Formula::hhl ? htilde_hhl(lambda, n) : htilde_compact(lambda, n), r);
    }
    case Family::j:
      return emit(r.formula == Formula::hhl ? j_hhl(r.shape, n) : j_compact(r.shape, n).value, r);
    case Family::e:
    case Family::f:
      if (r.integral) return emit(integral_e(r.shape, r.verify ? Verify::yes : Verify::no), r);
      return emit(r.family == Family::e ? e_permuted_basement(r.shape) : f_poly(r.shape), r);
    case Family::p:
      return emit(p_poly(r.shape, n, r.threads), r);
    case Family::g: {
      const EResult g = g_poly(r.shape, n, r.threads);
      if (!r.decompose) return emit(g, r);
      return emit_decomposed(emit(g, r), qsym_decompose(g), r,
                             [](const QtRational& c) { return c.to_string(); });
    }
    case Family::qschur: {
      const MPoly qs = qs_schur(r.shape, n);
      if (!r.decompose) return emit(qs, r);
      return emit_decomposed(emit(qs, r), qsym_decompose(qs), r, [](const MPoly& c) { return c.to_string(); });
    }
    case Family::schur:
      return emit(schur_ssyt(r.shape, n), r);
  }
  throw UsageError("unknown family");
}

}  // namespace macpoly::cli
