#pragma once

// Exact sparse polynomials in x_1..x_n, q, t and q,t-rational functions whose
// denominators are products of binomials 1 - q^a t^b.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macpoly/error.hpp"

namespace macpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Monomial {
  std::vector<std::uint32_t> x;
  std::uint32_t q = 0;
  std::uint32_t t = 0;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : x(nvars, 0) {}
  Monomial(std::vector<std::uint32_t> xs, std::uint32_t qe, std::uint32_t te)
      : x(std::move(xs)), q(qe), t(te) {}

  std::size_t nvars() const { return x.size(); }
  std::uint64_t x_degree() const;
  std::uint64_t degree() const { return x_degree() + q + t; }
  bool is_qt_only() const { return x_degree() == 0; }
  bool divisible_by(const Monomial& other) const;
  Monomial x_part() const { return Monomial(x, 0, 0); }
  Monomial qt_part() const { return Monomial(std::vector<std::uint32_t>(x.size(), 0), q, t); }

  Monomial operator*(const Monomial& other) const;
  // Requires divisible_by(other).
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic, largest first, with x_1 > ... > x_n > q > t.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

namespace detail {
inline bool coeff_divides(const Integer& d, const Integer& c) { return c % d == 0; }
inline bool coeff_divides(const Rational&, const Rational&) { return true; }
std::string coeff_to_string(const Integer& c);
std::string coeff_to_string(const Rational& c);
}  // namespace detail

template <class Coeff>
class BasicPoly {
 public:
  using coefficient_type = Coeff;
  using TermMap = std::map<Monomial, Coeff, CanonicalOrder>;

  BasicPoly() = default;
  explicit BasicPoly(std::size_t nvars) : nvars_(nvars) {}

  static BasicPoly constant(std::size_t nvars, const Coeff& c) {
    BasicPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static BasicPoly one(std::size_t nvars = 0) { return constant(nvars, Coeff(1)); }
  // x_i with 1-based i.
  static BasicPoly x(std::size_t nvars, std::size_t i, std::uint32_t exponent = 1) {
    if (i < 1 || i > nvars) throw DimensionError("variable index out of range");
    Monomial m(nvars);
    m.x[i - 1] = exponent;
    return term(std::move(m), Coeff(1));
  }
  static BasicPoly q(std::size_t nvars = 0, std::uint32_t exponent = 1) {
    Monomial m(nvars);
    m.q = exponent;
    return term(std::move(m), Coeff(1));
  }
  static BasicPoly t(std::size_t nvars = 0, std::uint32_t exponent = 1) {
    Monomial m(nvars);
    m.t = exponent;
    return term(std::move(m), Coeff(1));
  }
  static BasicPoly term(Monomial m, const Coeff& c) {
    BasicPoly p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.nvars() != nvars_) throw DimensionError("monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPoly& operator+=(const BasicPoly& r) {
    check_dims(r);
    for (const auto& [m, c] : r.terms_) add_term(m, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& r) {
    check_dims(r);
    for (const auto& [m, c] : r.terms_) add_term(m, -c);
    return *this;
  }
  BasicPoly& operator*=(const BasicPoly& r) { return *this = *this * r; }
  BasicPoly& operator*=(const Coeff& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& [m, v] : a.terms_) v = -v;
    return a;
  }
  friend BasicPoly operator*(BasicPoly a, const Coeff& c) { return a *= c; }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_dims(b);
    BasicPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  bool operator==(const BasicPoly& r) const { return nvars_ == r.nvars_ && terms_ == r.terms_; }

  BasicPoly pow(unsigned e) const {
    BasicPoly out = one(nvars_);
    for (unsigned i = 0; i < e; ++i) out *= *this;
    return out;
  }

  // Exact quotient by d, or nullopt when d does not divide *this.
  std::optional<BasicPoly> divide_exact(const BasicPoly& d) const {
    check_dims(d);
    if (d.is_zero()) throw ArgumentError("division by the zero polynomial");
    const auto& [lm, lc] = *d.terms_.begin();
    BasicPoly rem = *this;
    BasicPoly quot(nvars_);
    while (!rem.is_zero()) {
      const auto [rm, rc] = *rem.terms_.begin();
      if (!rm.divisible_by(lm) || !detail::coeff_divides(lc, rc)) return std::nullopt;
      BasicPoly step = term(rm / lm, Coeff(rc / lc));
      quot += step;
      rem -= step * d;
    }
    return quot;
  }

  // Re-embeds a polynomial with no x-dependence into nvars variables.
  BasicPoly lifted(std::size_t nvars) const {
    if (nvars == nvars_) return *this;
    BasicPoly out(nvars);
    for (const auto& [m, c] : terms_) {
      if (!m.is_qt_only()) throw DimensionError("cannot lift a polynomial that depends on x");
      Monomial lm(nvars);
      lm.q = m.q;
      lm.t = m.t;
      out.add_term(lm, c);
    }
    return out;
  }

  // Exchanges x_i and x_j (1-based).
  BasicPoly swap_x(std::size_t i, std::size_t j) const {
    BasicPoly out(nvars_);
    for (const auto& [key, c] : terms_) {
      Monomial m = key;
      std::swap(m.x.at(i - 1), m.x.at(j - 1));
      out.add_term(m, c);
    }
    return out;
  }

  std::string to_string() const;

 private:
  void check_dims(const BasicPoly& r) const {
    if (r.nvars_ != nvars_) throw DimensionError("ambient variable counts differ");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

using MPoly = BasicPoly<Integer>;
using RPoly = BasicPoly<Rational>;

std::string monomial_to_string(const Monomial& m);

template <class Coeff>
std::string BasicPoly<Coeff>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Coeff mag = negative ? Coeff(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mon = monomial_to_string(m);
    if (mon.empty())
      out += detail::coeff_to_string(mag);
    else if (mag == 1)
      out += mon;
    else
      out += detail::coeff_to_string(mag) + "*" + mon;
  }
  return out;
}

extern template class BasicPoly<Integer>;
extern template class BasicPoly<Rational>;

MPoly poly_add(const MPoly& p, const MPoly& r);
MPoly poly_mul(const MPoly& p, const MPoly& r);

// (t;t)_m = (1-t)(1-t^2)...(1-t^m), as a q,t-polynomial (no x variables).
MPoly pochhammer_tt(unsigned m);
// [n choose k]_t.
MPoly gaussian_binomial(unsigned n, unsigned k);
// (t;t)_n / prod (t;t)_{u_i}; parts must sum to n.
MPoly t_multinomial(unsigned n, const std::vector<unsigned>& parts);
// [k]_t = 1 + t + ... + t^{k-1}.
MPoly t_integer(unsigned k);

// The binomial 1 - q^a t^b with b >= 1.
struct QtFactor {
  std::uint32_t a = 0;
  std::uint32_t b = 1;

  QtFactor() = default;
  QtFactor(std::uint32_t qa, std::uint32_t tb);
  MPoly to_poly(std::size_t nvars = 0) const;
  auto operator<=>(const QtFactor&) const = default;
};

using FactorMultiset = std::map<QtFactor, unsigned>;

MPoly expand(const FactorMultiset& factors, std::size_t nvars = 0);

// numerator / prod(denominator). The numerator carries no x variables.
class QtRational {
 public:
  QtRational() : num_(0) {}
  explicit QtRational(MPoly numerator, FactorMultiset denominator = {});
  static QtRational from_integer(long v) { return QtRational(MPoly::constant(0, Integer(v))); }

  const MPoly& numerator() const { return num_; }
  const FactorMultiset& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  std::string to_string() const;

  // Equality of values (cross-multiplied), not of representations.
  friend bool operator==(const QtRational& u, const QtRational& v);

 private:
  MPoly num_;
  FactorMultiset den_;
};

QtRational qt_mul(const QtRational& u, const QtRational& v);
QtRational qt_add(const QtRational& u, const QtRational& v);
QtRational qt_reduce(const QtRational& u);
// Throws NotIntegralError when a denominator survives reduction.
MPoly to_polynomial(const QtRational& u);

// Values for q, t and x_i; std::nullopt keeps the variable symbolic.
struct Substitution {
  std::optional<Rational> q;
  std::optional<Rational> t;
  std::vector<std::optional<Rational>> x;

  static Substitution qt(std::optional<Rational> qv, std::optional<Rational> tv) {
    return Substitution{std::move(qv), std::move(tv), {}};
  }
};

RPoly to_rational(const MPoly& p);
// nullopt when some coefficient is not an integer.
std::optional<MPoly> to_integer(const RPoly& p);

RPoly specialize(const MPoly& p, const Substitution& s);
// Throws EvaluationError when a denominator factor vanishes or does not
// divide out after substitution.
RPoly specialize(const QtRational& u, const Substitution& s);

}  // namespace macpoly
