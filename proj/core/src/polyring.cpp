#include "macpoly/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace macpoly {

template class BasicPoly<Integer>;
template class BasicPoly<Rational>;

std::uint64_t Monomial::x_degree() const {
  return std::accumulate(x.begin(), x.end(), std::uint64_t{0});
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (other.x.size() != x.size()) return false;
  if (other.q > q || other.t > t) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (other.x[i] > x[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.x.size() != x.size()) throw DimensionError("monomials have different variable counts");
  Monomial m = *this;
  for (std::size_t i = 0; i < x.size(); ++i) m.x[i] += other.x[i];
  m.q += other.q;
  m.t += other.t;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!divisible_by(other)) throw ArgumentError("monomial is not divisible");
  Monomial m = *this;
  for (std::size_t i = 0; i < x.size(); ++i) m.x[i] -= other.x[i];
  m.q -= other.q;
  m.t -= other.t;
  return m;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.x.size() != b.x.size()) return a.x.size() < b.x.size();
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.x.size(); ++i)
    if (a.x[i] != b.x[i]) return a.x[i] > b.x[i];
  if (a.q != b.q) return a.q > b.q;
  return a.t > b.t;
}

namespace detail {
std::string coeff_to_string(const Integer& c) { return c.str(); }
std::string coeff_to_string(const Rational& c) {
  if (boost::multiprecision::denominator(c) == 1) return boost::multiprecision::numerator(c).str();
  return boost::multiprecision::numerator(c).str() + "/" + boost::multiprecision::denominator(c).str();
}
}  // namespace detail

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  auto emit = [&out](const std::string& name, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.x.size(); ++i) emit("x" + std::to_string(i + 1), m.x[i]);
  emit("q", m.q);
  emit("t", m.t);
  return out;
}

MPoly poly_add(const MPoly& p, const MPoly& r) { return p + r; }
MPoly poly_mul(const MPoly& p, const MPoly& r) { return p * r; }

MPoly pochhammer_tt(unsigned m) {
  MPoly out = MPoly::one();
  for (unsigned i = 1; i <= m; ++i) out *= MPoly::one() - MPoly::t(0, i);
  return out;
}

MPoly t_integer(unsigned k) {
  MPoly out(0);
  for (unsigned i = 0; i < k; ++i) out += MPoly::t(0, i);
  return out;
}

MPoly gaussian_binomial(unsigned n, unsigned k) {
  if (k > n) return MPoly(0);
  const MPoly den = pochhammer_tt(k) * pochhammer_tt(n - k);
  auto quot = pochhammer_tt(n).divide_exact(den);
  if (!quot) throw ConsistencyError("Gaussian binomial left a remainder");
  return *quot;
}

MPoly t_multinomial(unsigned n, const std::vector<unsigned>& parts) {
  const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
  if (total != n) throw ArgumentError("multinomial parts must sum to n");
  MPoly out = MPoly::one();
  unsigned remaining = n;
  for (unsigned u : parts) {
    out *= gaussian_binomial(remaining, u);
    remaining -= u;
  }
  return out;
}

QtFactor::QtFactor(std::uint32_t qa, std::uint32_t tb) : a(qa), b(tb) {
  if (tb < 1) throw ArgumentError("denominator factor needs a positive t-exponent");
}

MPoly QtFactor::to_poly(std::size_t nvars) const {
  Monomial m(nvars);
  m.q = a;
  m.t = b;
  return MPoly::one(nvars) - MPoly::term(m, Integer(1));
}

MPoly expand(const FactorMultiset& factors, std::size_t nvars) {
  MPoly out = MPoly::one(nvars);
  for (const auto& [f, mult] : factors)
    for (unsigned i = 0; i < mult; ++i) out *= f.to_poly(nvars);
  return out;
}

QtRational::QtRational(MPoly numerator, FactorMultiset denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.nvars() != 0) throw DimensionError("QtRational numerator must not carry x variables");
  std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
  if (num_.is_zero()) den_.clear();
}

namespace {

FactorMultiset multiset_minus(const FactorMultiset& a, const FactorMultiset& b) {
  FactorMultiset out;
  for (const auto& [f, m] : a) {
    auto it = b.find(f);
    const unsigned sub = it == b.end() ? 0 : std::min(m, it->second);
    if (m > sub) out[f] = m - sub;
  }
  return out;
}

FactorMultiset multiset_max(const FactorMultiset& a, const FactorMultiset& b) {
  FactorMultiset out = a;
  for (const auto& [f, m] : b) out[f] = std::max(out[f], m);
  return out;
}

}  // namespace

bool operator==(const QtRational& u, const QtRational& v) {
  const FactorMultiset only_u = multiset_minus(u.den_, v.den_);
  const FactorMultiset only_v = multiset_minus(v.den_, u.den_);
  return u.num_ * expand(only_v) == v.num_ * expand(only_u);
}

std::string QtRational::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ")/(";
  bool first = true;
  for (const auto& [f, m] : den_) {
    if (!first) out += "*";
    first = false;
    out += "(" + f.to_poly().to_string() + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out + ")";
}

QtRational qt_reduce(const QtRational& u) {
  MPoly num = u.numerator();
  FactorMultiset den = u.denominator();
  bool changed = true;
  while (changed && !num.is_zero()) {
    changed = false;
    for (auto it = den.begin(); it != den.end();) {
      if (auto quot = num.divide_exact(it->first.to_poly())) {
        num = std::move(*quot);
        changed = true;
        if (--it->second == 0) {
          it = den.erase(it);
          continue;
        }
      } else {
        ++it;
      }
    }
  }
  return QtRational(std::move(num), std::move(den));
}

QtRational qt_mul(const QtRational& u, const QtRational& v) {
  FactorMultiset den = u.denominator();
  for (const auto& [f, m] : v.denominator()) den[f] += m;
  return qt_reduce(QtRational(u.numerator() * v.numerator(), std::move(den)));
}

QtRational qt_add(const QtRational& u, const QtRational& v) {
  if (u.is_zero()) return qt_reduce(v);
  if (v.is_zero()) return qt_reduce(u);
  FactorMultiset lcd = multiset_max(u.denominator(), v.denominator());
  MPoly num = u.numerator() * expand(multiset_minus(lcd, u.denominator())) +
              v.numerator() * expand(multiset_minus(lcd, v.denominator()));
  return qt_reduce(QtRational(std::move(num), std::move(lcd)));
}

MPoly to_polynomial(const QtRational& u) {
  QtRational r = qt_reduce(u);
  if (!r.is_polynomial()) throw NotIntegralError("rational function is not a polynomial: " + r.to_string());
  return r.numerator();
}

RPoly to_rational(const MPoly& p) {
  RPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, Rational(c));
  return out;
}

std::optional<MPoly> to_integer(const RPoly& p) {
  MPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    out.add_term(m, boost::multiprecision::numerator(c));
  }
  return out;
}

namespace {

Rational rational_pow(const Rational& base, std::uint32_t e) {
  Rational out = 1;
  for (std::uint32_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

RPoly specialize(const MPoly& p, const Substitution& s) {
  if (!s.x.empty() && s.x.size() != p.nvars())
    throw DimensionError("x substitution has the wrong length");
  RPoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Rational coeff(c);
    Monomial rest = m;
    if (s.q) {
      coeff *= rational_pow(*s.q, m.q);
      rest.q = 0;
    }
    if (s.t) {
      coeff *= rational_pow(*s.t, m.t);
      rest.t = 0;
    }
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (s.x[i]) {
        coeff *= rational_pow(*s.x[i], m.x[i]);
        rest.x[i] = 0;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

RPoly specialize(const QtRational& u, const Substitution& s) {
  RPoly num = specialize(u.numerator(), s);
  RPoly den = specialize(expand(u.denominator()), s);
  if (den.is_zero()) throw EvaluationError("denominator vanishes at the substitution point");
  auto quot = num.divide_exact(den);
  if (!quot) throw EvaluationError("specialization is not a polynomial: " + u.to_string());
  return *quot;
}

}  // namespace macpoly
