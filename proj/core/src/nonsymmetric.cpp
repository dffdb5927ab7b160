#include "macpoly/nonsymmetric.hpp"

#include <set>

#include "macpoly/integral.hpp"

namespace macpoly {

EResult EResult::from_polynomial(const MPoly& p) {
  EResult out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial qt(0);
    qt.q = m.q;
    qt.t = m.t;
    out.add(m.x_part(), QtRational(MPoly::term(qt, c)));
  }
  return out;
}

QtRational EResult::coefficient(const Monomial& x_monomial) const {
  auto it = coeffs_.find(x_monomial);
  return it == coeffs_.end() ? QtRational() : it->second;
}

void EResult::add(const Monomial& x_monomial, const QtRational& w) {
  if (x_monomial.nvars() != nvars_) throw DimensionError("monomial has wrong number of variables");
  if (x_monomial.q != 0 || x_monomial.t != 0) throw ArgumentError("EResult keys are pure x-monomials");
  if (w.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(x_monomial, w);
  if (!inserted) {
    it->second = qt_add(it->second, w);
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

EResult& EResult::operator+=(const EResult& other) {
  if (other.nvars_ != nvars_) throw DimensionError("ambient variable counts differ");
  for (const auto& [m, w] : other.coeffs_) add(m, w);
  return *this;
}

EResult EResult::scaled(const MPoly& qt_factor) const {
  EResult out(nvars_);
  const QtRational f(qt_factor);
  for (const auto& [m, w] : coeffs_) out.add(m, qt_mul(w, f));
  return out;
}

MPoly EResult::to_polynomial() const {
  MPoly out(nvars_);
  for (const auto& [m, w] : coeffs_) {
    const MPoly c = macpoly::to_polynomial(w);
    for (const auto& [qm, qc] : c.terms()) {
      Monomial full = m;
      full.q = qm.q;
      full.t = qm.t;
      out.add_term(full, qc);
    }
  }
  return out;
}

EResult EResult::swap_x(std::size_t i, std::size_t j) const {
  EResult out(nvars_);
  for (const auto& [key, w] : coeffs_) {
    Monomial m = key;
    std::swap(m.x.at(i - 1), m.x.at(j - 1));
    out.add(m, w);
  }
  return out;
}

std::string EResult::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [m, w] : coeffs_) {
    if (!out.empty()) out += " + ";
    const std::string mon = monomial_to_string(m);
    const bool unit = w.is_polynomial() && w.numerator() == MPoly::one();
    const std::string coeff = "(" + w.to_string() + ")";
    out += mon.empty() ? coeff : unit ? mon : coeff + "*" + mon;
  }
  return out;
}

bool operator==(const EResult& a, const EResult& b) {
  if (a.nvars_ != b.nvars_) return false;
  std::set<Monomial, CanonicalOrder> keys;
  for (const auto& kv : a.coeffs_) keys.insert(kv.first);
  for (const auto& kv : b.coeffs_) keys.insert(kv.first);
  for (const Monomial& m : keys)
    if (!(a.coefficient(m) == b.coefficient(m))) return false;
  return true;
}

RPoly specialize(const EResult& e, const Substitution& s) {
  if (!s.x.empty() && s.x.size() != e.nvars()) throw DimensionError("x substitution has the wrong length");
  const Substitution qt_only = Substitution::qt(s.q, s.t);
  RPoly out(e.nvars());
  for (const auto& [m, w] : e.coeffs()) {
    const RPoly c = specialize(w, qt_only);
    Rational xval = 1;
    Monomial xm = m;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!s.x[i]) continue;
      for (std::uint32_t k = 0; k < m.x[i]; ++k) xval *= *s.x[i];
      xm.x[i] = 0;
    }
    for (const auto& [qm, qc] : c.terms()) {
      Monomial full = xm;
      full.q = qm.q;
      full.t = qm.t;
      out.add_term(full, qc * xval);
    }
  }
  return out;
}

namespace {

struct BasementSetup {
  CompositionStats stats;
  Diagram shape;
  Basement basement;
};

BasementSetup setup(const Composition& alpha) {
  CompositionStats stats = composition_stats(alpha);
  Diagram shape(stats.inc);
  Basement basement = Basement::permutation(stats.beta);
  return {std::move(stats), std::move(shape), std::move(basement)};
}

void check_bottom_row(const Filling& f) {
  const Diagram& sh = f.shape();
  for (int c = 1; c <= sh.num_columns(); ++c)
    if (sh.height(c) > 0 && f.at({c, 1}) != *f.basement().at(c))
      throw ConsistencyError("nonattacking filling of an increasing shape leaves its basement in row 1");
}

Monomial qt_monomial(int q_exp, int t_exp) {
  Monomial m(0);
  m.q = static_cast<std::uint32_t>(q_exp);
  m.t = static_cast<std::uint32_t>(t_exp);
  return m;
}

QtFactor cell_factor(const Diagram& sh, Cell s) {
  return QtFactor(static_cast<std::uint32_t>(leg(sh, s) + 1), static_cast<std::uint32_t>(arm_composition(sh, s) + 1));
}

}  // namespace

EResult e_permuted_basement(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  const auto nv = alpha.size();
  if (n == 0) return EResult::from_polynomial(MPoly::one());
  const BasementSetup b = setup(alpha);
  const MPoly one_minus_t = MPoly::one() - MPoly::t();
  EResult out(nv);
  for_each_nonattacking_filling(b.shape, n, b.basement, {}, [&](const Filling& f) {
    check_bottom_row(f);
    MPoly num = MPoly::term(qt_monomial(maj(f), coinv_comp(f)), Integer(1));
    FactorMultiset den;
    for (const Cell& s : b.shape.cells()) {
      if (f.at(s) == *f.value(s.col, s.row - 1)) continue;
      num *= one_minus_t;
      ++den[cell_factor(b.shape, s)];
    }
    out.add(Monomial(f.x_exponents(n), 0, 0), qt_reduce(QtRational(std::move(num), std::move(den))));
  });
  return out;
}

EResult f_poly(const Composition& alpha) { return e_permuted_basement(alpha); }

MPoly multiplicity_prefactor(const Composition& alpha) {
  MPoly out = MPoly::one();
  for (const auto& [part, m] : composition_stats(alpha).mult) out *= pochhammer_tt(static_cast<unsigned>(m));
  return out;
}

MPoly integral_e_direct(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  const auto nv = alpha.size();
  if (n == 0) return MPoly::one();
  const BasementSetup b = setup(alpha);
  const MPoly one_minus_t = MPoly::one() - MPoly::t();
  MPoly out(nv);
  for_each_nonattacking_filling(b.shape, n, b.basement, {.ordered = true}, [&](const Filling& f) {
    check_bottom_row(f);
    MPoly w = MPoly::term(qt_monomial(maj(f), coinv_comp(f)), Integer(1));
    for (const Cell& s : b.shape.cells()) {
      if (s.row == 1) continue;
      if (f.at(s) == f.at({s.col, s.row - 1}))
        w *= cell_factor(b.shape, s).to_poly();
      else
        w *= one_minus_t;
    }
    out += MPoly::term(Monomial(f.x_exponents(n), 0, 0), Integer(1)) * w.lifted(nv);
  });
  return multiplicity_prefactor(alpha).lifted(nv) * out;
}

MPoly integral_e_via_e(const Composition& alpha) {
  const EResult e = e_permuted_basement(alpha);
  return e.scaled(pr2(alpha)).to_polynomial();
}

MPoly integral_e(const Composition& alpha, Verify verify) {
  MPoly direct = integral_e_direct(alpha);
  if (verify == Verify::yes && !(direct == integral_e_via_e(alpha)))
    throw ConsistencyError("integral form routes disagree");
  return direct;
}

}  // namespace macpoly
