#pragma once

// Permuted-basement nonsymmetric Macdonald polynomials E_{inc(alpha)}^{beta(alpha)}
// and their integral forms.

#include <cstddef>
#include <map>
#include <string>

#include "macpoly/polyring.hpp"
#include "macpoly/shapes.hpp"

namespace macpoly {

// Polynomial in x_1..x_n whose coefficients are q,t-rational functions.
class EResult {
 public:
  using CoeffMap = std::map<Monomial, QtRational, CanonicalOrder>;

  explicit EResult(std::size_t nvars = 0) : nvars_(nvars) {}
  static EResult from_polynomial(const MPoly& p);

  std::size_t nvars() const { return nvars_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  QtRational coefficient(const Monomial& x_monomial) const;

  // Adds w * x^m; m must have zero q and t exponents.
  void add(const Monomial& x_monomial, const QtRational& w);
  EResult& operator+=(const EResult& other);
  friend EResult operator+(EResult a, const EResult& b) { return a += b; }
  // Multiplies every coefficient by a q,t-polynomial.
  EResult scaled(const MPoly& qt_factor) const;
  // Throws NotIntegralError when some coefficient keeps a denominator.
  MPoly to_polynomial() const;
  EResult swap_x(std::size_t i, std::size_t j) const;
  std::string to_string() const;

  friend bool operator==(const EResult& a, const EResult& b);

 private:
  std::size_t nvars_;
  CoeffMap coeffs_;
};

RPoly specialize(const EResult& e, const Substitution& s);

// Sum over nonattacking fillings of inc(alpha) with basement beta(alpha) of
// x^sigma q^maj t^coinv prod_{sigma(s) != sigma(South s)} (1-t)/(1-q^{leg+1}t^{arm+1}).
// n = alpha.size().
EResult e_permuted_basement(const Composition& alpha);
// F_alpha = E_{inc(alpha)}^{beta(alpha)}.
EResult f_poly(const Composition& alpha);

// prod_i (t;t)_{m_i} over the positive part multiplicities of alpha.
MPoly multiplicity_prefactor(const Composition& alpha);

// prod (t;t)_{m_i} times the sum over ordered nonattacking fillings with
// basement beta(alpha); the production route.
MPoly integral_e_direct(const Composition& alpha);
// PR2(inc alpha) * E, reduced to a polynomial.
MPoly integral_e_via_e(const Composition& alpha);

enum class Verify { no, yes };
// With Verify::yes both routes run and a mismatch throws ConsistencyError.
MPoly integral_e(const Composition& alpha, Verify verify = Verify::no);

}  // namespace macpoly
