#include <doctest.h>

#include <random>

#include "macpoly/polyring.hpp"
#include "support.hpp"

using namespace macpoly;
using namespace macpoly::test;

TEST_SUITE("polyring") {

TEST_CASE("addition") {
  CHECK((X(1, 1) + (-X(1, 1))).is_zero());
  CHECK(poly_add(C(0, 1) + Q(), T()) == C(0, 1) + Q() + T());
  const MPoly x1q = X(1, 1) * Q(1);
  CHECK(x1q + x1q == x1q * Integer(2));
  CHECK_THROWS_AS(X(1, 1) + X(2, 1), DimensionError);
}

TEST_CASE("multiplication") {
  CHECK(poly_mul(C(0, 1) - T(), C(0, 1) + T()) == C(0, 1) - MPoly::t(0, 2));
  CHECK((X(2, 1) * MPoly(2)).is_zero());
  const MPoly s = X(2, 1) + X(2, 2);
  CHECK(s * s == MPoly::x(2, 1, 2) + X(2, 1) * X(2, 2) * Integer(2) + MPoly::x(2, 2, 2));
  CHECK_THROWS_AS(X(1, 1) * X(2, 1), DimensionError);
}

TEST_CASE("canonical display order") {
  const MPoly p = C(2, 1) + T(2) + Q(2) + X(2, 2) + X(2, 1);
  CHECK(p.to_string() == "x1 + x2 + q + t + 1");
  CHECK(MPoly(3).to_string() == "0");
  CHECK((X(2, 1) * X(2, 1) - X(2, 2) * Integer(3)).to_string() == "x1^2 - 3*x2");
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer_tt(0) == MPoly::one());
  CHECK(pochhammer_tt(1) == C(0, 1) - T());
  CHECK(pochhammer_tt(3) == one_minus_qt(0, 1) * one_minus_qt(0, 2) * one_minus_qt(0, 3));
  for (unsigned m = 0; m <= 12; ++m) {
    const MPoly p = pochhammer_tt(m);
    CHECK(p.terms().begin()->first.t == m * (m + 1) / 2);
    CHECK(p.coefficient(Monomial(0)) == 1);
  }
}

TEST_CASE("t-multinomial") {
  CHECK(t_multinomial(2, {1, 1}) == C(0, 1) + T());
  CHECK(t_multinomial(3, {2, 1}) == C(0, 1) + T() + MPoly::t(0, 2));
  CHECK(t_multinomial(5, {5}) == MPoly::one());
  CHECK(t_multinomial(0, {}) == MPoly::one());
  CHECK_THROWS_AS(t_multinomial(3, {1, 1}), ArgumentError);

  // Pascal recurrence [n,k] = [n-1,k-1] + t^k [n-1,k] as an independent oracle.
  std::vector<std::vector<MPoly>> pascal(9);
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      if (k == 0 || k == n)
        pascal[n].push_back(MPoly::one());
      else
        pascal[n].push_back(pascal[n - 1][k - 1] + MPoly::t(0, k) * pascal[n - 1][k]);
      CHECK(gaussian_binomial(n, k) == pascal[n][k]);
    }
}

TEST_CASE("t-multinomial at t = 1 is the multinomial coefficient") {
  auto factorial = [](unsigned k) {
    Integer f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (unsigned n = 0; n <= 8; ++n) {
    // All compositions of n into positive parts.
    for (unsigned mask = 0; mask < (n == 0 ? 1u : 1u << (n - 1)); ++mask) {
      std::vector<unsigned> parts;
      unsigned run = 1;
      for (unsigned i = 0; i + 1 < n; ++i) {
        if (mask & (1u << i)) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      if (n > 0) parts.push_back(run);
      Integer expected = factorial(n);
      for (unsigned p : parts) expected /= factorial(p);
      const RPoly at1 = specialize(t_multinomial(n, parts), Substitution::qt(std::nullopt, Rational(1)));
      CHECK(at1 == RPoly::constant(0, Rational(expected)));
    }
  }
}

TEST_CASE("qt factors") {
  CHECK_THROWS_AS(QtFactor(1, 0), ArgumentError);
  CHECK(QtFactor(1, 2).to_poly() == C(0, 1) - Q() * MPoly::t(0, 2));
}

TEST_CASE("qt_mul, qt_add, qt_reduce") {
  const QtRational a(C(0, 1) - T(), {{QtFactor(0, 1), 1}});
  CHECK(qt_reduce(a) == QtRational(MPoly::one()));
  CHECK(qt_reduce(a).is_polynomial());

  const QtRational u(C(0, 1) + Q(), {{QtFactor(0, 1), 1}});
  CHECK(qt_add(u, QtRational()) == u);

  const QtRational b(C(0, 1) - T(), {{QtFactor(1, 2), 1}});
  const QtRational c(one_minus_qt(1, 2), {{QtFactor(0, 1), 1}});
  const QtRational bc = qt_mul(b, c);
  CHECK(bc.is_polynomial());
  CHECK(bc.numerator() == MPoly::one());

  CHECK(qt_reduce(QtRational(C(0, 1) - MPoly::t(0, 2), {{QtFactor(0, 1), 1}})).numerator() == C(0, 1) + T());
  const QtRational stuck = qt_reduce(u);
  CHECK(stuck.numerator() == C(0, 1) + Q());
  CHECK(stuck.denominator().size() == 1);
  const QtRational both(one_minus_qt(0, 1) * one_minus_qt(1, 1), {{QtFactor(0, 1), 1}, {QtFactor(1, 1), 1}});
  CHECK(qt_reduce(both).numerator() == MPoly::one());
  CHECK(qt_reduce(both).is_polynomial());

  // 1/(1-t) + 1/(1-qt) over the common denominator.
  const QtRational s = qt_add(QtRational(MPoly::one(), {{QtFactor(0, 1), 1}}), QtRational(MPoly::one(), {{QtFactor(1, 1), 1}}));
  CHECK(s == QtRational(one_minus_qt(0, 1) + one_minus_qt(1, 1), {{QtFactor(0, 1), 1}, {QtFactor(1, 1), 1}}));
}

TEST_CASE("to_polynomial") {
  CHECK(to_polynomial(QtRational(C(0, 5))) == C(0, 5));
  CHECK(to_polynomial(QtRational(C(0, 1) - MPoly::t(0, 2), {{QtFactor(0, 1), 1}})) == C(0, 1) + T());
  CHECK_THROWS_AS(to_polynomial(QtRational(C(0, 1) + Q(), {{QtFactor(0, 1), 1}})), NotIntegralError);
}

TEST_CASE("specialize") {
  const MPoly p = C(1, 1) + Q(1) + T(1) * X(1, 1);
  CHECK(specialize(p, Substitution::qt(Rational(0), Rational(0))) == RPoly::one(1));
  CHECK(specialize(pochhammer_tt(3), Substitution::qt(std::nullopt, Rational(1))).is_zero());
  // One-cell weight (1-t)/(1-qt) at q = t = 0.
  const QtRational w(C(0, 1) - T(), {{QtFactor(1, 1), 1}});
  CHECK(specialize(w, Substitution::qt(Rational(0), Rational(0))) == RPoly::one());
  CHECK_THROWS_AS(specialize(QtRational(MPoly::one(), {{QtFactor(0, 1), 1}}), Substitution::qt(std::nullopt, Rational(1))),
                  EvaluationError);
  // Keeping t: (1-t^2)/(1-t) at q = 0 divides out.
  const RPoly kept = specialize(QtRational(C(0, 1) - MPoly::t(0, 2), {{QtFactor(0, 1), 1}}), Substitution::qt(Rational(0), std::nullopt));
  CHECK(kept == to_rational(C(0, 1) + T()));
  // x substitution with a rational value.
  Substitution s;
  s.x = {Rational(1, 2)};
  CHECK(specialize(X(1, 1) * X(1, 1), s) == RPoly::constant(1, Rational(1, 4)));
}

TEST_CASE("exact division") {
  const MPoly a = X(2, 1) * X(2, 1) - X(2, 2) * X(2, 2);
  const auto qt = a.divide_exact(X(2, 1) - X(2, 2));
  REQUIRE(qt);
  CHECK(*qt == X(2, 1) + X(2, 2));
  CHECK_FALSE((X(2, 1) + C(2, 1)).divide_exact(X(2, 2)).has_value());
  CHECK_FALSE((C(0, 3)).divide_exact(C(0, 2)).has_value());
  CHECK_THROWS_AS(a.divide_exact(MPoly(2)), ArgumentError);
}

TEST_CASE("lifting and swapping") {
  CHECK((C(0, 1) - T()).lifted(2) == C(2, 1) - T(2));
  CHECK_THROWS_AS(X(1, 1).lifted(2), DimensionError);
  CHECK((X(3, 1) * X(3, 1) * X(3, 3)).swap_x(1, 3) == X(3, 3) * X(3, 3) * X(3, 1));
}

TEST_CASE("specialize commutes with ring operations") {
  std::mt19937 rng(7);
  auto random_poly = [&] {
    MPoly p(2);
    for (int k = 0; k < 4; ++k) {
      Monomial m({static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3)},
                 static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3));
      p.add_term(m, Integer(static_cast<int>(rng() % 7) - 3));
    }
    return p;
  };
  Substitution s = Substitution::qt(Rational(2, 3), std::nullopt);
  s.x = {Rational(-1), std::nullopt};
  for (int i = 0; i < 50; ++i) {
    const MPoly a = random_poly(), b = random_poly();
    CHECK(specialize(a + b, s) == specialize(a, s) + specialize(b, s));
    CHECK(specialize(a * b, s) == specialize(a, s) * specialize(b, s));
  }
}

}  // TEST_SUITE
