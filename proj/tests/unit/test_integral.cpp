#include <doctest.h>

#include "macpoly/combinatorics.hpp"
#include "macpoly/integral.hpp"
#include "macpoly/json_io.hpp"
#include "macpoly/quasisym.hpp"
#include "support.hpp"

using namespace macpoly;
using namespace macpoly::test;

namespace {

MPoly product_of_x(int n) {
  MPoly p = MPoly::one(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p *= X(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
  return p;
}

}  // namespace

TEST_SUITE("integral") {

TEST_CASE("pr1") {
  CHECK(pr1({1}) == one_minus_qt(0, 1));
  // Column convention: (1,1) is two columns of height one.
  CHECK(pr1({1, 1}) == one_minus_qt(0, 1) * one_minus_qt(0, 2));
  CHECK(pr1({2}) == one_minus_qt(0, 1) * one_minus_qt(1, 1));
  // Frozen from the sympy prototype.
  CHECK(pr1({2, 1}) == one_minus_qt(0, 1) * one_minus_qt(0, 1) * one_minus_qt(1, 2));
  CHECK(pr1({3}) == one_minus_qt(0, 1) * one_minus_qt(1, 1) * one_minus_qt(2, 1));
  CHECK(pr1({2, 2}) == one_minus_qt(0, 1) * one_minus_qt(0, 2) * one_minus_qt(1, 1) * one_minus_qt(1, 2));
  CHECK(pr1({}) == MPoly::one());
  CHECK_THROWS_AS(pr1({1, 2}), ShapeError);
  for (int k = 1; k <= 6; ++k)
    for (const Partition& mu : partitions_of(k)) {
      CHECK(pr1_arm_leg(mu) == pr1_conjugate_form(mu));
      CHECK(pr1(mu) == pr2(composition_stats(mu).inc));
    }
}

TEST_CASE("pr2") {
  CHECK(pr2({1, 1, 1}) == pochhammer_tt(3));
  CHECK(pr2({0, 0, 0}) == MPoly::one());
  CHECK(pr2({}) == MPoly::one());
  CHECK(pr2({2, 0, 1}) == pr2({0, 1, 2}));
}

TEST_CASE("j_hhl") {
  CHECK(j_hhl({1}, 1) == X(1, 1) * (C(1, 1) - T(1)));
  CHECK(j_hhl({}, 2) == MPoly::one(2));
  for (int n = 1; n <= 4; ++n)
    CHECK(j_hhl(Partition(static_cast<std::size_t>(n), 1), n) == product_of_x(n) * pochhammer_tt(static_cast<unsigned>(n)).lifted(static_cast<std::size_t>(n)));
  for (int n = 1; n <= 3; ++n) CHECK(j_hhl({2, 1}, n) == j_compact({2, 1}, n).value);
  CHECK_THROWS_AS(j_hhl({1, 2}, 2), ShapeError);
}

TEST_CASE("the HHL sum for 1^n has n! terms, the compact one has one") {
  std::size_t fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= static_cast<std::size_t>(n);
    std::size_t hhl_terms = 0;
    for_each_nonattacking_filling(Diagram(std::vector<int>(static_cast<std::size_t>(n), 1)), n, Basement::infinity(), {},
                                  [&](const Filling&) { ++hhl_terms; });
    CHECK(hhl_terms == fact);
    const JResult r = j_compact(Partition(static_cast<std::size_t>(n), 1), n);
    CHECK(r.filling_count == 1);
    CHECK(r.value == product_of_x(n) * pochhammer_tt(static_cast<unsigned>(n)).lifted(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("j_compact") {
  CHECK(j_compact({1}, 2).value == (C(2, 1) - T(2)) * (X(2, 1) + X(2, 2)));
  const MPoly x1 = X(2, 1), x2 = X(2, 2);
  // Frozen from the sympy prototype.
  CHECK(j_compact({2}, 2).value ==
        (C(2, 1) - T(2)) * (one_minus_qt(1, 1, 2) * (x1 * x1 + x2 * x2) + (C(2, 1) - T(2)) * (C(2, 1) + Q(2)) * x1 * x2));
  CHECK(j_compact({1, 1}, 2).value == x1 * x2 * one_minus_qt(0, 1, 2) * one_minus_qt(0, 2, 2));
  CHECK(j_compact({2, 1}, 2).value == x1 * x2 * (x1 + x2) * one_minus_qt(0, 1, 2).pow(2) * one_minus_qt(1, 2, 2));

  const JResult r = j_compact({2, 2, 1}, 3);
  CHECK(r.mult_prefactor == std::map<int, int>{{1, 1}, {2, 2}});
  CHECK(r.quotient * (pochhammer_tt(1) * pochhammer_tt(2)).lifted(3) == r.value);
  CHECK_THROWS_AS(j_compact({1, 2}, 2), ShapeError);
}

TEST_CASE("compact equals HHL") {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& mu : partitions_of(k))
      for (int n = 1; n <= 3; ++n) CHECK(j_compact(mu, n).value == j_hhl(mu, n));
}

TEST_CASE("p_poly") {
  CHECK(p_poly({1}, 2).to_polynomial() == X(2, 1) + X(2, 2));
  CHECK(p_poly({1, 1}, 2).to_polynomial() == X(2, 1) * X(2, 2));
  CHECK(p_poly({}, 2).to_polynomial() == MPoly::one(2));
  EResult p2(2);
  p2.add(Monomial({2, 0}, 0, 0), QtRational(MPoly::one()));
  p2.add(Monomial({0, 2}, 0, 0), QtRational(MPoly::one()));
  p2.add(Monomial({1, 1}, 0, 0), QtRational((C(0, 1) - T()) * (C(0, 1) + Q()), {{QtFactor(1, 1), 1}}));
  CHECK(p_poly({2}, 2) == p2);
  CHECK_THROWS_AS(p_poly({1, 1, 1}, 2), DimensionError);
  CHECK_THROWS_AS(p_poly({1, 2}, 2), ShapeError);
}

TEST_CASE("J = P * PR1 and P at q = t = 0 is Schur") {
  for (int k = 1; k <= 4; ++k)
    for (const Partition& lam : partitions_of(k))
      for (int n = static_cast<int>(lam.size()); n <= 3; ++n) {
        const EResult p = p_poly(lam, n);
        CHECK(p.scaled(pr1(lam)).to_polynomial() == j_compact(lam, n).value);
        CHECK(specialize(p, Substitution::qt(Rational(0), Rational(0))) == to_rational(schur_ssyt(lam, n)));
      }
}

TEST_CASE("p_poly is deterministic across thread counts") {
  const EResult serial = p_poly({2, 1, 1}, 4, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    const EResult par = p_poly({2, 1, 1}, 4, threads);
    CHECK(par == serial);
    CHECK(to_json(par) == to_json(serial));
  }
}

}  // TEST_SUITE
