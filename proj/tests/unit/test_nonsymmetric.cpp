#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "macpoly/combinatorics.hpp"
#include "macpoly/integral.hpp"
#include "macpoly/json_io.hpp"
#include "macpoly/nonsymmetric.hpp"
#include "support.hpp"

using namespace macpoly;
using namespace macpoly::test;

namespace {

Monomial xm(std::vector<std::uint32_t> e) { return Monomial(std::move(e), 0, 0); }

std::vector<Composition> weak_compositions(int size, int n) {
  std::vector<Composition> out;
  for (int k = 0; k <= size; ++k)
    for (const Partition& lam : partitions_of(k))
      if (static_cast<int>(lam.size()) <= n)
        for (auto& a : distinct_rearrangements(lam, n)) out.push_back(std::move(a));
  return out;
}

}  // namespace

TEST_SUITE("nonsymmetric") {

TEST_CASE("empty and zero compositions") {
  CHECK(e_permuted_basement({}).to_polynomial() == MPoly::one());
  CHECK(e_permuted_basement({0, 0, 0}).to_polynomial() == MPoly::one(3));
  CHECK(f_poly({0, 0}).to_polynomial() == MPoly::one(2));
  CHECK(integral_e({0, 0, 0}) == MPoly::one(3));
}

TEST_CASE("single boxes") {
  const MPoly e10 = e_permuted_basement({1, 0}).to_polynomial();
  const MPoly e01 = e_permuted_basement({0, 1}).to_polynomial();
  CHECK(e10 == X(2, 1));
  CHECK(e01 == X(2, 2));
  CHECK(e10 + e01 == X(2, 1) + X(2, 2));
  CHECK(e_permuted_basement({1, 1}).to_polynomial() == X(2, 1) * X(2, 2));
}

TEST_CASE("frozen two-variable values") {
  // E_(0,2) = x2^2 + x1 x2 (1-t)/(1-qt); E_(2,0) = x1^2 + x1 x2 q(1-t)/(1-qt).
  const FactorMultiset den{{QtFactor(1, 1), 1}};
  EResult e02(2), e20(2);
  e02.add(xm({0, 2}), QtRational(MPoly::one()));
  e02.add(xm({1, 1}), QtRational(C(0, 1) - T(), den));
  e20.add(xm({2, 0}), QtRational(MPoly::one()));
  e20.add(xm({1, 1}), QtRational(Q() * (C(0, 1) - T()), den));
  CHECK(e_permuted_basement({0, 2}) == e02);
  CHECK(e_permuted_basement({2, 0}) == e20);
  CHECK_THROWS_AS(e_permuted_basement({0, 2}).to_polynomial(), NotIntegralError);
  CHECK(specialize(e02, Substitution::qt(Rational(0), std::nullopt)) ==
        to_rational(X(2, 2) * X(2, 2) + (C(2, 1) - T(2)) * X(2, 1) * X(2, 2)));
}

TEST_CASE("F is E with the beta basement") {
  for (const Composition& a : weak_compositions(3, 3)) CHECK(f_poly(a) == e_permuted_basement(a));
}

TEST_CASE("every monomial has x-degree |alpha|") {
  for (const Composition& a : weak_compositions(4, 3)) {
    const int size = std::accumulate(a.begin(), a.end(), 0);
    const EResult e = e_permuted_basement(a);
    for (const auto& [m, w] : e.coeffs()) CHECK(static_cast<int>(m.x_degree()) == size);
  }
}

TEST_CASE("integral form") {
  for (int n = 1; n <= 4; ++n) {
    MPoly expected = MPoly::one(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) expected *= X(static_cast<std::size_t>(n), static_cast<std::size_t>(i));
    expected = expected * pochhammer_tt(static_cast<unsigned>(n)).lifted(static_cast<std::size_t>(n));
    CHECK(integral_e(Composition(static_cast<std::size_t>(n), 1)) == expected);
  }
  for (const Composition& a : weak_compositions(4, 3)) {
    CHECK(integral_e_direct(a) == integral_e_via_e(a));
    CHECK_NOTHROW(integral_e(a, Verify::yes));
    const MPoly ie = integral_e(a);
    CHECK(ie.divide_exact(multiplicity_prefactor(a).lifted(a.size())).has_value());
  }
  CHECK(multiplicity_prefactor({0, 2, 0, 2, 1}) == pochhammer_tt(2) * pochhammer_tt(1));
}

TEST_CASE("EResult arithmetic") {
  EResult e(2);
  CHECK(e.is_zero());
  CHECK(e.to_string() == "0");
  e.add(xm({1, 0}), QtRational());
  CHECK(e.is_zero());
  CHECK_THROWS_AS(e.add(Monomial({1, 0}, 1, 0), QtRational(MPoly::one())), ArgumentError);
  CHECK_THROWS_AS(e.add(xm({1}), QtRational(MPoly::one())), DimensionError);
  e.add(xm({1, 0}), QtRational(MPoly::one()));
  e.add(xm({1, 0}), QtRational(-MPoly::one()));
  CHECK(e.is_zero());
  CHECK_THROWS_AS(EResult(2) += EResult(3), DimensionError);

  const EResult e20 = e_permuted_basement({2, 0});
  const EResult swapped = e20.swap_x(1, 2);
  CHECK(swapped.coefficient(xm({0, 2})) == QtRational(MPoly::one()));
  CHECK(e20.scaled(QtFactor(1, 1).to_poly()).to_polynomial() ==
        (X(2, 1) * X(2, 1)) * one_minus_qt(1, 1, 2) + X(2, 1) * X(2, 2) * (Q(2) - Q(2) * T(2)));
  CHECK(EResult::from_polynomial(X(2, 1) * T(2) + X(2, 1)).to_polynomial() == X(2, 1) * T(2) + X(2, 1));
}

TEST_CASE("sums of F do not depend on merge order") {
  std::vector<Composition> alphas = distinct_rearrangements({2, 1, 1}, 4);
  EResult forward(4);
  for (const auto& a : alphas) forward += f_poly(a);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(alphas.begin(), alphas.end(), rng);
    EResult shuffled(4);
    for (const auto& a : alphas) shuffled += f_poly(a);
    CHECK(shuffled == forward);
    CHECK(to_json(shuffled) == to_json(forward));
  }
}

}  // TEST_SUITE
