#include "macpoly/integral.hpp"

#include <algorithm>

#include "macpoly/combinatorics.hpp"
#include "macpoly/parallel.hpp"

namespace macpoly {

namespace {

MPoly one_minus(std::uint32_t qe, std::uint32_t te) {
  Monomial m(0);
  m.q = qe;
  m.t = te;
  return MPoly::one() - MPoly::term(m, Integer(1));
}

// Shared per-cell weight of both J formulas, without the x-monomial.
MPoly j_cell_weight(const Filling& f) {
  const Diagram& sh = f.shape();
  Monomial m(0);
  m.q = static_cast<std::uint32_t>(maj(f));
  m.t = static_cast<std::uint32_t>(coinv_comp(f));
  MPoly w = MPoly::term(m, Integer(1));
  for (const Cell& s : sh.cells()) {
    if (s.row == 1) continue;
    if (f.at(s) == f.at({s.col, s.row - 1}))
      w *= one_minus(static_cast<std::uint32_t>(leg(sh, s) + 1), static_cast<std::uint32_t>(arm_composition(sh, s) + 1));
    else
      w *= one_minus(0, 1);
  }
  return w;
}

}  // namespace

MPoly pr1_arm_leg(const Partition& mu) {
  require_partition(mu);
  const Diagram d(mu);
  MPoly out = MPoly::one();
  for (const Cell& s : d.cells())
    out *= one_minus(static_cast<std::uint32_t>(leg(d, s)), static_cast<std::uint32_t>(arm_partition(d, s) + 1));
  return out;
}

MPoly pr1_conjugate_form(const Partition& mu) {
  require_partition(mu);
  const Diagram d(conjugate(mu));
  MPoly out = MPoly::one();
  for (const Cell& s : d.cells())
    out *= one_minus(static_cast<std::uint32_t>(arm_partition(d, s)), static_cast<std::uint32_t>(leg(d, s) + 1));
  return out;
}

MPoly pr1(const Partition& mu) {
  MPoly a = pr1_arm_leg(mu);
  if (!(a == pr1_conjugate_form(mu))) throw ConsistencyError("PR1 forms disagree");
  return a;
}

MPoly pr2(const Composition& alpha) {
  const Diagram d(composition_stats(alpha).inc);
  MPoly out = multiplicity_prefactor(alpha);
  for (const Cell& s : d.cells()) {
    if (s.row == 1) continue;
    out *= one_minus(static_cast<std::uint32_t>(leg(d, s) + 1), static_cast<std::uint32_t>(arm_composition(d, s) + 1));
  }
  return out;
}

MPoly j_hhl(const Partition& mu, int n) {
  require_partition(mu);
  const auto nv = static_cast<std::size_t>(n);
  if (mu.empty()) return MPoly::one(nv);
  MPoly sum(nv);
  for_each_nonattacking_filling(Diagram(mu), n, Basement::infinity(), {}, [&](const Filling& f) {
    sum += MPoly::term(Monomial(f.x_exponents(n), 0, 0), Integer(1)) * j_cell_weight(f).lifted(nv);
  });
  return one_minus(0, 1).pow(static_cast<unsigned>(mu.size())).lifted(nv) * sum;
}

JResult j_compact(const Partition& mu, int n) {
  require_partition(mu);
  const auto nv = static_cast<std::size_t>(n);
  JResult r;
  r.mult_prefactor = composition_stats(mu).mult;
  const MPoly prefactor = multiplicity_prefactor(mu).lifted(nv);
  MPoly sum(nv);
  if (mu.empty()) {
    sum = MPoly::one(nv);
    r.filling_count = 1;
  } else {
    Partition inc = mu;
    std::reverse(inc.begin(), inc.end());
    for_each_nonattacking_filling(Diagram(inc), n, Basement::none(), {.ordered = true}, [&](const Filling& f) {
      ++r.filling_count;
      sum += MPoly::term(Monomial(f.x_exponents(n), 0, 0), Integer(1)) * j_cell_weight(f).lifted(nv);
    });
  }
  r.value = prefactor * sum;
  auto quotient = r.value.divide_exact(prefactor);
  if (!quotient || !(*quotient == sum)) throw ConsistencyError("J is not divisible by its multiplicity prefactor");
  r.quotient = std::move(*quotient);
  return r;
}

EResult p_poly(const Partition& lambda, int n, unsigned threads) {
  require_partition(lambda);
  if (static_cast<int>(lambda.size()) > n) throw DimensionError("partition has more parts than variables");
  const std::vector<Composition> alphas = distinct_rearrangements(lambda, n);
  const auto parts = parallel_map<EResult>(alphas.size(), threads, [&](std::size_t i) { return f_poly(alphas[i]); });
  EResult out(static_cast<std::size_t>(n));
  for (const EResult& e : parts) out += e;
  return out;
}

}  // namespace macpoly
