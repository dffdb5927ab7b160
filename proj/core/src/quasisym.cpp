#include "macpoly/quasisym.hpp"

#include <algorithm>

#include "macpoly/combinatorics.hpp"
#include "macpoly/parallel.hpp"

namespace macpoly {

namespace {

Composition exponent_pattern(const Monomial& m) {
  Composition g;
  for (auto e : m.x)
    if (e > 0) g.push_back(static_cast<int>(e));
  return g;
}

Monomial place(const Composition& gamma, const std::vector<int>& support, std::size_t n) {
  Monomial m(n);
  for (std::size_t a = 0; a < gamma.size(); ++a) m.x[static_cast<std::size_t>(support[a])] = static_cast<std::uint32_t>(gamma[a]);
  return m;
}

// Calls visit(support) for every increasing k-subset of {0..n-1}.
template <class Visit>
void for_each_support(std::size_t k, std::size_t n, Visit&& visit) {
  std::vector<int> mask(n, 0);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(k), mask.end(), 1);
  do {
    std::vector<int> support;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) support.push_back(static_cast<int>(i));
    if (!visit(support)) return;
  } while (std::next_permutation(mask.begin(), mask.end()));
}

template <class Coeff, class Lookup>
QSymDecomposition<Coeff> decompose(const std::map<Monomial, Coeff, CanonicalOrder>& coeffs, std::size_t n,
                                   Lookup&& lookup) {
  QSymDecomposition<Coeff> out;
  std::map<Composition, Coeff> found;
  for (const auto& kv : coeffs) {
    const Composition g = exponent_pattern(kv.first);
    if (found.contains(g)) continue;
    std::vector<int> first(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) first[a] = static_cast<int>(a);
    const Monomial rep = place(g, first, n);
    const Coeff c = lookup(rep);
    bool ok = true;
    for_each_support(g.size(), n, [&](const std::vector<int>& support) {
      const Monomial m = place(g, support, n);
      if (!(lookup(m) == c)) {
        out.witness = std::make_pair(rep, m);
        ok = false;
      }
      return ok;
    });
    if (!ok) return out;
    found.emplace(g, c);
  }
  out.is_quasisymmetric = true;
  out.monomial_qsym_coeffs = std::move(found);
  return out;
}

}  // namespace

QSymDecomposition<MPoly> qsym_decompose(const MPoly& p) {
  std::map<Monomial, MPoly, CanonicalOrder> coeffs;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = coeffs.try_emplace(m.x_part(), MPoly(0));
    it->second.add_term(Monomial({}, m.q, m.t), c);
  }
  return decompose(coeffs, p.nvars(), [&](const Monomial& m) {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? MPoly(0) : it->second;
  });
}

QSymDecomposition<QtRational> qsym_decompose(const EResult& p) {
  return decompose(p.coeffs(), p.nvars(), [&](const Monomial& m) { return p.coefficient(m); });
}

MPoly monomial_quasisymmetric(const Composition& gamma, int n) {
  for (int g : gamma)
    if (g <= 0) throw ArgumentError("strong compositions have positive parts");
  const auto nv = static_cast<std::size_t>(n);
  MPoly out(nv);
  if (gamma.size() > nv) return out;
  for_each_support(gamma.size(), nv, [&](const std::vector<int>& support) {
    out.add_term(place(gamma, support, nv), Integer(1));
    return true;
  });
  return out;
}

EResult g_poly(const Composition& gamma, int n, unsigned threads) {
  const std::vector<Composition> alphas = zero_insertions(gamma, n);
  const auto parts = parallel_map<EResult>(alphas.size(), threads, [&](std::size_t i) { return f_poly(alphas[i]); });
  EResult out(static_cast<std::size_t>(n));
  for (const EResult& e : parts) out += e;
  return out;
}

MPoly qs_schur(const Composition& gamma, int n) {
  const RPoly r = specialize(g_poly(gamma, n), Substitution::qt(Rational(0), Rational(0)));
  auto p = to_integer(r);
  if (!p) throw NotIntegralError("quasisymmetric Schur function has non-integer coefficients");
  return *p;
}

MPoly schur_ssyt(const Partition& lambda, int n) {
  require_partition(lambda);
  const auto nv = static_cast<std::size_t>(n);
  MPoly out(nv);
  std::vector<std::vector<int>> rows;
  for (int len : lambda) rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::uint32_t> expo(nv, 0);
  auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      out.add_term(Monomial(expo, 0, 0), Integer(1));
      return;
    }
    if (c == rows[r].size()) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[r][c] = v;
      ++expo[static_cast<std::size_t>(v - 1)];
      self(self, r, c + 1);
      --expo[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(fill, 0, 0);
  return out;
}

bool t_atom_check(const Composition& alpha) {
  const int n = static_cast<int>(alpha.size());
  const RPoly at_q0 = specialize(f_poly(alpha), Substitution::qt(Rational(0), std::nullopt));
  if (!to_integer(at_q0)) return false;
  const Partition lambda = composition_stats(alpha).dec;
  const Partition parts = strip_zeros(lambda);
  EResult sum(static_cast<std::size_t>(n));
  for (const Composition& a : distinct_rearrangements(parts, n)) sum += f_poly(a);
  const RPoly at_zero = specialize(sum, Substitution::qt(Rational(0), Rational(0)));
  return at_zero == to_rational(schur_ssyt(parts, n));
}

}  // namespace macpoly
