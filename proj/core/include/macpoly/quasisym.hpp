#pragma once

// Quasisymmetric Macdonald polynomials G_gamma, the monomial-quasisymmetric
// decomposition, and the tableau Schur polynomial used as an oracle.

#include <map>
#include <optional>
#include <utility>

#include "macpoly/nonsymmetric.hpp"
#include "macpoly/polyring.hpp"
#include "macpoly/shapes.hpp"

namespace macpoly {

template <class Coeff>
struct QSymDecomposition {
  bool is_quasisymmetric = false;
  // M_gamma -> coefficient; filled only when is_quasisymmetric.
  std::map<Composition, Coeff> monomial_qsym_coeffs;
  // Two x-monomials in the same orbit with different coefficients.
  std::optional<std::pair<Monomial, Monomial>> witness;
};

// Coefficients are q,t-polynomials (nvars 0).
QSymDecomposition<MPoly> qsym_decompose(const MPoly& p);
QSymDecomposition<QtRational> qsym_decompose(const EResult& p);

// Sum of prod x_{i_a}^{gamma_a} over i_1 < ... < i_k <= n.
MPoly monomial_quasisymmetric(const Composition& gamma, int n);

// Sum of f_poly(alpha) over weak compositions of length n with alpha+ = gamma.
EResult g_poly(const Composition& gamma, int n, unsigned threads = 1);
// g_poly at q = t = 0.
MPoly qs_schur(const Composition& gamma, int n);

// Semistandard tableaux of row lengths lambda with entries <= n.
MPoly schur_ssyt(const Partition& lambda, int n);

// F_alpha(X;0,t) has coefficients in Z[t], and the F's with dec(alpha) =
// dec(alpha) sum to the Schur polynomial at t = 0.
bool t_atom_check(const Composition& alpha);

}  // namespace macpoly
