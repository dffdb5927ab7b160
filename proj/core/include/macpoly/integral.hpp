#pragma once

// Integral forms J_mu, the PR1/PR2 normalizing products, and P_lambda as a sum
// of permuted-basement E's.

#include <cstddef>
#include <map>

#include "macpoly/nonsymmetric.hpp"
#include "macpoly/polyring.hpp"
#include "macpoly/shapes.hpp"

namespace macpoly {

// prod over cells of Diagram(mu) of (1 - q^leg t^(arm+1)); checked against the
// conjugate form prod over Diagram(mu') of (1 - q^arm t^(leg+1)).
MPoly pr1(const Partition& mu);
MPoly pr1_arm_leg(const Partition& mu);
MPoly pr1_conjugate_form(const Partition& mu);

// prod (t;t)_{m_i} times prod over cells of inc(alpha) above row 1 of
// (1 - q^(leg+1) t^(arm+1)), composition arms.
MPoly pr2(const Composition& alpha);

// (1-t)^l(mu) times the sum over nonattacking fillings of Diagram(mu).
MPoly j_hhl(const Partition& mu, int n);

struct JResult {
  MPoly value;
  std::map<int, int> mult_prefactor;  // part -> multiplicity
  MPoly quotient;                     // value / prod (t;t)_{m_i}
  std::size_t filling_count = 0;
};

// prod (t;t)_{m_i} times the sum over ordered nonattacking fillings of inc(mu).
JResult j_compact(const Partition& mu, int n);

// Sum of f_poly(alpha) over all rearrangements alpha of mu padded to length n.
EResult p_poly(const Partition& lambda, int n, unsigned threads = 1);

}  // namespace macpoly
