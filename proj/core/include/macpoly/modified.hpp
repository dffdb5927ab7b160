#pragma once

// Modified Macdonald polynomials H~_lambda: the sum over all fillings and the
// compact sum over sorted tableaux.

#include <map>
#include <span>
#include <vector>

#include "macpoly/polyring.hpp"
#include "macpoly/shapes.hpp"

namespace macpoly {

// A <| B (or equal) for two equal-height columns read bottom to top. At the
// first index h where the columns differ: a_1 < b_1 when h = 1, otherwise the
// cells holding b_h, a_h, a_{h-1} must not form a counterclockwise triple.
bool column_order_leq(std::span<const Entry> a, std::span<const Entry> b);

// Partition-shaped filling whose equal-height columns weakly increase under
// column_order_leq.
bool is_sorted_tableau(const Filling& f);

class SortedTableau {
 public:
  // Throws ShapeError unless f is a sorted tableau of partition shape.
  static SortedTableau certify(Filling f);

  const Filling& filling() const { return filling_; }
  // Height -> run lengths of identical adjacent columns, left to right.
  const std::map<int, std::vector<unsigned>>& block_multiplicities() const { return blocks_; }

 private:
  explicit SortedTableau(Filling f);
  Filling filling_;
  std::map<int, std::vector<unsigned>> blocks_;
};

MPoly perm_t(const SortedTableau& s);
// t^inv q^maj perm_t, without the x-weight.
MPoly sorted_tableau_weight(const SortedTableau& s);

// Sorted tableaux of the given partition shape with entries in 1..n, generated
// height by height as weakly increasing column sequences.
std::vector<SortedTableau> sorted_tableaux(const Diagram& shape, int n);

// Sum of x^sigma q^inv t^maj over all fillings of lambda's diagram.
MPoly htilde_hhl(const Partition& lambda, int n);
// Same polynomial from sorted tableaux of conjugate(lambda), weighted by
// x^sigma t^inv q^maj perm_t.
MPoly htilde_compact(const Partition& lambda, int n);

}  // namespace macpoly
