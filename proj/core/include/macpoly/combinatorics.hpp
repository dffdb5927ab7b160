#pragma once

// Small enumeration helpers shared by the polynomial families and the tests.

#include <vector>

#include "macpoly/shapes.hpp"

namespace macpoly {

// Partitions of k in reverse lexicographic order; {} for k = 0.
std::vector<Partition> partitions_of(int k);
// Strong compositions of k in lexicographic order; {} for k = 0.
std::vector<Composition> strong_compositions_of(int k);
// Distinct rearrangements of parts padded with zeros to length n, sorted.
std::vector<Composition> distinct_rearrangements(const Composition& parts, int n);
// Weak compositions of length n whose nonzero parts, in order, are gamma.
std::vector<Composition> zero_insertions(const Composition& gamma, int n);

}  // namespace macpoly
