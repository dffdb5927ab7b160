#include "macpoly/combinatorics.hpp"

#include <algorithm>

namespace macpoly {

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, Composition& cur, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= remaining; ++p) {
    cur.push_back(p);
    compositions_rec(remaining - p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw ArgumentError("negative size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::vector<Composition> strong_compositions_of(int k) {
  if (k < 0) throw ArgumentError("negative size");
  std::vector<Composition> out;
  Composition cur;
  compositions_rec(k, cur, out);
  return out;
}

std::vector<Composition> distinct_rearrangements(const Composition& parts, int n) {
  Composition base = strip_zeros(parts);
  if (static_cast<int>(base.size()) > n) throw DimensionError("more parts than variables");
  base.resize(static_cast<std::size_t>(n), 0);
  std::sort(base.begin(), base.end());
  std::vector<Composition> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<Composition> zero_insertions(const Composition& gamma, int n) {
  const int k = static_cast<int>(gamma.size());
  if (k > n) throw DimensionError("composition longer than the number of variables");
  for (int g : gamma)
    if (g <= 0) throw ArgumentError("strong compositions have positive parts");
  // Choose the k positions via a 0/1 mask, lexicographically.
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.end() - k, mask.end(), 1);
  std::vector<Composition> out;
  do {
    Composition a(static_cast<std::size_t>(n), 0);
    std::size_t j = 0;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) a[i] = gamma[j++];
    out.push_back(std::move(a));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

}  // namespace macpoly
