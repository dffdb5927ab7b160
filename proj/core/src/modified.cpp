#include "macpoly/modified.hpp"

#include <algorithm>
#include <numeric>

namespace macpoly {

bool column_order_leq(std::span<const Entry> a, std::span<const Entry> b) {
  if (a.size() != b.size()) throw ShapeError("column order compares columns of equal height");
  std::size_t h = 0;
  while (h < a.size() && a[h] == b[h]) ++h;
  if (h == a.size()) return true;
  if (h == 0) return a[0] < b[0];
  return classify_triple_A(b[h], a[h], a[h - 1]) != Rotation::counterclockwise;
}

bool is_sorted_tableau(const Filling& f) {
  const Diagram& sh = f.shape();
  if (!sh.is_partition()) return false;
  for (int c = 1; c < sh.num_columns(); ++c) {
    if (sh.height(c) != sh.height(c + 1)) continue;
    if (!column_order_leq(f.column(c), f.column(c + 1))) return false;
  }
  return true;
}

SortedTableau::SortedTableau(Filling f) : filling_(std::move(f)) {
  const Diagram& sh = filling_.shape();
  for (int c = 1; c <= sh.num_columns(); ++c) {
    auto& runs = blocks_[sh.height(c)];
    const bool same_as_left = c > 1 && sh.height(c - 1) == sh.height(c) &&
                              std::ranges::equal(filling_.column(c - 1), filling_.column(c));
    if (same_as_left)
      ++runs.back();
    else
      runs.push_back(1);
  }
}

SortedTableau SortedTableau::certify(Filling f) {
  if (!f.shape().is_partition()) throw ShapeError("sorted tableaux have partition shape");
  if (!is_sorted_tableau(f)) throw ShapeError("filling is not a sorted tableau");
  return SortedTableau(std::move(f));
}

MPoly perm_t(const SortedTableau& s) {
  MPoly out = MPoly::one();
  for (const auto& [height, runs] : s.block_multiplicities()) {
    const unsigned total = std::accumulate(runs.begin(), runs.end(), 0u);
    out *= t_multinomial(total, runs);
  }
  return out;
}

MPoly sorted_tableau_weight(const SortedTableau& s) {
  Monomial m(0);
  m.t = static_cast<std::uint32_t>(inv(s.filling()));
  m.q = static_cast<std::uint32_t>(maj(s.filling()));
  return MPoly::term(m, Integer(1)) * perm_t(s);
}

namespace {

using Column = std::vector<Entry>;

// All n^h columns of height h, ascending under the column order.
std::vector<Column> ordered_columns(int h, int n) {
  std::vector<Column> cols;
  Column c(static_cast<std::size_t>(h), 1);
  while (true) {
    cols.push_back(c);
    std::size_t k = 0;
    for (; k < c.size(); ++k) {
      if (c[k] < n) {
        ++c[k];
        break;
      }
      c[k] = 1;
    }
    if (k == c.size()) break;
  }
  std::sort(cols.begin(), cols.end(),
            [](const Column& a, const Column& b) { return a != b && column_order_leq(a, b); });
  return cols;
}

struct HeightBlock {
  int height;
  int first_col;  // 1-based
  int count;
  std::vector<Column> columns;
};

}  // namespace

std::vector<SortedTableau> sorted_tableaux(const Diagram& shape, int n) {
  if (!shape.is_partition()) throw ShapeError("sorted tableaux have partition shape");
  if (n < 1) throw ArgumentError("alphabet must be nonempty");
  std::vector<HeightBlock> blocks;
  for (int c = 1; c <= shape.num_columns(); ++c) {
    const int h = shape.height(c);
    if (h == 0) continue;
    if (!blocks.empty() && blocks.back().height == h)
      ++blocks.back().count;
    else
      blocks.push_back({h, c, 1, ordered_columns(h, n)});
  }

  std::vector<SortedTableau> out;
  Filling f(shape, Basement::infinity());
  // choice[b][j] indexes blocks[b].columns, nondecreasing in j.
  std::vector<std::vector<std::size_t>> choice(blocks.size());

  auto recurse = [&](auto&& self, std::size_t b, int j, std::size_t lo) -> void {
    if (b == blocks.size()) {
      out.push_back(SortedTableau::certify(f));
      return;
    }
    const HeightBlock& blk = blocks[b];
    if (j == blk.count) {
      self(self, b + 1, 0, 0);
      return;
    }
    for (std::size_t i = lo; i < blk.columns.size(); ++i) {
      const Column& col = blk.columns[i];
      for (int r = 1; r <= blk.height; ++r) f.set({blk.first_col + j, r}, col[static_cast<std::size_t>(r - 1)]);
      self(self, b, j + 1, i);
    }
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

MPoly htilde_hhl(const Partition& lambda, int n) {
  require_partition(lambda);
  const auto nv = static_cast<std::size_t>(n);
  MPoly out(nv);
  for_each_filling(
      Diagram(lambda), n,
      [&](const Filling& f) {
        Monomial m(f.x_exponents(n), static_cast<std::uint32_t>(inv(f)), static_cast<std::uint32_t>(maj(f)));
        out.add_term(m, Integer(1));
      },
      Basement::infinity());
  return out;
}

MPoly htilde_compact(const Partition& lambda, int n) {
  const Diagram shape(conjugate(lambda));
  const auto nv = static_cast<std::size_t>(n);
  MPoly out(nv);
  for (const SortedTableau& s : sorted_tableaux(shape, n)) {
    Monomial xm(s.filling().x_exponents(n), 0, 0);
    out += MPoly::term(xm, Integer(1)) * sorted_tableau_weight(s).lifted(nv);
  }
  return out;
}

}  // namespace macpoly
