#include "macpoly/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace macpoly {

Diagram::Diagram(std::vector<int> heights) : heights_(std::move(heights)) {
  for (int h : heights_)
    if (h < 0) throw ShapeError("column heights must be nonnegative");
}

int Diagram::max_height() const {
  return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
}

int Diagram::size() const { return std::accumulate(heights_.begin(), heights_.end(), 0); }

bool Diagram::contains(Cell s) const {
  return s.col >= 1 && s.col <= num_columns() && s.row >= 1 && s.row <= height(s.col);
}

bool Diagram::is_partition() const {
  return std::is_sorted(heights_.begin(), heights_.end(), std::greater<>());
}

bool Diagram::is_increasing() const { return std::is_sorted(heights_.begin(), heights_.end()); }

std::vector<Cell> Diagram::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int c = 1; c <= num_columns(); ++c)
    for (int r = 1; r <= height(c); ++r) out.push_back({c, r});
  return out;
}

Basement Basement::permutation(std::vector<Entry> entries) {
  std::vector<Entry> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<Entry>(i + 1)) throw ArgumentError("basement must be a permutation of 1..n");
  return Basement(Kind::permutation, std::move(entries));
}

std::optional<Entry> Basement::at(int col) const {
  switch (kind_) {
    case Kind::none:
      return std::nullopt;
    case Kind::infinity:
      return kInfinity;
    case Kind::permutation:
      if (col < 1 || col > static_cast<int>(entries_.size())) return std::nullopt;
      return entries_[static_cast<std::size_t>(col - 1)];
  }
  return std::nullopt;
}

Filling::Filling(Diagram shape, Basement basement)
    : shape_(std::move(shape)), basement_(std::move(basement)) {
  if (basement_.kind() == Basement::Kind::permutation &&
      static_cast<int>(basement_.entries().size()) != shape_.num_columns())
    throw ShapeError("basement length must equal the number of columns");
  offsets_.reserve(shape_.heights().size() + 1);
  std::size_t off = 0;
  for (int h : shape_.heights()) {
    offsets_.push_back(off);
    off += static_cast<std::size_t>(h);
  }
  offsets_.push_back(off);
  data_.assign(off, 0);
}

namespace {
Diagram heights_of(const std::vector<std::vector<Entry>>& columns) {
  std::vector<int> h;
  h.reserve(columns.size());
  for (const auto& c : columns) h.push_back(static_cast<int>(c.size()));
  return Diagram(std::move(h));
}
}  // namespace

Filling::Filling(const std::vector<std::vector<Entry>>& columns, Basement basement)
    : Filling(heights_of(columns), std::move(basement)) {
  std::size_t k = 0;
  for (const auto& c : columns)
    for (Entry v : c) data_[k++] = v;
}

std::size_t Filling::index(Cell s) const {
  if (!shape_.contains(s)) throw ShapeError("cell outside the diagram");
  return offsets_[static_cast<std::size_t>(s.col - 1)] + static_cast<std::size_t>(s.row - 1);
}

std::optional<Entry> Filling::value(int col, int row) const {
  if (col < 1 || col > shape_.num_columns()) return std::nullopt;
  if (row == 0) return basement_.at(col);
  if (row < 0 || row > shape_.height(col)) return std::nullopt;
  return data_[offsets_[static_cast<std::size_t>(col - 1)] + static_cast<std::size_t>(row - 1)];
}

std::span<const Entry> Filling::column(int col) const {
  const auto c = static_cast<std::size_t>(col - 1);
  return std::span<const Entry>(data_).subspan(offsets_.at(c), offsets_.at(c + 1) - offsets_.at(c));
}

std::vector<std::uint32_t> Filling::x_exponents(int n) const {
  std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
  for (Entry v : data_) {
    if (v < 1 || v > n) throw ArgumentError("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    ++e[static_cast<std::size_t>(v - 1)];
  }
  return e;
}

CompositionStats composition_stats(const Composition& alpha) {
  CompositionStats s;
  const std::size_t n = alpha.size();
  for (int a : alpha)
    if (a < 0) throw ArgumentError("composition parts must be nonnegative");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // Equal parts in reverse position order gives the longest sorting permutation.
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return alpha[i] != alpha[j] ? alpha[i] < alpha[j] : i > j;
  });
  for (std::size_t i : idx) {
    s.inc.push_back(alpha[i]);
    s.beta.push_back(static_cast<Entry>(i + 1));
  }
  s.dec.assign(s.inc.rbegin(), s.inc.rend());
  for (int a : alpha) {
    if (a > 0) {
      s.plus.push_back(a);
      ++s.mult[a];
    }
  }
  s.ell = static_cast<int>(s.plus.size());
  return s;
}

void require_partition(const Partition& lambda) {
  if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
    throw ShapeError("partition parts must be weakly decreasing");
  for (int p : lambda)
    if (p <= 0) throw ShapeError("partition parts must be positive");
}

Partition strip_zeros(const Composition& alpha) {
  Partition out;
  for (int a : alpha)
    if (a > 0) out.push_back(a);
  return out;
}

Partition conjugate(const Partition& lambda) {
  require_partition(lambda);
  Partition out;
  if (lambda.empty()) return out;
  for (int j = 1; j <= lambda.front(); ++j)
    out.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [j](int p) { return p >= j; })));
  return out;
}

int leg(const Diagram& shape, Cell s) {
  if (!shape.contains(s)) throw ShapeError("cell outside the diagram");
  return shape.height(s.col) - s.row;
}

int arm_partition(const Diagram& shape, Cell s) {
  if (!shape.contains(s)) throw ShapeError("cell outside the diagram");
  int arm = 0;
  for (int v = s.col + 1; v <= shape.num_columns(); ++v)
    if (shape.height(v) >= s.row) ++arm;
  return arm;
}

int arm_composition(const Diagram& shape, Cell s) {
  if (!shape.contains(s)) throw ShapeError("cell outside the diagram");
  const int own = shape.height(s.col);
  int arm = 0;
  for (int v = s.col + 1; v <= shape.num_columns(); ++v)
    if (shape.height(v) >= s.row && shape.height(v) <= own) ++arm;
  if (s.row > 1)
    for (int v = 1; v < s.col; ++v)
      if (shape.height(v) >= s.row - 1 && shape.height(v) < own) ++arm;
  return arm;
}

Rotation classify_triple_A(Entry a, Entry b, Entry c) {
  if ((a < b && b <= c) || (c < a && a < b) || (b <= c && c < a)) return Rotation::counterclockwise;
  if ((a > b && b > c) || (c > a && a > b) || (b > c && c > a)) return Rotation::clockwise;
  return Rotation::neither;
}

TripleB classify_triple_B(Entry a, Entry b, Entry c) {
  return is_coinversion(a, b, c) ? TripleB::coinversion : TripleB::not_coinversion;
}

namespace {

enum class TripleKind { A, B };

// Calls visit(a, b, c, kind) for every triple present in the filling. Type A
// covers column pairs u < v with the left column at least as tall; type B
// covers u > v with the right column (u) strictly taller. Row-0 cells come
// from the basement: an infinity basement only supplies degenerate type-A
// triples.
template <class Visit>
void for_each_triple(const Filling& f, bool with_type_b, Visit&& visit) {
  const Diagram& sh = f.shape();
  const int ncols = sh.num_columns();
  const auto kind = f.basement().kind();
  for (int u = 1; u <= ncols; ++u) {
    for (int v = u + 1; v <= ncols; ++v) {
      if (sh.height(u) < sh.height(v)) continue;
      for (int r = 1; r <= sh.height(v); ++r) {
        auto c = f.value(u, r - 1);
        if (!c) continue;
        visit(f.at({v, r}), f.at({u, r}), *c, TripleKind::A);
      }
    }
  }
  if (!with_type_b) return;
  for (int u = 1; u <= ncols; ++u) {
    for (int v = 1; v < u; ++v) {
      if (sh.height(u) <= sh.height(v)) continue;
      for (int r = 1; r <= sh.height(u); ++r) {
        if (r - 1 > sh.height(v)) break;
        if (r == 1 && kind != Basement::Kind::permutation) continue;
        auto a = f.value(v, r - 1);
        auto c = f.value(u, r - 1);
        if (!a || !c) continue;
        visit(*a, f.at({u, r}), *c, TripleKind::B);
      }
    }
  }
}

// The statistics of the symmetric setting read row 0 as infinity.
Filling with_infinity_basement(const Filling& f) {
  if (!f.shape().is_partition()) throw ShapeError("inv/coinv_hhl need a partition shape");
  if (f.basement().kind() == Basement::Kind::infinity) return f;
  if (f.basement().kind() == Basement::Kind::permutation)
    throw ShapeError("inv/coinv_hhl use the infinity basement");
  Filling g(f.shape(), Basement::infinity());
  for (const Cell& s : f.shape().cells()) g.set(s, f.at(s));
  return g;
}

}  // namespace

int inv(const Filling& f) {
  const Filling g = with_infinity_basement(f);
  int count = 0;
  for_each_triple(g, false, [&](Entry a, Entry b, Entry c, TripleKind) {
    if (classify_triple_A(a, b, c) == Rotation::counterclockwise) ++count;
  });
  return count;
}

int total_triples(const Filling& f) {
  const Filling g = with_infinity_basement(f);
  int count = 0;
  for_each_triple(g, false, [&](Entry, Entry, Entry, TripleKind) { ++count; });
  return count;
}

int coinv_hhl(const Filling& f) { return total_triples(f) - inv(f); }

int coinv_comp(const Filling& f) {
  int count = 0;
  for_each_triple(f, true, [&](Entry a, Entry b, Entry c, TripleKind) {
    if (is_coinversion(a, b, c)) ++count;
  });
  return count;
}

std::vector<Cell> des(const Filling& f) {
  std::vector<Cell> out;
  const bool basement_descents = f.basement().kind() == Basement::Kind::permutation;
  for (const Cell& s : f.shape().cells()) {
    if (s.row == 1 && !basement_descents) continue;
    if (f.at(s) > *f.value(s.col, s.row - 1)) out.push_back(s);
  }
  return out;
}

int maj(const Filling& f) {
  int total = 0;
  for (const Cell& s : des(f)) total += leg(f.shape(), s) + 1;
  return total;
}

bool is_nonattacking(const Filling& f) {
  const Diagram& sh = f.shape();
  const int ncols = sh.num_columns();
  const int top = sh.max_height();
  for (int r = 1; r <= top; ++r) {
    for (int u = 1; u <= ncols; ++u) {
      auto a = f.value(u, r);
      if (!a) continue;
      for (int v = u + 1; v <= ncols; ++v) {
        auto b = f.value(v, r);
        if (b && *a == *b) return false;
      }
      // The row-r cell attacks row r-1 cells strictly to its left.
      for (int v = 1; v < u; ++v) {
        auto b = f.value(v, r - 1);
        if (b && *a == *b) return false;
      }
    }
  }
  return true;
}

bool is_ordered(const Filling& f) {
  const Diagram& sh = f.shape();
  if (!sh.is_increasing()) throw ShapeError("ordered fillings live on weakly increasing shapes");
  for (int c = 1; c < sh.num_columns(); ++c) {
    if (sh.height(c) == 0 || sh.height(c) != sh.height(c + 1)) continue;
    if (f.at({c, 1}) <= f.at({c + 1, 1})) return false;
  }
  return true;
}

void for_each_filling(const Diagram& shape, int alphabet_max, const FillingVisitor& visit,
                      const Basement& basement) {
  if (alphabet_max < 1) throw ArgumentError("alphabet must be nonempty");
  const std::vector<Cell> cells = shape.cells();
  Filling f(shape, basement);
  for (const Cell& s : cells) f.set(s, 1);
  while (true) {
    visit(f);
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      const Entry v = f.at(cells[k]);
      if (v < alphabet_max) {
        f.set(cells[k], v + 1);
        break;
      }
      f.set(cells[k], 1);
    }
    if (k == cells.size()) return;
  }
}

std::vector<Filling> enumerate_fillings(const Diagram& shape, int alphabet_max,
                                        const FillingPredicate& predicate, const Basement& basement) {
  std::vector<Filling> out;
  for_each_filling(
      shape, alphabet_max,
      [&](const Filling& f) {
        if (!predicate || predicate(f)) out.push_back(f);
      },
      basement);
  return out;
}

namespace {

class NonattackingSearch {
 public:
  NonattackingSearch(const Diagram& shape, int n, const Basement& basement, const NonattackingOptions& opts,
                     const FillingVisitor& visit)
      : shape_(shape), n_(n), opts_(opts), visit_(visit), f_(shape, basement) {
    for (int r = 1; r <= shape.max_height(); ++r)
      for (int c = 1; c <= shape.num_columns(); ++c)
        if (shape.height(c) >= r) order_.push_back({c, r});
  }

  void run() { place(0); }

 private:
  bool allowed(Cell s, Entry v) const {
    for (int c = 1; c < s.col; ++c)
      if (shape_.height(c) >= s.row && f_.at({c, s.row}) == v) return false;
    for (int c = 1; c < s.col; ++c) {
      auto below = f_.value(c, s.row - 1);
      if (below && *below == v) return false;
    }
    if (opts_.ordered && s.row == 1 && s.col > 1 && shape_.height(s.col - 1) == shape_.height(s.col) &&
        f_.at({s.col - 1, 1}) <= v)
      return false;
    return true;
  }

  void place(std::size_t k) {
    if (k == order_.size()) {
      visit_(f_);
      return;
    }
    const Cell s = order_[k];
    for (Entry v = 1; v <= n_; ++v) {
      if (!allowed(s, v)) continue;
      f_.set(s, v);
      place(k + 1);
    }
  }

  const Diagram& shape_;
  int n_;
  NonattackingOptions opts_;
  const FillingVisitor& visit_;
  Filling f_;
  std::vector<Cell> order_;
};

}  // namespace

void for_each_nonattacking_filling(const Diagram& shape, int alphabet_max, const Basement& basement,
                                   const NonattackingOptions& options, const FillingVisitor& visit) {
  if (alphabet_max < 1) throw ArgumentError("alphabet must be nonempty");
  if (options.ordered && !shape.is_increasing())
    throw ShapeError("ordered fillings live on weakly increasing shapes");
  NonattackingSearch(shape, alphabet_max, basement, options, visit).run();
}

}  // namespace macpoly
