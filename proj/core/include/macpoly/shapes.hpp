#pragma once

// Diagrams in French notation (column i has heights[i-1] cells, bottom
// justified), fillings with an optional basement row 0, and the tableau
// statistics built on them.

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "macpoly/error.hpp"

namespace macpoly {

using Entry = int;
inline constexpr Entry kInfinity = std::numeric_limits<Entry>::max();

// Weak composition; a partition when weakly decreasing and zero-free.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

struct Cell {
  int col = 1;  // 1-based
  int row = 1;  // 1-based; row 0 is the basement
  bool operator==(const Cell&) const = default;
};

class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<int> heights);

  const std::vector<int>& heights() const { return heights_; }
  int num_columns() const { return static_cast<int>(heights_.size()); }
  int height(int col) const { return heights_.at(col - 1); }
  int max_height() const;
  int size() const;
  bool contains(Cell s) const;
  bool is_partition() const;
  bool is_increasing() const;
  // Column by column, bottom to top.
  std::vector<Cell> cells() const;

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<int> heights_;
};

class Basement {
 public:
  enum class Kind { none, infinity, permutation };

  static Basement none() { return Basement(Kind::none, {}); }
  static Basement infinity() { return Basement(Kind::infinity, {}); }
  static Basement permutation(std::vector<Entry> entries);

  Kind kind() const { return kind_; }
  const std::vector<Entry>& entries() const { return entries_; }
  // Entry in row 0 under column col, if there is one.
  std::optional<Entry> at(int col) const;

 private:
  Basement(Kind k, std::vector<Entry> e) : kind_(k), entries_(std::move(e)) {}
  Kind kind_;
  std::vector<Entry> entries_;
};

class Filling {
 public:
  explicit Filling(Diagram shape, Basement basement = Basement::none());
  // columns[c] lists column c+1 bottom to top.
  Filling(const std::vector<std::vector<Entry>>& columns, Basement basement = Basement::none());

  const Diagram& shape() const { return shape_; }
  const Basement& basement() const { return basement_; }

  Entry at(Cell s) const { return data_[index(s)]; }
  void set(Cell s, Entry v) { data_[index(s)] = v; }
  // Row 0 reads the basement; missing cells give nullopt.
  std::optional<Entry> value(int col, int row) const;
  std::span<const Entry> column(int col) const;
  // Entries in Diagram::cells() order.
  const std::vector<Entry>& entries() const { return data_; }
  // Exponent of x_i is the number of cells holding i (entries <= n).
  std::vector<std::uint32_t> x_exponents(int n) const;

 private:
  std::size_t index(Cell s) const;

  Diagram shape_;
  Basement basement_;
  std::vector<std::size_t> offsets_;
  std::vector<Entry> data_;
};

struct CompositionStats {
  Composition inc;
  Composition dec;
  std::vector<Entry> beta;  // inc[i] == alpha[beta[i] - 1]
  Composition plus;
  int ell = 0;
  std::map<int, int> mult;
};

CompositionStats composition_stats(const Composition& alpha);
Partition conjugate(const Partition& lambda);
// Throws ShapeError unless lambda is weakly decreasing and zero-free.
void require_partition(const Partition& lambda);
Partition strip_zeros(const Composition& alpha);

int leg(const Diagram& shape, Cell s);
int arm_partition(const Diagram& shape, Cell s);
int arm_composition(const Diagram& shape, Cell s);

enum class Rotation { counterclockwise, clockwise, neither };
enum class TripleB { coinversion, not_coinversion };

// a = entry right of b in the same row, c = entry below b.
Rotation classify_triple_A(Entry a, Entry b, Entry c);
TripleB classify_triple_B(Entry a, Entry b, Entry c);
// A triple counts toward coinv unless it is counterclockwise.
inline bool is_coinversion(Entry a, Entry b, Entry c) {
  return classify_triple_A(a, b, c) != Rotation::counterclockwise;
}

int inv(const Filling& f);
int coinv_hhl(const Filling& f);
int total_triples(const Filling& f);
std::vector<Cell> des(const Filling& f);
int maj(const Filling& f);
int coinv_comp(const Filling& f);
bool is_nonattacking(const Filling& f);
bool is_ordered(const Filling& f);

using FillingPredicate = std::function<bool(const Filling&)>;
using FillingVisitor = std::function<void(const Filling&)>;

// Every assignment of {1..n} to the cells, first cell varying fastest.
void for_each_filling(const Diagram& shape, int alphabet_max, const FillingVisitor& visit,
                      const Basement& basement = Basement::none());
std::vector<Filling> enumerate_fillings(const Diagram& shape, int alphabet_max,
                                        const FillingPredicate& predicate = {},
                                        const Basement& basement = Basement::none());

struct NonattackingOptions {
  // Bottom-row entries under equal-height neighbours strictly decrease.
  bool ordered = false;
};

// Backtracking enumeration of nonattacking fillings (entries 1..n),
// including attacks against a permutation basement.
void for_each_nonattacking_filling(const Diagram& shape, int alphabet_max, const Basement& basement,
                                   const NonattackingOptions& options, const FillingVisitor& visit);

}  // namespace macpoly
