#pragma once

#include <memory>
#include <vector>

#include "flagkey/combinat.hpp"

namespace flagkey {

struct Cell {
  int row = 0;  // 1-based absolute coordinates
  int col = 0;
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in);
  long long cell_count() const;
  int rows() const { return outer.rows(); }
  bool operator==(const SkewShape& o) const {
    return outer == o.outer && inner == o.inner;
  }
};

// Row-interleaving of two skew shapes: row i of the first occupies absolute
// row 2i-1 (column c at 2c-1), row i of the second absolute row 2i (column c
// at 2c). Odd columns belong to the first shape, even to the second.
struct ShuffleShape {
  SkewShape first;
  SkewShape second;

  ShuffleShape() = default;
  ShuffleShape(SkewShape a, SkewShape b) : first(std::move(a)), second(std::move(b)) {}
  long long cell_count() const { return first.cell_count() + second.cell_count(); }
  bool operator==(const ShuffleShape& o) const {
    return first == o.first && second == o.second;
  }
};

// Unified geometry with precomputed neighbor structure. Tableaux hold a
// shared_ptr to one of these.
class Shape {
 public:
  static std::shared_ptr<const Shape> make(const SkewShape& s);
  static std::shared_ptr<const Shape> make(const ShuffleShape& s);

  bool is_shuffle() const { return is_shuffle_; }
  const SkewShape& skew() const { return skew_; }
  const ShuffleShape& shuffle() const { return shuffle_; }

  int cell_count() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }  // row-major sorted
  int cell_index(int row, int col) const;                    // -1 if absent
  int abs_rows() const { return abs_rows_; }

  // Index of the same-shape neighbor, or -1: left is (r, c-step), above is
  // (r-step, c), below is (r+step, c), with step 2 on shuffle shapes.
  int left(int idx) const { return left_[idx]; }
  int above(int idx) const { return above_[idx]; }
  int below(int idx) const { return below_[idx]; }

  // Cell indices in reading order: bottom row to top, left to right.
  const std::vector<int>& reading_order() const { return reading_order_; }

  // Per-row entry bounds from a flag. On shuffle shapes absolute row j is
  // bounded by flag[ceil(j/2)] (the doubled flag); an interlacing second
  // flag, when given, bounds the even rows instead.
  std::vector<int> row_bounds(const Flag& flag) const;
  std::vector<int> row_bounds(const Flag& first_flag, const Flag& second_flag) const;

 private:
  void finish();

  bool is_shuffle_ = false;
  SkewShape skew_;
  ShuffleShape shuffle_;
  int abs_rows_ = 0;
  std::vector<Cell> cells_;
  std::vector<int> left_, above_, below_;
  std::vector<int> reading_order_;
  std::vector<std::pair<int, int>> cell_lookup_;  // (packed rc, index), sorted
};

}  // namespace flagkey
