#pragma once

#include <cstdint>
#include <optional>

#include "flagkey/polynomial.hpp"
#include "flagkey/shape.hpp"

namespace flagkey {

// Semistandard filling of a skew or shuffle shape. Entries are stored in the
// shape's row-major cell order; copies share the Shape.
class Tableau {
 public:
  Tableau() = default;
  Tableau(std::shared_ptr<const Shape> shape, std::vector<std::uint8_t> entries);

  const Shape& shape() const { return *shape_; }
  const std::shared_ptr<const Shape>& shape_ptr() const { return shape_; }
  int entry(int cell_idx) const { return entries_[cell_idx]; }
  const std::vector<std::uint8_t>& entries() const { return entries_; }
  int cell_count() const { return static_cast<int>(entries_.size()); }

  // Rows weakly increase, same-shape columns strictly increase.
  bool is_semistandard() const;
  bool respects(const std::vector<int>& row_bounds) const;

  std::vector<int> reading_word() const;  // bottom to top, left to right
  Composition weight(int n) const;        // multiplicities of 1..n

  bool operator==(const Tableau& o) const { return entries_ == o.entries_; }
  bool operator<(const Tableau& o) const { return entries_ < o.entries_; }

  Tableau with_entry(int cell_idx, int value) const;

 private:
  std::shared_ptr<const Shape> shape_;
  std::vector<std::uint8_t> entries_;
};

// Exhaustive, duplicate-free, in row-major lexicographic order on entries.
// An empty flag means unflagged.
std::vector<Tableau> enumerate_tableaux(const std::shared_ptr<const Shape>& shape,
                                        int max_entry,
                                        const std::optional<Flag>& flag = std::nullopt);
std::vector<Tableau> enumerate_tableaux(const std::shared_ptr<const Shape>& shape,
                                        int max_entry,
                                        const std::vector<int>& row_bounds);

// Sum of x^{wt(T)} over the flagged set; with flag (n,...,n) this is the
// (skew) Schur polynomial in n variables.
Polynomial flagged_schur(const std::shared_ptr<const Shape>& shape, const Flag& flag,
                         int total_vars);
Polynomial flagged_schur(const SkewShape& shape, const Flag& flag, int total_vars);

// Generating polynomial of an arbitrary set of tableaux.
Polynomial character(const std::vector<Tableau>& tableaux, int total_vars);

}  // namespace flagkey
