#include "flagkey/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace flagkey {

Tableau::Tableau(std::shared_ptr<const Shape> shape, std::vector<std::uint8_t> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_->cell_count())
    throw std::invalid_argument("tableau entry count does not match shape");
}

bool Tableau::is_semistandard() const {
  for (int i = 0; i < cell_count(); ++i) {
    if (entries_[i] < 1) return false;
    int l = shape_->left(i);
    if (l >= 0 && entries_[l] > entries_[i]) return false;
    int a = shape_->above(i);
    if (a >= 0 && entries_[a] >= entries_[i]) return false;
  }
  return true;
}

bool Tableau::respects(const std::vector<int>& row_bounds) const {
  const auto& cells = shape_->cells();
  for (int i = 0; i < cell_count(); ++i)
    if (entries_[i] > row_bounds[cells[i].row]) return false;
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  word.reserve(cell_count());
  for (int idx : shape_->reading_order()) word.push_back(entries_[idx]);
  return word;
}

Composition Tableau::weight(int n) const {
  std::vector<int> w(n, 0);
  for (auto v : entries_) {
    if (v >= 1 && v <= n) ++w[v - 1];
  }
  return Composition(std::move(w));
}

Tableau Tableau::with_entry(int cell_idx, int value) const {
  Tableau t = *this;
  t.entries_[cell_idx] = static_cast<std::uint8_t>(value);
  return t;
}

std::vector<Tableau> enumerate_tableaux(const std::shared_ptr<const Shape>& shape,
                                        int max_entry,
                                        const std::vector<int>& row_bounds) {
  if (max_entry < 1) throw std::invalid_argument("max_entry must be at least 1");
  int n = shape->cell_count();
  const auto& cells = shape->cells();
  std::vector<Tableau> out;
  std::vector<std::uint8_t> vals(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(shape, vals);
      return;
    }
    int lo = 1;
    int l = shape->left(i);
    if (l >= 0) lo = std::max(lo, static_cast<int>(vals[l]));
    int a = shape->above(i);
    if (a >= 0) lo = std::max(lo, vals[a] + 1);
    int hi = max_entry;
    if (!row_bounds.empty()) hi = std::min(hi, row_bounds[cells[i].row]);
    for (int v = lo; v <= hi; ++v) {
      vals[i] = static_cast<std::uint8_t>(v);
      self(self, i + 1);
    }
    vals[i] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<Tableau> enumerate_tableaux(const std::shared_ptr<const Shape>& shape,
                                        int max_entry, const std::optional<Flag>& flag) {
  std::vector<int> bounds;
  if (flag) bounds = shape->row_bounds(*flag);
  return enumerate_tableaux(shape, max_entry, bounds);
}

Polynomial character(const std::vector<Tableau>& tableaux, int total_vars) {
  std::map<Monomial, Int> acc;
  for (const auto& t : tableaux) {
    for (auto v : t.entries())
      if (v > total_vars)
        throw std::invalid_argument("character: entry exceeds variable count");
    acc[Monomial::from_exponents(t.weight(total_vars).parts())] += 1;
  }
  Polynomial p(total_vars);
  for (auto& [m, c] : acc) p.push_term_unchecked(m, std::move(c));
  return p;
}

Polynomial flagged_schur(const std::shared_ptr<const Shape>& shape, const Flag& flag,
                         int total_vars) {
  if (flag.size() < ((shape->abs_rows() + (shape->is_shuffle() ? 1 : 0)) /
                     (shape->is_shuffle() ? 2 : 1)))
    throw std::invalid_argument("flag shorter than the shape's row count");
  auto tabs = enumerate_tableaux(shape, std::min(flag.max_bound(), total_vars),
                                 shape->row_bounds(flag));
  return character(tabs, total_vars);
}

Polynomial flagged_schur(const SkewShape& shape, const Flag& flag, int total_vars) {
  return flagged_schur(Shape::make(shape), flag, total_vars);
}

}  // namespace flagkey
