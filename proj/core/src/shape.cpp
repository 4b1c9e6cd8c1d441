#include "flagkey/shape.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagkey {

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("skew shape requires inner contained in outer");
}

long long SkewShape::cell_count() const { return outer.total() - inner.total(); }

static std::vector<Cell> skew_cells(const SkewShape& s, int row_mult, int row_off,
                                    int col_mult, int col_off) {
  std::vector<Cell> cells;
  for (int i = 1; i <= s.outer.rows(); ++i) {
    for (int c = s.inner.part(i) + 1; c <= s.outer.part(i); ++c)
      cells.push_back({row_mult * i + row_off, col_mult * c + col_off});
  }
  return cells;
}

std::shared_ptr<const Shape> Shape::make(const SkewShape& s) {
  auto shape = std::make_shared<Shape>();
  shape->is_shuffle_ = false;
  shape->skew_ = s;
  shape->cells_ = skew_cells(s, 1, 0, 1, 0);
  shape->finish();
  return shape;
}

std::shared_ptr<const Shape> Shape::make(const ShuffleShape& s) {
  auto shape = std::make_shared<Shape>();
  shape->is_shuffle_ = true;
  shape->shuffle_ = s;
  shape->cells_ = skew_cells(s.first, 2, -1, 2, -1);
  auto second = skew_cells(s.second, 2, 0, 2, 0);
  shape->cells_.insert(shape->cells_.end(), second.begin(), second.end());
  shape->finish();
  return shape;
}

void Shape::finish() {
  std::sort(cells_.begin(), cells_.end());
  int n = static_cast<int>(cells_.size());
  cell_lookup_.reserve(n);
  for (int i = 0; i < n; ++i) {
    cell_lookup_.emplace_back(cells_[i].row * 100000 + cells_[i].col, i);
    abs_rows_ = std::max(abs_rows_, cells_[i].row);
  }
  int step = is_shuffle_ ? 2 : 1;
  left_.assign(n, -1);
  above_.assign(n, -1);
  below_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    left_[i] = cell_index(cells_[i].row, cells_[i].col - step);
    above_[i] = cell_index(cells_[i].row - step, cells_[i].col);
    below_[i] = cell_index(cells_[i].row + step, cells_[i].col);
  }
  reading_order_.resize(n);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (cells_[a].row != cells_[b].row) return cells_[a].row > cells_[b].row;
    return cells_[a].col < cells_[b].col;
  });
  reading_order_ = std::move(idx);
}

int Shape::cell_index(int row, int col) const {
  if (row < 1 || col < 1) return -1;
  int key = row * 100000 + col;
  auto it = std::lower_bound(cell_lookup_.begin(), cell_lookup_.end(),
                             std::make_pair(key, -1));
  if (it != cell_lookup_.end() && it->first == key) return it->second;
  return -1;
}

std::vector<int> Shape::row_bounds(const Flag& flag) const {
  std::vector<int> b(abs_rows_ + 1, 0);
  for (int r = 1; r <= abs_rows_; ++r)
    b[r] = flag.bound(is_shuffle_ ? (r + 1) / 2 : r);
  return b;
}

std::vector<int> Shape::row_bounds(const Flag& first_flag, const Flag& second_flag) const {
  if (!is_shuffle_)
    throw std::invalid_argument("two flags only apply to shuffle shapes");
  std::vector<int> b(abs_rows_ + 1, 0);
  for (int r = 1; r <= abs_rows_; ++r)
    b[r] = (r % 2 == 1) ? first_flag.bound((r + 1) / 2) : second_flag.bound(r / 2);
  return b;
}

}  // namespace flagkey
