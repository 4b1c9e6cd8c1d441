#include "flagkey/crystal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace flagkey {

namespace {

// Cell index of the entry f_i (lower=true) or e_i (lower=false) would move,
// or -1. Column-paired (i, i+1) pairs are removed first on shuffle shapes;
// matching is a single scan with a counter.
int op_target(const Tableau& t, int i, bool lower) {
  const Shape& sh = t.shape();
  std::vector<int> word_cells;
  word_cells.reserve(t.cell_count());
  if (sh.is_shuffle()) {
    std::vector<char> skip(t.cell_count(), 0);
    for (int c = 0; c < t.cell_count(); ++c) {
      if (t.entry(c) != i) continue;
      int b = sh.below(c);
      if (b >= 0 && t.entry(b) == i + 1) skip[c] = skip[b] = 1;
    }
    for (int c : sh.reading_order()) {
      int v = t.entry(c);
      if ((v == i || v == i + 1) && !skip[c]) word_cells.push_back(c);
    }
  } else {
    for (int c : sh.reading_order()) {
      int v = t.entry(c);
      if (v == i || v == i + 1) word_cells.push_back(c);
    }
  }
  if (lower) {
    // rightmost i unmatched by any i+1 to its left
    int open = 0, target = -1;
    for (int c : word_cells) {
      if (t.entry(c) == i + 1) {
        ++open;
      } else if (open > 0) {
        --open;
      } else {
        target = c;
      }
    }
    return target;
  }
  // leftmost i+1 unmatched by any i to its right
  int closings = 0, target = -1;
  for (auto it = word_cells.rbegin(); it != word_cells.rend(); ++it) {
    if (t.entry(*it) == i) {
      ++closings;
    } else if (closings > 0) {
      --closings;
    } else {
      target = *it;
    }
  }
  return target;
}

}  // namespace

std::optional<Tableau> lower(const Tableau& t, int i) {
  if (i < 1) throw std::invalid_argument("operator index must be positive");
  int c = op_target(t, i, true);
  if (c < 0) return std::nullopt;
  return t.with_entry(c, i + 1);
}

std::optional<Tableau> raise(const Tableau& t, int i) {
  if (i < 1) throw std::invalid_argument("operator index must be positive");
  int c = op_target(t, i, false);
  if (c < 0) return std::nullopt;
  return t.with_entry(c, i);
}

Tableau lower_star(const Tableau& t, int i) {
  Tableau cur = t;
  while (auto next = lower(cur, i)) cur = std::move(*next);
  return cur;
}

Tableau raise_star(const Tableau& t, int i) {
  Tableau cur = t;
  while (auto next = raise(cur, i)) cur = std::move(*next);
  return cur;
}

OperatorChain::OperatorChain(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  int prev_last = -1;  // last index applied by the previous nonempty block
  for (const auto& b : blocks_) {
    if (b.bottom == 0) continue;
    if (b.bottom < 0 || b.top < b.bottom)
      throw std::invalid_argument("operator chain block requires top >= bottom >= 0");
    if (b.bottom == prev_last)
      throw std::invalid_argument("operator chain repeats an index consecutively");
    prev_last = b.top;
  }
}

bool OperatorChain::empty() const {
  for (const auto& b : blocks_)
    if (b.bottom != 0) return false;
  return true;
}

Tableau apply_chain(const Tableau& t, const OperatorChain& chain) {
  Tableau cur = t;
  for (const auto& b : chain.blocks()) {
    if (b.bottom == 0) continue;
    for (int j = b.bottom; j <= b.top; ++j) cur = lower_star(cur, j);
  }
  return cur;
}

int CrystalGraph::index_of(const Tableau& t) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), t);
  if (it != elements.end() && *it == t) return static_cast<int>(it - elements.begin());
  return -1;
}

namespace {

CrystalGraph build_graph(std::shared_ptr<const Shape> shape, int max_entry,
                         std::vector<Tableau> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  CrystalGraph g;
  g.shape = std::move(shape);
  g.max_entry = max_entry;
  g.elements = std::move(elements);
  int n = g.size();
  g.lower_to.assign(n, std::vector<int>(std::max(0, max_entry - 1), -1));
  g.raise_to.assign(n, std::vector<int>(std::max(0, max_entry - 1), -1));
  for (int e = 0; e < n; ++e) {
    for (int i = 1; i < max_entry; ++i) {
      if (auto low = lower(g.elements[e], i)) {
        int to = g.index_of(*low);
        if (to >= 0) {
          g.lower_to[e][i - 1] = to;
          g.raise_to[to][i - 1] = e;
        }
      }
    }
  }
  return g;
}

}  // namespace

CrystalGraph component(const Tableau& t, int max_entry) {
  std::set<Tableau> seen;
  std::queue<Tableau> work;
  seen.insert(t);
  work.push(t);
  while (!work.empty()) {
    Tableau cur = work.front();
    work.pop();
    for (int i = 1; i < max_entry; ++i) {
      if (auto low = lower(cur, i)) {
        if (seen.insert(*low).second) work.push(*low);
      }
      if (auto high = raise(cur, i)) {
        if (seen.insert(*high).second) work.push(*high);
      }
    }
  }
  std::vector<Tableau> elems(seen.begin(), seen.end());
  return build_graph(t.shape_ptr(), max_entry, std::move(elems));
}

CrystalGraph full_crystal(const std::shared_ptr<const Shape>& shape, int max_entry) {
  return build_graph(shape, max_entry, enumerate_tableaux(shape, max_entry));
}

std::vector<Tableau> highest_weights(const std::shared_ptr<const Shape>& shape,
                                     int max_entry, const std::optional<Flag>& flag) {
  std::vector<Tableau> out;
  for (auto& t : enumerate_tableaux(shape, max_entry, flag)) {
    bool top = true;
    for (int i = 1; i < max_entry && top; ++i)
      if (raise(t, i)) top = false;
    if (top) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace flagkey
