#pragma once

#include <optional>

#include "flagkey/tableau.hpp"

namespace flagkey {

// Lowering operator f_i: pair entries i (closing) and i+1 (opening) in the
// reading word -- after removing column-paired entries on shuffle shapes --
// and raise the rightmost unmatched i to i+1. Returns nullopt for the
// paper's 0.
std::optional<Tableau> lower(const Tableau& t, int i);

// Raising operator e_i: partial inverse of lower; changes the leftmost
// unmatched i+1 to an i.
std::optional<Tableau> raise(const Tableau& t, int i);

// f_i^*: apply lower until the next application would vanish. Total.
Tableau lower_star(const Tableau& t, int i);
Tableau raise_star(const Tableau& t, int i);

// Chain of saturated lowering blocks F_{i,a} = f_i^* f_{i-1}^* ... f_a^*,
// applied left to right; within a block f_a^* acts first. a = 0 encodes the
// empty block. Consecutive equal indices across blocks are rejected at
// construction (the paper's convention declares them 0).
class OperatorChain {
 public:
  struct Block {
    int top = 0;    // i
    int bottom = 0; // a; 0 means the empty expression
  };

  OperatorChain() = default;
  explicit OperatorChain(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const;

 private:
  std::vector<Block> blocks_;
};

Tableau apply_chain(const Tableau& t, const OperatorChain& chain);

// Crystal graph on a set of tableaux closed under the operators, with
// directed lower edges; element order is deterministic (lexicographic on
// entries), so serialized graphs are reproducible.
struct CrystalGraph {
  std::shared_ptr<const Shape> shape;
  int max_entry = 0;
  std::vector<Tableau> elements;               // sorted by entries
  std::vector<std::vector<int>> lower_to;      // [elem][i-1] = index or -1
  std::vector<std::vector<int>> raise_to;      // inverse edges

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const Tableau& t) const;        // -1 if absent
};

// Connected component of t under raise/lower with entries bounded by
// max_entry.
CrystalGraph component(const Tableau& t, int max_entry);

// Graph on the full set of tableaux of the shape (all entries <= max_entry).
CrystalGraph full_crystal(const std::shared_ptr<const Shape>& shape, int max_entry);

// All tableaux in the (optionally flagged) set killed by every raise.
std::vector<Tableau> highest_weights(const std::shared_ptr<const Shape>& shape,
                                     int max_entry,
                                     const std::optional<Flag>& flag = std::nullopt);

}  // namespace flagkey
