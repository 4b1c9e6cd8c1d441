#pragma once

#include "flagkey/crystal.hpp"
#include "flagkey/key.hpp"

namespace flagkey {

// Subset of a crystal graph, the candidate Demazure crystal.
struct DemazureSubset {
  CrystalGraph ambient;
  std::vector<char> member;  // indexed like ambient.elements

  int member_count() const;
  std::vector<int> member_indices() const;
  bool is_member(const Tableau& t) const;
};

// A failing check carries the offending elements and parameters.
struct Witness {
  std::string note;
  std::vector<Tableau> tableaux;
  std::vector<int> params;
};

struct CheckOutcome {
  bool ok = true;
  std::optional<Witness> witness;
};

struct AxiomReport {
  CheckOutcome extremal;
  CheckOutcome ideal;
  CheckOutcome principal;
  CheckOutcome extension;
  CheckOutcome gluing;

  bool all_ok() const {
    return extremal.ok && ideal.ok && principal.ok && extension.ok && gluing.ok;
  }
};

// B_w(lambda) inside the crystal of SSYT(lambda) with entries <= n: the
// union of saturated lowering orbits along the word, rightmost letter first.
// Rejects non-reduced words.
DemazureSubset demazure_subset(const Partition& lambda, const std::vector<int>& word,
                               int n);

// Flagged tableaux of a shape as a subset of the full crystal.
DemazureSubset flagged_subset(const std::shared_ptr<const Shape>& shape, int max_entry,
                              const Flag& flag);
DemazureSubset flagged_subset(const std::shared_ptr<const Shape>& shape, int max_entry,
                              const std::vector<int>& row_bounds);

// Every i-string of the ambient graph meets X in nothing, everything, or
// only its top.
CheckOutcome check_extremal(const DemazureSubset& X);

// Exhaustive test of the ideal implication over extremal pairs joined by
// raising-star sequences; each step must strictly act, which bounds the
// search by the entry sum. Intended for small ambient graphs.
CheckOutcome check_ideal_direct(const DemazureSubset& X);

// The decomposition of the ideal property: ascending- and descending-chain
// truncation plus the gluing property.
CheckOutcome check_ideal_decomposed(const DemazureSubset& X);

// Each component of X has an extremal element whose weight is the dominance
// minimum over the component's extremal members.
CheckOutcome check_principal(const DemazureSubset& X);

CheckOutcome check_extension(const DemazureSubset& X);
CheckOutcome check_gluing(const DemazureSubset& X);

AxiomReport run_axiom_checks(const DemazureSubset& X);

// Greedy lowest-weight walk inside a connected member set: for n down to 1
// picks the smallest a with F_{n,a}(cur) in X and different from cur.
struct GreedyResult {
  int element = -1;            // ambient index of the lowest weight element
  OperatorChain chain;         // blocks in application order (n down to 1)
  std::vector<Composition> intermediate_weights;  // after each nonempty block
};
GreedyResult greedy_lowest(const CrystalGraph& ambient, const std::vector<char>& member,
                           int start);

// Key indices of the components of a raise-closed set.
struct ComponentKey {
  Partition highest_weight;
  Composition lowest_weight;
  bool principal_ok = true;
  std::vector<int> members;  // ambient indices
};
std::vector<ComponentKey> decompose(const DemazureSubset& X);

// Components of X under edges with both endpoints inside X.
std::vector<std::vector<int>> member_components(const DemazureSubset& X);

}  // namespace flagkey
