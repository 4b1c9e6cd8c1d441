#pragma once

#include "flagkey/demazure.hpp"
#include "flagkey/jacobi_trudi.hpp"
#include "flagkey/temperley_lieb.hpp"

namespace flagkey {

// Pair of skew shapes entering the product and log-concavity pipelines.
struct SkewPair {
  SkewShape first;
  SkewShape second;

  // lambda_i != nu_i for every row of either shape
  bool outer_parts_distinct() const;
  // lambda_i >= nu_{i+1} and nu_i >= lambda_{i+1}
  bool outer_interlacing() const;
  bool satisfies_product_hypotheses() const {
    return outer_parts_distinct() && outer_interlacing() &&
           first.outer.is_strict() && second.outer.is_strict();
  }
};

struct PositivityReport {
  KeyExpansion expansion;
  bool key_positive = true;
  bool hypotheses_hold = true;  // the relevant theorem's hypotheses
};

// Key expansion of Imm_tau of the generalized flagged Jacobi-Trudi matrix;
// key nonnegative whenever lambda is strict and b nondecreasing.
PositivityReport immanant_key_expansion(const Partition& lambda, const Partition& mu,
                                        const Flag& b, const TLDiagram& tau,
                                        int total_vars);

struct ProductResult {
  KeyExpansion direct;            // key_expand of the polynomial product
  KeyExpansion crystal;           // sum of kappa over shuffle components
  bool paths_agree = false;
  bool hypotheses_hold = false;
  std::vector<ComponentKey> components;
};

// Both routes to the key expansion of s^b_{first} * s^b_{second}; the
// crystal route decomposes the flagged shuffle tableaux. When the
// hypotheses hold the two must agree (checked, reported).
ProductResult product_key_expansion(const SkewPair& pair, const Flag& b, int total_vars);

SkewShape shape_join(const SkewShape& a, const SkewShape& b);
SkewShape shape_meet(const SkewShape& a, const SkewShape& b);

// Key expansion of s^b_{join} s^b_{meet} - s^b_{first} s^b_{second}.
PositivityReport logconcavity_difference(const SkewPair& pair, const Flag& b,
                                         int total_vars);

// The 2n-row data of the product proof: lambda', mu' interleave maxima and
// minima with staircase offsets, b' doubles the flag. lambda' is strict
// exactly when the product hypotheses hold.
struct DoubledData {
  Partition lambda;
  Partition mu;
  Flag flag;
  bool strict = false;
  std::vector<int> first_rows;  // rows of lambda' carrying the first shape's outer
  std::vector<int> first_cols;  // columns of mu' carrying the first shape's inner
};
DoubledData doubled_construction(const SkewPair& pair, const Flag& b);

// Minimal-length permutation w with apply_perm(w, sorted(alpha)) = alpha.
Permutation key_index_witness(const Composition& alpha);

}  // namespace flagkey
