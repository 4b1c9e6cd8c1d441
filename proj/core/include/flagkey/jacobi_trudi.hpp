#pragma once

#include "flagkey/polynomial.hpp"

namespace flagkey {

// n x n grid of complete homogeneous polynomials, row i in b_i variables.
struct JTMatrix {
  std::vector<std::vector<Polynomial>> entries;
  Partition lambda;
  Partition mu;
  Flag flag;

  int size() const { return static_cast<int>(entries.size()); }
};

// Wachs form: entry(i,j) = h_{lambda_i - mu_j - i + j} in the first b_i
// variables, so the full determinant is the flagged skew Schur polynomial.
JTMatrix flagged_jt_matrix(const Partition& lambda, const Partition& mu, const Flag& b,
                           int total_vars);

// Literal generalized form: entry(i,j) = h_{lambda_i - mu_j} in b_i
// variables. This is the matrix whose Temperley-Lieb immanants the key
// positivity results are about; its complementary minors factor products of
// flagged Schur polynomials under the doubled construction.
JTMatrix generalized_jt_matrix(const Partition& lambda, const Partition& mu,
                               const Flag& b, int total_vars);

// Exact determinant of a polynomial matrix (column-subset dynamic program).
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m);

// Minor with the given 1-based row and column sets (|I| = |J|).
Polynomial minor(const JTMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols);
Polynomial minor(const std::vector<std::vector<Polynomial>>& m,
                 const std::vector<int>& rows, const std::vector<int>& cols);

// Determinantal flagged skew Schur polynomial; equals the tableau-theoretic
// flagged_schur (Wachs identity, asserted by the test suite).
Polynomial flagged_skew_schur_det(const Partition& lambda, const Partition& mu,
                                  const Flag& b, int total_vars);

}  // namespace flagkey
