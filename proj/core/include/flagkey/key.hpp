#pragma once

#include <map>
#include <string>

#include "flagkey/polynomial.hpp"

namespace flagkey {

// Coefficients of a polynomial in the key basis {kappa_alpha}.
class KeyExpansion {
 public:
  using Map = std::map<Composition, Int>;

  KeyExpansion() = default;
  explicit KeyExpansion(Map terms);

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Int coefficient(const Composition& alpha) const;
  // Sum of c_alpha * kappa_alpha; reconstructs the expanded polynomial.
  Polynomial evaluate(int total_vars) const;

  bool operator==(const KeyExpansion& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;  // keys stored trimmed, values nonzero
};

// Demazure operator pi_i(p) = (x_i p - x_{i+1} s_i p) / (x_i - x_{i+1});
// the division is exact and is evaluated term by term in closed form.
Polynomial demazure_op(const Polynomial& p, int i);

// kappa_alpha in total_vars variables via pi-recursion from the dominant
// monomial; independent of the chosen ascent (property-tested).
Polynomial key_polynomial(const Composition& alpha, int total_vars);

// Exact expansion in the key basis by a degree-graded linear solve.
KeyExpansion key_expand(const Polynomial& p);

bool is_key_positive(const KeyExpansion& e);

}  // namespace flagkey
