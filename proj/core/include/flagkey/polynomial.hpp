#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagkey/combinat.hpp"
#include "flagkey/ints.hpp"

namespace flagkey {

// Exponent vector packed into a u64, x1 in the most significant byte, so the
// integer order is the lexicographic order on (e1, ..., e8).
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExponent = 255;

  Monomial() = default;
  static Monomial from_exponents(const std::vector<int>& exps);

  int exponent(int var) const {  // var is 1-based
    return static_cast<int>((bits_ >> (8 * (kMaxVars - var))) & 0xff);
  }
  Monomial with_exponent(int var, int e) const;
  Monomial times(const Monomial& o) const;
  int degree() const;
  std::vector<int> exponents(int nvars) const;

  std::uint64_t raw() const { return bits_; }
  bool operator==(const Monomial& o) const { return bits_ == o.bits_; }
  bool operator<(const Monomial& o) const { return bits_ < o.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Sparse exact-integer multivariate polynomial over a fixed variable count.
// Terms are kept sorted ascending by packed exponent; no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Int>;

  Polynomial() = default;
  explicit Polynomial(int nvars);
  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial one(int nvars);
  static Polynomial constant(Int c, int nvars);
  static Polynomial monomial(const std::vector<int>& exps, Int coeff, int nvars);
  static Polynomial variable(int var, int nvars);

  int var_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Int coefficient(const Monomial& m) const;
  int max_exponent() const;  // over all variables and terms
  long long degree() const;  // total degree; -1 for the zero polynomial

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Int& k) const;
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical text form, terms in descending lexicographic exponent order:
  // "+1*x1^2*x2 -3*x2^3"; the zero polynomial prints "0".
  std::string canonical_text() const;
  // Human form: unit coefficients dropped, e.g. "x1^2*x2 - 3*x2^3".
  std::string pretty_text() const;
  static Polynomial parse(const std::string& text, int nvars);

  // Used by construction code that appends terms in ascending order.
  void push_term_unchecked(Monomial m, Int c);

 private:
  void check_vars(const Polynomial& o) const;
  int nvars_ = 0;
  std::vector<Term> terms_;
};

// Variable permutation: exponent vectors move by output[w(i)] = input[i].
Polynomial act(const Permutation& w, const Polynomial& p);

// Complete homogeneous polynomial h_d in x_1..x_k inside total_vars
// variables; h_0 = 1 and h_d = 0 for d < 0.
Polynomial complete_homogeneous(int degree, int num_vars, int total_vars);

}  // namespace flagkey
