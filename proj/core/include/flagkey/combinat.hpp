#pragma once

#include <string>
#include <vector>

namespace flagkey {

// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
// permitted and ignored by comparisons.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // part(i) is 0 beyond the stored length (1-based).
  int part(int i) const;
  int size() const { return static_cast<int>(parts_.size()); }
  int rows() const;          // number of positive parts
  long long total() const;   // |lambda|
  bool is_strict() const;    // strictly decreasing on the positive parts
  bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i

  const std::vector<int>& parts() const { return parts_; }
  Partition trimmed() const;  // drop trailing zeros
  Partition padded(int n) const;

  bool operator==(const Partition& o) const;
  bool operator<(const Partition& o) const;  // lexicographic on trimmed parts

 private:
  std::vector<int> parts_;
};

// Arbitrary sequence of nonnegative integers (a weak composition).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int part(int i) const;  // 1-based, 0 beyond length
  int size() const { return static_cast<int>(parts_.size()); }
  long long total() const;
  const std::vector<int>& parts() const { return parts_; }
  Composition trimmed() const;
  Composition padded(int n) const;
  Partition sorted_decreasing() const;

  bool operator==(const Composition& o) const;
  bool operator<(const Composition& o) const;  // lexicographic on trimmed parts

 private:
  std::vector<int> parts_;
};

// Nondecreasing positive row bounds.
class Flag {
 public:
  Flag() = default;
  explicit Flag(std::vector<int> bounds);

  int bound(int i) const;  // 1-based; last bound repeats beyond the end
  int size() const { return static_cast<int>(bounds_.size()); }
  int max_bound() const;
  const std::vector<int>& bounds() const { return bounds_; }

  bool operator==(const Flag& o) const { return bounds_ == o.bounds_; }

 private:
  std::vector<int> bounds_;
};

// Element of the symmetric group S_n, stored in one-line notation.
// Words [i1,...,ik] denote s_{i1} ∘ ... ∘ s_{ik}; the rightmost letter acts
// first, matching apply_perm below.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // s_i in S_n
  static Permutation from_word(const std::vector<int>& word, int n);

  int n() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  Permutation compose(const Permutation& rhs) const;  // (*this)(rhs(i))
  int inversions() const;
  bool is_identity() const;

  // Canonical bubble-sort reduced word: repeatedly moves the largest
  // misplaced value to its position. Length equals inversions().
  std::vector<int> reduced_word() const;
  // Every reduced word; exponential, intended for small n.
  std::vector<std::vector<int>> all_reduced_words() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

// Bruhat order on S_n (same n required).
bool bruhat_leq(const Permutation& u, const Permutation& w);

// Dominance order via prefix sums; vectors with unequal totals are
// incomparable (false both ways). Shorter vector padded with zeros.
bool dominance_leq(const Composition& v, const Composition& w);

// Position action pinned by: output[w(i)] = v[i]. Composition of
// applications matches word order right-to-left, so
// apply_perm(from_word({1,2}), v) applies s_2 first, then s_1.
Composition apply_perm(const Permutation& w, const Composition& v);

bool is_reduced_word(const std::vector<int>& word, int n);

// Text encodings: comma-separated integers, e.g. "7,7,7,5".
std::vector<int> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<int>& v);

std::vector<Permutation> all_permutations(int n);
std::vector<Partition> partitions_up_to(int max_total, int max_rows);

}  // namespace flagkey
