#include "flagkey/applications.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagkey {

bool SkewPair::outer_parts_distinct() const {
  int rows = std::max(first.outer.rows(), second.outer.rows());
  for (int i = 1; i <= rows; ++i)
    if (first.outer.part(i) == second.outer.part(i)) return false;
  return true;
}

bool SkewPair::outer_interlacing() const {
  int rows = std::max(first.outer.rows(), second.outer.rows()) + 1;
  for (int i = 1; i <= rows; ++i) {
    if (first.outer.part(i) < second.outer.part(i + 1)) return false;
    if (second.outer.part(i) < first.outer.part(i + 1)) return false;
  }
  return true;
}

PositivityReport immanant_key_expansion(const Partition& lambda, const Partition& mu,
                                        const Flag& b, const TLDiagram& tau,
                                        int total_vars) {
  int n = std::max(lambda.rows(), mu.rows());
  if (n != tau.strands())
    throw std::invalid_argument(
        "immanant: diagram strand count must match the partition length");
  JTMatrix m = generalized_jt_matrix(lambda, mu, b, total_vars);
  PositivityReport r;
  r.expansion = key_expand(tl_immanant(tau, m.entries));
  r.key_positive = is_key_positive(r.expansion);
  r.hypotheses_hold = lambda.is_strict();
  return r;
}

ProductResult product_key_expansion(const SkewPair& pair, const Flag& b,
                                    int total_vars) {
  if (total_vars < b.max_bound())
    throw std::invalid_argument("product: total_vars must cover the flag bounds");
  ProductResult res;
  res.hypotheses_hold = pair.satisfies_product_hypotheses();

  Polynomial direct = flagged_schur(pair.first, b, total_vars) *
                      flagged_schur(pair.second, b, total_vars);
  res.direct = key_expand(direct);

  auto shape = Shape::make(ShuffleShape(pair.first, pair.second));
  int max_entry = b.max_bound();
  DemazureSubset X = flagged_subset(shape, max_entry, b);
  res.components = decompose(X);
  KeyExpansion::Map crystal_terms;
  for (const auto& c : res.components) crystal_terms[c.lowest_weight] += 1;
  res.crystal = KeyExpansion(std::move(crystal_terms));

  res.paths_agree = res.direct == res.crystal;
  if (res.hypotheses_hold && !res.paths_agree)
    throw std::logic_error(
        "product: direct and crystal key expansions disagree under the "
        "theorem's hypotheses");
  return res;
}

SkewShape shape_join(const SkewShape& a, const SkewShape& b) {
  int rows = std::max(a.outer.size(), b.outer.size());
  std::vector<int> outer, inner;
  for (int i = 1; i <= rows; ++i)
    outer.push_back(std::max(a.outer.part(i), b.outer.part(i)));
  for (int i = 1; i <= rows; ++i)
    inner.push_back(std::max(a.inner.part(i), b.inner.part(i)));
  return SkewShape(Partition(outer), Partition(inner));
}

SkewShape shape_meet(const SkewShape& a, const SkewShape& b) {
  int rows = std::max(a.outer.size(), b.outer.size());
  std::vector<int> outer, inner;
  for (int i = 1; i <= rows; ++i)
    outer.push_back(std::min(a.outer.part(i), b.outer.part(i)));
  for (int i = 1; i <= rows; ++i)
    inner.push_back(std::min(a.inner.part(i), b.inner.part(i)));
  return SkewShape(Partition(outer), Partition(inner));
}

PositivityReport logconcavity_difference(const SkewPair& pair, const Flag& b,
                                         int total_vars) {
  Polynomial upper = flagged_schur(shape_join(pair.first, pair.second), b, total_vars) *
                     flagged_schur(shape_meet(pair.first, pair.second), b, total_vars);
  Polynomial lower = flagged_schur(pair.first, b, total_vars) *
                     flagged_schur(pair.second, b, total_vars);
  PositivityReport r;
  r.expansion = key_expand(upper - lower);
  r.key_positive = is_key_positive(r.expansion);
  r.hypotheses_hold = pair.satisfies_product_hypotheses();
  return r;
}

DoubledData doubled_construction(const SkewPair& pair, const Flag& b) {
  int n = std::max(pair.first.outer.rows(), pair.second.outer.rows());
  if (n == 0) n = 1;
  DoubledData d;
  std::vector<int> lam, mu, bb;
  for (int i = 1; i <= n; ++i) {
    int off = n - i + 1;
    int l1 = pair.first.outer.part(i), l2 = pair.second.outer.part(i);
    lam.push_back(std::max(l1, l2) + off);
    lam.push_back(std::min(l1, l2) + off);
    d.first_rows.push_back(l1 >= l2 ? 2 * i - 1 : 2 * i);
    int m1 = pair.first.inner.part(i), m2 = pair.second.inner.part(i);
    mu.push_back(std::max(m1, m2) + off);
    mu.push_back(std::min(m1, m2) + off);
    d.first_cols.push_back(m1 >= m2 ? 2 * i - 1 : 2 * i);
    bb.push_back(b.bound(i));
    bb.push_back(b.bound(i));
  }
  for (size_t i = 0; i + 1 < lam.size(); ++i) {
    if (lam[i] < lam[i + 1] || mu[i] < mu[i + 1])
      throw std::invalid_argument(
          "doubled construction requires interlacing outer and inner shapes");
  }
  d.lambda = Partition(lam);
  d.mu = Partition(mu);
  d.flag = Flag(bb);
  d.strict = d.lambda.is_strict();
  return d;
}

Permutation key_index_witness(const Composition& alpha) {
  // Stable matching of equal parts gives the minimal-length w with
  // w(sorted(alpha)) = alpha.
  std::vector<int> a = alpha.parts();
  int n = static_cast<int>(a.size());
  std::vector<int> sorted = a;
  std::sort(sorted.rbegin(), sorted.rend());
  std::vector<char> used(n, 0);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!used[j] && a[j] == sorted[i]) {
        images[i] = j + 1;
        used[j] = 1;
        break;
      }
    }
  }
  return Permutation(std::move(images));
}

}  // namespace flagkey
