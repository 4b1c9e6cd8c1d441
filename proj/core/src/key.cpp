#include "flagkey/key.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagkey {

KeyExpansion::KeyExpansion(Map terms) {
  for (auto& [a, c] : terms)
    if (c != 0) terms_.emplace(a.trimmed(), c);
}

Int KeyExpansion::coefficient(const Composition& alpha) const {
  auto it = terms_.find(alpha.trimmed());
  return it == terms_.end() ? Int(0) : it->second;
}

Polynomial KeyExpansion::evaluate(int total_vars) const {
  Polynomial p(total_vars);
  for (const auto& [a, c] : terms_) p += key_polynomial(a, total_vars).scaled(c);
  return p;
}

Polynomial demazure_op(const Polynomial& p, int i) {
  if (i < 1 || i + 1 > p.var_count())
    throw std::invalid_argument("demazure_op index out of range");
  // For a single monomial with exponents (a, b) at positions (i, i+1):
  //   a >= b: sum of monomials with those exponents running from (a,b) to (b,a)
  //   a <  b: minus the sum strictly between, from (a+1,b-1) to (b-1,a+1)
  Polynomial r(p.var_count());
  std::map<Monomial, Int> acc;
  for (const auto& [m, c] : p.terms()) {
    int a = m.exponent(i), b = m.exponent(i + 1);
    if (a >= b) {
      for (int k = 0; k <= a - b; ++k)
        acc[m.with_exponent(i, b + k).with_exponent(i + 1, a - k)] += c;
    } else {
      for (int k = 0; k < b - a - 1; ++k)
        acc[m.with_exponent(i, a + 1 + k).with_exponent(i + 1, b - 1 - k)] -= c;
    }
  }
  for (auto& [m, c] : acc)
    if (c != 0) r.push_term_unchecked(m, std::move(c));
  return r;
}

Polynomial key_polynomial(const Composition& alpha, int total_vars) {
  if (alpha.trimmed().size() > total_vars)
    throw std::invalid_argument("key_polynomial: composition longer than variable count");
  std::vector<int> a = alpha.padded(total_vars).parts();
  // Unwind the first-ascent recursion iteratively: sort while recording the
  // ascent positions, then apply the pi operators back in reverse.
  std::vector<int> ops;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < total_vars; ++i) {
      if (a[i] < a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        ops.push_back(i + 1);
        moved = true;
        break;
      }
    }
  }
  Polynomial p = Polynomial::monomial(a, 1, total_vars);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) p = demazure_op(p, *it);
  return p;
}

namespace {

// All compositions of a given total into exactly nvars parts, each at most
// max_part, in lexicographic order.
void compositions_rec(int pos, int nvars, int rem, int max_part, std::vector<int>& cur,
                      std::vector<Composition>& out) {
  if (pos == nvars - 1) {
    if (rem <= max_part) {
      cur[pos] = rem;
      out.emplace_back(cur);
    }
    return;
  }
  for (int v = 0; v <= std::min(rem, max_part); ++v) {
    cur[pos] = v;
    compositions_rec(pos + 1, nvars, rem - v, max_part, cur, out);
  }
}

}  // namespace

KeyExpansion key_expand(const Polynomial& p) {
  // Per degree: candidate indices are the compositions of that degree with
  // parts bounded by the largest exponent present; kappa_alpha only involves
  // monomials whose exponents are bounded by max(alpha), so the candidate
  // set is complete. The transition system has a unique integer solution
  // because the key polynomials form a basis.
  KeyExpansion::Map result;
  int nvars = p.var_count();
  std::map<long long, std::vector<Polynomial::Term>> by_degree;
  for (const auto& [m, c] : p.terms()) by_degree[m.degree()].push_back({m, c});

  for (const auto& [deg, part_terms] : by_degree) {
    int max_exp = 0;
    for (const auto& [m, c] : part_terms)
      for (int v = 1; v <= nvars; ++v) max_exp = std::max(max_exp, m.exponent(v));
    std::vector<Composition> cands;
    std::vector<int> cur(nvars, 0);
    compositions_rec(0, nvars, static_cast<int>(deg), max_exp, cur, cands);

    std::vector<Polynomial> keys;
    keys.reserve(cands.size());
    std::map<Monomial, int> row_of;
    for (const auto& a : cands) {
      keys.push_back(key_polynomial(a, nvars));
      for (const auto& [m, c] : keys.back().terms()) row_of.emplace(m, 0);
    }
    for (const auto& [m, c] : part_terms) row_of.emplace(m, 0);
    int nrows = 0;
    for (auto& [m, idx] : row_of) idx = nrows++;
    int ncols = static_cast<int>(cands.size());

    std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(ncols, 0));
    std::vector<Rational> rhs(nrows, 0);
    for (int j = 0; j < ncols; ++j)
      for (const auto& [m, c] : keys[j].terms()) A[row_of[m]][j] = Rational(c);
    for (const auto& [m, c] : part_terms) rhs[row_of[m]] = Rational(c);

    // Gauss-Jordan; the system is consistent and has a unique solution.
    std::vector<int> pivot_row(ncols, -1);
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
      int sel = -1;
      for (int r = row; r < nrows; ++r)
        if (A[r][col] != 0) { sel = r; break; }
      if (sel < 0) continue;
      std::swap(A[sel], A[row]);
      std::swap(rhs[sel], rhs[row]);
      Rational pv = A[row][col];
      for (int j2 = col; j2 < ncols; ++j2) A[row][j2] /= pv;
      rhs[row] /= pv;
      for (int r = 0; r < nrows; ++r) {
        if (r == row || A[r][col] == 0) continue;
        Rational f = A[r][col];
        for (int j2 = col; j2 < ncols; ++j2) A[r][j2] -= f * A[row][j2];
        rhs[r] -= f * rhs[row];
      }
      pivot_row[col] = row;
      ++row;
    }
    for (int r = row; r < nrows; ++r)
      if (rhs[r] != 0) throw std::logic_error("key_expand: inconsistent system");
    for (int col = 0; col < ncols; ++col) {
      Rational v = pivot_row[col] >= 0 ? rhs[pivot_row[col]] : Rational(0);
      if (v != 0) {
        if (denominator(v) != 1) throw std::logic_error("key_expand: non-integer solution");
        result[cands[col].trimmed()] = numerator(v);
      }
    }
  }
  return KeyExpansion(std::move(result));
}

bool is_key_positive(const KeyExpansion& e) {
  for (const auto& [a, c] : e.terms())
    if (c < 0) return false;
  return true;
}

}  // namespace flagkey
