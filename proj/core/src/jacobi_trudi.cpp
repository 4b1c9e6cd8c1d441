#include "flagkey/jacobi_trudi.hpp"

#include <stdexcept>

namespace flagkey {

namespace {

JTMatrix build_matrix(const Partition& lambda, const Partition& mu, const Flag& b,
                      int total_vars, bool shifted) {
  int n = std::max(lambda.rows(), mu.rows());
  if (n == 0) n = 1;
  JTMatrix m;
  m.lambda = lambda;
  m.mu = mu;
  m.flag = b;
  m.entries.resize(n);
  for (int i = 1; i <= n; ++i) {
    int vars = std::min(b.bound(i), total_vars);
    for (int j = 1; j <= n; ++j) {
      int d = lambda.part(i) - mu.part(j) + (shifted ? j - i : 0);
      m.entries[i - 1].push_back(complete_homogeneous(d, vars, total_vars));
    }
  }
  return m;
}

}  // namespace

JTMatrix flagged_jt_matrix(const Partition& lambda, const Partition& mu, const Flag& b,
                           int total_vars) {
  return build_matrix(lambda, mu, b, total_vars, true);
}

JTMatrix generalized_jt_matrix(const Partition& lambda, const Partition& mu,
                               const Flag& b, int total_vars) {
  return build_matrix(lambda, mu, b, total_vars, false);
}

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant requires a square matrix");
  int nvars = m[0][0].var_count();
  if (n > 20) throw std::invalid_argument("determinant size limit exceeded");
  // dp over column subsets: after processing k rows, dp[mask] is the minor of
  // rows 1..k against the columns in mask, signed as in Laplace expansion
  std::vector<Polynomial> dp(size_t(1) << n);
  dp[0] = Polynomial::one(nvars);
  for (int row = 0; row < n; ++row) {
    std::vector<Polynomial> next(size_t(1) << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != row || dp[mask].is_zero()) continue;
      int sign = 1;
      for (int col = 0; col < n; ++col) {
        if (mask & (1u << col)) continue;
        if (!m[row][col].is_zero()) {
          Polynomial contrib = dp[mask] * m[row][col];
          if (sign < 0) contrib = contrib.scaled(-1);
          std::uint32_t m2 = mask | (1u << col);
          if (next[m2].var_count() == 0 && nvars != 0)
            next[m2] = Polynomial::zero(nvars);
          next[m2] += contrib;
        }
        sign = -sign;
      }
    }
    dp = std::move(next);
  }
  Polynomial result = dp[(1u << n) - 1];
  if (result.var_count() == 0 && nvars != 0) result = Polynomial::zero(nvars);
  return result;
}

Polynomial minor(const std::vector<std::vector<Polynomial>>& m,
                 const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor requires |rows| == |cols|");
  std::vector<int> I = rows, J = cols;
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  std::vector<std::vector<Polynomial>> sub(I.size());
  for (size_t a = 0; a < I.size(); ++a) {
    for (size_t b = 0; b < J.size(); ++b) {
      if (I[a] < 1 || I[a] > static_cast<int>(m.size()) || J[b] < 1 ||
          J[b] > static_cast<int>(m.size()))
        throw std::invalid_argument("minor index out of range");
      sub[a].push_back(m[I[a] - 1][J[b] - 1]);
    }
  }
  return poly_determinant(sub);
}

Polynomial minor(const JTMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  return minor(m.entries, rows, cols);
}

Polynomial flagged_skew_schur_det(const Partition& lambda, const Partition& mu,
                                  const Flag& b, int total_vars) {
  return poly_determinant(flagged_jt_matrix(lambda, mu, b, total_vars).entries);
}

}  // namespace flagkey
