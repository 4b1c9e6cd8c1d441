#include "flagkey/temperley_lieb.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagkey {

namespace {

void validate_matching(int n, const std::vector<int>& mate) {
  if (static_cast<int>(mate.size()) != 2 * n)
    throw std::invalid_argument("matching must cover 2n points");
  for (int p = 0; p < 2 * n; ++p) {
    int q = mate[p];
    if (q < 0 || q >= 2 * n || q == p || mate[q] != p)
      throw std::invalid_argument("matching must be a fixed-point-free involution");
  }
  for (int p = 0; p < 2 * n; ++p) {
    for (int q = p + 1; q < 2 * n; ++q) {
      int a1 = std::min(p, mate[p]), b1 = std::max(p, mate[p]);
      int a2 = std::min(q, mate[q]), b2 = std::max(q, mate[q]);
      if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
        throw std::invalid_argument("matching has crossing arcs");
    }
  }
}

}  // namespace

TLDiagram::TLDiagram(int n, std::vector<int> mate) : n_(n), mate_(std::move(mate)) {
  validate_matching(n_, mate_);
}

TLDiagram TLDiagram::identity(int n) {
  std::vector<int> mate(2 * n);
  for (int i = 1; i <= n; ++i) {
    mate[point_L(n, i)] = point_R(n, i);
    mate[point_R(n, i)] = point_L(n, i);
  }
  return TLDiagram(n, std::move(mate));
}

TLDiagram TLDiagram::generator(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  TLDiagram d = identity(n);
  auto link = [&](int a, int b) {
    d.mate_[a] = b;
    d.mate_[b] = a;
  };
  link(point_L(n, i), point_L(n, i + 1));
  link(point_R(n, i), point_R(n, i + 1));
  return d;
}

std::string TLDiagram::pair_list() const {
  auto label = [&](int p) {
    return p < n_ ? "L" + std::to_string(p + 1) : "R" + std::to_string(2 * n_ - p);
  };
  // present each arc with its lexicographically smaller label first, arcs
  // sorted; L labels sort before R, then by index
  auto rank = [&](int p) { return p < n_ ? p : 2 * n_ + (2 * n_ - p); };
  std::vector<std::pair<int, int>> arcs;
  for (int p = 0; p < 2 * n_; ++p) {
    if (rank(p) < rank(mate_[p])) arcs.emplace_back(rank(p), p);
  }
  std::sort(arcs.begin(), arcs.end());
  std::string out = "[";
  for (size_t k = 0; k < arcs.size(); ++k) {
    if (k) out += ",";
    out += "[" + label(arcs[k].second) + "," + label(mate_[arcs[k].second]) + "]";
  }
  return out + "]";
}

TLDiagram TLDiagram::parse_pair_list(const std::string& text) {
  // grammar: [[L1,L2],[R1,R2],...] with optional whitespace
  std::vector<std::pair<std::pair<char, int>, std::pair<char, int>>> arcs;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument("bad diagram pair list near position " +
                                  std::to_string(i) + ": expected '" + c + "'");
    ++i;
  };
  auto parse_point = [&]() -> std::pair<char, int> {
    skip();
    if (i >= text.size() || (text[i] != 'L' && text[i] != 'R'))
      throw std::invalid_argument("expected point label L<k> or R<k>");
    char side = text[i++];
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw std::invalid_argument("expected point index after side letter");
    int idx = std::stoi(text.substr(i, j - i));
    i = j;
    return {side, idx};
  };
  expect('[');
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect('[');
      auto a = parse_point();
      expect(',');
      auto b = parse_point();
      expect(']');
      arcs.emplace_back(a, b);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
  }
  skip();
  if (i != text.size()) throw std::invalid_argument("trailing text after diagram");
  int n = static_cast<int>(arcs.size());
  if (n == 0) throw std::invalid_argument("empty diagram");
  int max_idx = 0;
  for (auto& [a, b] : arcs) max_idx = std::max({max_idx, a.second, b.second});
  if (max_idx != n)
    throw std::invalid_argument("diagram must match n arcs on points 1..n per side");
  std::vector<int> mate(2 * n, -1);
  auto to_point = [&](std::pair<char, int> pt) {
    if (pt.second < 1 || pt.second > n)
      throw std::invalid_argument("point index out of range");
    return pt.first == 'L' ? TLDiagram::point_L(n, pt.second)
                           : TLDiagram::point_R(n, pt.second);
  };
  for (auto& [a, b] : arcs) {
    int p = to_point(a), q = to_point(b);
    if (mate[p] != -1 || mate[q] != -1 || p == q)
      throw std::invalid_argument("diagram repeats a point");
    mate[p] = q;
    mate[q] = p;
  }
  return TLDiagram(n, std::move(mate));
}

TLElement::TLElement(Map terms) {
  for (auto& [d, c] : terms)
    if (c != 0) terms_.emplace(d, c);
}

TLElement TLElement::of(const TLDiagram& d, Int c) {
  TLElement e;
  if (c != 0) e.terms_.emplace(d, std::move(c));
  return e;
}

Int TLElement::coefficient(const TLDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Int(0) : it->second;
}

TLElement& TLElement::operator+=(const TLElement& o) {
  for (const auto& [d, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  for (const auto& [d, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(d, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

std::vector<TLDiagram> tl_basis(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("tl_basis supports 1 <= n <= 8");
  // Noncrossing matchings on 0..2n-1: pair the first free point with every
  // odd-offset partner; the regions inside and after the arc are independent.
  std::vector<TLDiagram> out;
  std::vector<int> mate(2 * n, -1);
  auto rec = [&](auto&& self, std::vector<std::vector<int>> regions) -> void {
    while (!regions.empty() && regions.back().empty()) regions.pop_back();
    if (regions.empty()) {
      out.emplace_back(n, mate);
      return;
    }
    std::vector<int> region = std::move(regions.back());
    regions.pop_back();
    int a = region[0];
    for (size_t k = 1; k < region.size(); k += 2) {
      int b = region[k];
      mate[a] = b;
      mate[b] = a;
      auto rest = regions;
      rest.emplace_back(region.begin() + k + 1, region.end());
      rest.emplace_back(region.begin() + 1, region.begin() + k);
      self(self, std::move(rest));
      mate[a] = -1;
      mate[b] = -1;
    }
  };
  std::vector<int> all(2 * n);
  for (int p = 0; p < 2 * n; ++p) all[p] = p;
  rec(rec, {all});
  std::sort(out.begin(), out.end());
  return out;
}

TLElement tl_mul(const TLDiagram& a, const TLDiagram& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("diagram strand count mismatch");
  int n = a.strands();
  // Points of the glued picture: final left = a's L, middle = a's R glued to
  // b's L, final right = b's R. Walk strands from boundary points; leftover
  // middle cycles are closed loops.
  auto a_mate = [&](int p) { return a.mate(p); };
  auto b_mate = [&](int p) { return b.mate(p); };
  // encode: 0..n-1 final L (a's L), middle i in 0..n-1, final R via b
  std::vector<int> result_mate(2 * n, -1);
  std::vector<char> mid_seen(n, 0);

  auto walk = [&](int start_point, bool start_in_a) {
    // returns the terminal boundary point (encoded in final coordinates)
    bool in_a = start_in_a;
    int p = start_point;
    while (true) {
      int q = in_a ? a_mate(p) : b_mate(p);
      if (in_a && q < n) return q;                  // a's L point: final left
      if (!in_a && q >= n) return q;                // b's R point: final right
      // crossed into the middle wall
      if (in_a) {
        // q is a's R_i; continue from b's L_i
        int i = 2 * n - q;  // label index
        mid_seen[i - 1] = 1;
        p = TLDiagram::point_L(n, i);
        in_a = false;
      } else {
        // q is b's L_i; continue from a's R_i
        int i = q + 1;
        mid_seen[i - 1] = 1;
        p = TLDiagram::point_R(n, i);
        in_a = true;
      }
    }
  };

  for (int i = 1; i <= n; ++i) {
    int pL = TLDiagram::point_L(n, i);
    if (result_mate[pL] == -1) {
      int end = walk(pL, true);
      result_mate[pL] = end;
      result_mate[end] = pL;
    }
    int pR = TLDiagram::point_R(n, i);
    if (result_mate[pR] == -1) {
      int end = walk(pR, false);
      result_mate[pR] = end;
      result_mate[end] = pR;
    }
  }
  // closed loops: middle strands never reached from the boundary
  int loops = 0;
  for (int i = 1; i <= n; ++i) {
    if (mid_seen[i - 1]) continue;
    // trace the loop through middle connections
    int start = i;
    int cur = i;
    bool in_a = true;  // start by following a from its R_i
    do {
      mid_seen[cur - 1] = 1;
      if (in_a) {
        int q = a_mate(TLDiagram::point_R(n, cur));
        // q must be another R point of a (a middle point), else the strand
        // would have been reached from the boundary
        cur = 2 * n - q;
      } else {
        int q = b_mate(TLDiagram::point_L(n, cur));
        cur = q + 1;
      }
      in_a = !in_a;
    } while (!(cur == start && in_a));
    ++loops;
  }
  Int coeff = 1;
  for (int l = 0; l < loops; ++l) coeff *= 2;
  return TLElement::of(TLDiagram(n, std::move(result_mate)), coeff);
}

TLElement tl_mul(const TLElement& a, const TLElement& b) {
  TLElement out;
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      TLElement prod = tl_mul(da, db);
      for (const auto& [d, c] : prod.terms()) out += TLElement::of(d, c * ca * cb);
    }
  }
  return out;
}

TLElement project_perm(const Permutation& w) {
  int n = w.n();
  TLElement e = TLElement::of(TLDiagram::identity(n));
  for (int i : w.reduced_word()) {
    TLElement gen = TLElement::of(TLDiagram::generator(n, i)) -
                    TLElement::of(TLDiagram::identity(n));
    e = tl_mul(e, gen);
  }
  return e;
}

Polynomial tl_immanant(const TLDiagram& tau,
                       const std::vector<std::vector<Polynomial>>& matrix) {
  int n = tau.strands();
  if (static_cast<int>(matrix.size()) != n)
    throw std::invalid_argument("immanant: matrix size must match strand count");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("immanant: matrix must be square");
  int nvars = matrix[0][0].var_count();
  Polynomial total(nvars);
  for (const auto& w : all_permutations(n)) {
    Int f = project_perm(w).coefficient(tau);
    if (f == 0) continue;
    Polynomial prod = Polynomial::one(nvars);
    for (int i = 1; i <= n; ++i) prod = prod * matrix[i - 1][w.image(i) - 1];
    total += prod.scaled(f);
  }
  return total;
}

std::set<TLDiagram> theta_set(const std::vector<int>& rows, const std::vector<int>& cols,
                              int n) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("theta_set: |I| must equal |J|");
  std::vector<int> I = rows, J = cols;
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  std::vector<int> Ibar, Jbar;
  for (int v = 1; v <= n; ++v) {
    if (!std::binary_search(I.begin(), I.end(), v)) Ibar.push_back(v);
    if (!std::binary_search(J.begin(), J.end(), v)) Jbar.push_back(v);
  }

  // coefficient of prod_i m_{i,w(i)} in Delta_{I,J} * Delta_{Ibar,Jbar}
  std::map<Permutation, Int> cw;
  auto sign_of = [](const std::vector<int>& images) {
    int inv = 0;
    for (size_t i = 0; i < images.size(); ++i)
      for (size_t j = i + 1; j < images.size(); ++j)
        if (images[i] > images[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
  };
  int k = static_cast<int>(I.size());
  int kbar = n - k;
  std::vector<int> perm1(k), perm2(kbar);
  for (int i = 0; i < k; ++i) perm1[i] = i;
  for (int i = 0; i < kbar; ++i) perm2[i] = i;
  std::sort(perm1.begin(), perm1.end());
  do {
    std::vector<int> p2(kbar);
    for (int i = 0; i < kbar; ++i) p2[i] = i;
    do {
      std::vector<int> images(n);
      std::vector<int> sig1(k), sig2(kbar);
      for (int i = 0; i < k; ++i) {
        images[I[i] - 1] = J[perm1[i]];
        sig1[i] = perm1[i];
      }
      for (int i = 0; i < kbar; ++i) {
        images[Ibar[i] - 1] = Jbar[p2[i]];
        sig2[i] = p2[i];
      }
      cw[Permutation(images)] += Int(sign_of(sig1) * sign_of(sig2));
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(perm1.begin(), perm1.end()));

  // solve sum_tau g_tau f_tau(w) = c_w over all w
  std::vector<TLDiagram> basis = tl_basis(n);
  std::vector<Permutation> perms = all_permutations(n);
  int nrows = static_cast<int>(perms.size());
  int ncols = static_cast<int>(basis.size());
  std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(ncols, 0));
  std::vector<Rational> rhs(nrows, 0);
  for (int r = 0; r < nrows; ++r) {
    TLElement th = project_perm(perms[r]);
    for (int c = 0; c < ncols; ++c) A[r][c] = Rational(th.coefficient(basis[c]));
    auto it = cw.find(perms[r]);
    rhs[r] = it == cw.end() ? Rational(0) : Rational(it->second);
  }
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
    for (int j = col; j < ncols; ++j) A[row][j] /= pv;
    rhs[row] /= pv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Rational f = A[r][col];
      for (int j = col; j < ncols; ++j) A[r][j] -= f * A[row][j];
      rhs[r] -= f * rhs[row];
    }
    pivot_row[col] = row++;
  }
  for (int r = row; r < nrows; ++r)
    if (rhs[r] != 0) throw std::logic_error("theta_set: inconsistent system");
  std::set<TLDiagram> out;
  for (int col = 0; col < ncols; ++col) {
    Rational v = pivot_row[col] >= 0 ? rhs[pivot_row[col]] : Rational(0);
    if (v == 0) continue;
    if (v != 1) throw std::logic_error("theta_set: non 0/1 coefficient");
    out.insert(basis[col]);
  }
  return out;
}

}  // namespace flagkey
