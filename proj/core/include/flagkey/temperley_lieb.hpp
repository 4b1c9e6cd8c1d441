#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "flagkey/polynomial.hpp"

namespace flagkey {

// Noncrossing perfect matching on 2n boundary points of a rectangle.
// Circular order: L1..Ln down the left side, then Rn..R1 up the right side.
// Point indices: L_i -> i-1, R_i -> 2n-i.
class TLDiagram {
 public:
  TLDiagram() = default;
  // mate[p] = point matched with p; validated as a noncrossing involution.
  TLDiagram(int n, std::vector<int> mate);

  static TLDiagram identity(int n);
  static TLDiagram generator(int n, int i);  // t_i: cups (L_i,L_{i+1}), (R_i,R_{i+1})

  int strands() const { return n_; }
  int mate(int point) const { return mate_[point]; }
  static int point_L(int n, int i) { return i - 1; }
  static int point_R(int n, int i) { return 2 * n - i; }

  // Sorted pair list over labels, e.g. "[[L1,L2],[L3,L4],[R1,R2],[R3,R4]]".
  std::string pair_list() const;
  static TLDiagram parse_pair_list(const std::string& text);

  bool operator==(const TLDiagram& o) const { return n_ == o.n_ && mate_ == o.mate_; }
  bool operator<(const TLDiagram& o) const {
    return n_ != o.n_ ? n_ < o.n_ : mate_ < o.mate_;
  }

 private:
  int n_ = 0;
  std::vector<int> mate_;
};

// Integer combination of diagrams; the loop parameter is fixed at 2.
class TLElement {
 public:
  using Map = std::map<TLDiagram, Int>;

  TLElement() = default;
  explicit TLElement(Map terms);
  static TLElement of(const TLDiagram& d, Int c = 1);

  const Map& terms() const { return terms_; }
  Int coefficient(const TLDiagram& d) const;
  bool operator==(const TLElement& o) const { return terms_ == o.terms_; }

  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }

 private:
  Map terms_;
};

// All Catalan(n) basis diagrams in a fixed deterministic order.
std::vector<TLDiagram> tl_basis(int n);

// Diagram concatenation; every closed loop contributes a factor of 2.
TLElement tl_mul(const TLDiagram& a, const TLDiagram& b);
TLElement tl_mul(const TLElement& a, const TLElement& b);

// Projection of the group algebra: s_i -> t_i - 1 multiplied along a reduced
// word (leftmost letter leftmost in the diagram product). f_tau(w) is the
// coefficient of tau in project_perm(w).
TLElement project_perm(const Permutation& w);

// Imm_tau(M) = sum over w of f_tau(w) * prod_i m_{i, w(i)}.
Polynomial tl_immanant(const TLDiagram& tau,
                       const std::vector<std::vector<Polynomial>>& matrix);

// The 0/1 set Theta(I,J) with
//   Delta_{I,J}(M) * Delta_{Ibar,Jbar}(M) = sum_{tau in Theta} Imm_tau(M)
// derived by solving the linear system over the immanant coordinates.
std::set<TLDiagram> theta_set(const std::vector<int>& rows,
                              const std::vector<int>& cols, int n);

}  // namespace flagkey
