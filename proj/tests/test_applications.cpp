#include <doctest.h>

#include <map>

#include "flagkey/applications.hpp"
#include "flagkey/serialize.hpp"

using namespace flagkey;

namespace {

KeyExpansion expansion_of(std::vector<std::pair<std::vector<int>, int>> terms) {
  KeyExpansion::Map m;
  for (auto& [a, c] : terms) m[Composition(a)] = c;
  return KeyExpansion(std::move(m));
}

Polynomial schur(const Partition& lam, int nvars) {
  return flagged_schur(SkewShape(lam, Partition{}),
                       Flag(std::vector<int>(std::max(1, lam.rows()), nvars)), nvars);
}

// Independent Schur-expansion oracle by leading-term subtraction; valid for
// symmetric polynomials with nonnegative Schur coefficients.
std::map<Partition, Int> schur_expand(Polynomial p, int nvars) {
  std::map<Partition, Int> out;
  while (!p.is_zero()) {
    Monomial lead = p.terms().back().first;  // lex-largest, weakly decreasing
    std::vector<int> exps = lead.exponents(nvars);
    Partition mu(exps);
    Int c = p.terms().back().second;
    p -= schur(mu, nvars).scaled(c);
    out[mu] += c;
  }
  return out;
}

}  // namespace

TEST_CASE("hypothesis predicates") {
  SkewPair ok{SkewShape(Partition({3, 2}), Partition{}),
              SkewShape(Partition({2, 1}), Partition{})};
  CHECK(ok.outer_parts_distinct());
  CHECK(ok.outer_interlacing());
  CHECK(ok.satisfies_product_hypotheses());

  SkewPair equal_row{SkewShape(Partition({2, 1}), Partition{}),
                     SkewShape(Partition({2}), Partition{})};
  CHECK_FALSE(equal_row.outer_parts_distinct());

  SkewPair crossed{SkewShape(Partition({4, 3}), Partition{}),
                   SkewShape(Partition({1, 1}), Partition{})};
  CHECK_FALSE(crossed.outer_interlacing());
}

TEST_CASE("product example from the paper") {
  SkewPair pair{SkewShape(Partition({3, 2}), Partition{}),
                SkewShape(Partition({2, 1}), Partition{})};
  ProductResult r = product_key_expansion(pair, Flag({1, 3}), 3);
  KeyExpansion expect = expansion_of({{{5, 1, 2}, 1}, {{5, 0, 3}, 1}});
  CHECK(r.direct == expect);
  CHECK(r.crystal == expect);
  CHECK(r.paths_agree);
  CHECK(r.hypotheses_hold);
  REQUIRE(r.components.size() == 2);
}

TEST_CASE("product with an empty factor reduces to the other factor") {
  SkewPair pair{SkewShape(Partition({2, 1}), Partition{}),
                SkewShape(Partition{}, Partition{})};
  Flag b({2, 3});
  ProductResult r = product_key_expansion(pair, b, 3);
  CHECK(r.direct == key_expand(flagged_schur(pair.first, b, 3)));
  CHECK(r.paths_agree);
}

TEST_CASE("product paths agree on hypothesis-satisfying instances") {
  struct Case {
    SkewPair pair;
    Flag flag;
  };
  std::vector<Case> cases = {
      {{SkewShape(Partition({3, 2}), Partition({1})),
        SkewShape(Partition({2, 1}), Partition{}) }, Flag({2, 3})},
      {{SkewShape(Partition({2, 1}), Partition{}),
        SkewShape(Partition({3}), Partition({1})) }, Flag({1, 2})},
      {{SkewShape(Partition({4, 2}), Partition({2})),
        SkewShape(Partition({3, 1}), Partition({1})) }, Flag({2, 2})},
      {{SkewShape(Partition({2}), Partition{}),
        SkewShape(Partition({1}), Partition{}) }, Flag({3})},
  };
  for (const auto& c : cases) {
    ProductResult r = product_key_expansion(c.pair, c.flag, c.flag.max_bound());
    CHECK(r.hypotheses_hold);
    CHECK(r.paths_agree);
  }
}

TEST_CASE("unflagged straight products group Littlewood-Richardson numbers") {
  Partition lam({2, 1}), nu({2});
  int nvars = 3;
  SkewPair pair{SkewShape(lam, Partition{}), SkewShape(nu, Partition{})};
  // a huge flag makes both factors symmetric Schur polynomials
  Flag big({nvars, nvars});
  ProductResult r = product_key_expansion(pair, big, nvars);
  auto lr = schur_expand(schur(lam, nvars) * schur(nu, nvars), nvars);
  KeyExpansion::Map expect;
  for (const auto& [kappa, c] : lr) {
    std::vector<int> rev = kappa.padded(nvars).parts();
    std::reverse(rev.begin(), rev.end());
    expect[Composition(rev)] = c;
  }
  CHECK(r.direct == KeyExpansion(expect));
}

TEST_CASE("joins and meets") {
  SkewShape a(Partition({3, 1}), Partition{});
  SkewShape b(Partition({2, 2}), Partition{});
  CHECK(shape_join(a, b).outer == Partition({3, 2}));
  CHECK(shape_meet(a, b).outer == Partition({2, 1}));
  CHECK(shape_join(a, a).outer == a.outer);
  CHECK(shape_meet(a, a).inner == a.inner);
}

TEST_CASE("log-concavity example from the paper") {
  SkewPair pair{SkewShape(Partition({3, 1}), Partition{}),
                SkewShape(Partition({2, 2}), Partition{})};
  PositivityReport r = logconcavity_difference(pair, Flag({2, 4}), 4);
  CHECK(r.expansion ==
        expansion_of({{{3, 3, 1, 1}, 1}, {{3, 4, 0, 1}, 1}, {{4, 4}, 1}}));
  CHECK(r.key_positive);
}

TEST_CASE("log-concavity difference of identical shapes vanishes") {
  SkewPair pair{SkewShape(Partition({2, 1}), Partition({1})),
                SkewShape(Partition({2, 1}), Partition({1}))};
  PositivityReport r = logconcavity_difference(pair, Flag({2, 3}), 3);
  CHECK(r.expansion.empty());
  CHECK(r.key_positive);
}

TEST_CASE("log-concavity positivity sweep over small hypothesis pairs") {
  std::vector<SkewPair> pairs = {
      {SkewShape(Partition({3, 1}), Partition{}),
       SkewShape(Partition({2, 2}), Partition{})},
      {SkewShape(Partition({2, 1}), Partition({1})),
       SkewShape(Partition({3}), Partition{})},
      {SkewShape(Partition({3, 2}), Partition({1})),
       SkewShape(Partition({2, 1}), Partition{})},
  };
  for (const auto& p : pairs) {
    if (!p.satisfies_product_hypotheses()) continue;
    PositivityReport r = logconcavity_difference(p, Flag({2, 3}), 3);
    CHECK(r.key_positive);
  }
}

TEST_CASE("doubled construction") {
  SkewPair pair{SkewShape(Partition({3, 2}), Partition{}),
                SkewShape(Partition({2, 1}), Partition{})};
  DoubledData d = doubled_construction(pair, Flag({1, 3}));
  CHECK(d.lambda == Partition({5, 4, 3, 2}));
  CHECK(d.mu == Partition({2, 2, 1, 1}));
  CHECK(d.flag == Flag({1, 1, 3, 3}));
  CHECK(d.strict);
  CHECK(d.first_rows == std::vector<int>{1, 3});
  CHECK(d.first_cols == std::vector<int>{1, 3});

  // equal outer shapes break strictness but not validity
  SkewPair same{SkewShape(Partition({2, 1}), Partition{}),
                SkewShape(Partition({2, 1}), Partition{})};
  DoubledData d2 = doubled_construction(same, Flag({1, 2}));
  CHECK_FALSE(d2.strict);

  // interlacing strict inputs give a strict doubled partition
  SkewPair strict_pair{SkewShape(Partition({4, 2}), Partition{}),
                       SkewShape(Partition({3, 1}), Partition{})};
  CHECK(doubled_construction(strict_pair, Flag({1, 2})).strict);
}

TEST_CASE("factorization and immanant decomposition of the doubled matrix") {
  SkewPair pair{SkewShape(Partition({3, 2}), Partition{}),
                SkewShape(Partition({2, 1}), Partition{})};
  Flag b({1, 3});
  int tv = 3;
  DoubledData d = doubled_construction(pair, b);
  JTMatrix A = generalized_jt_matrix(d.lambda, d.mu, d.flag, tv);

  std::vector<int> I = d.first_rows, J = d.first_cols;
  std::vector<int> Ibar, Jbar;
  for (int v = 1; v <= 4; ++v) {
    if (std::find(I.begin(), I.end(), v) == I.end()) Ibar.push_back(v);
    if (std::find(J.begin(), J.end(), v) == J.end()) Jbar.push_back(v);
  }
  Polynomial p1 = minor(A, I, J);
  Polynomial p2 = minor(A, Ibar, Jbar);
  CHECK(p1 == flagged_schur(pair.first, b, tv));
  CHECK(p2 == flagged_schur(pair.second, b, tv));

  Polynomial product = p1 * p2;
  Polynomial via_theta(tv);
  for (const auto& tau : theta_set(I, J, 4)) via_theta += tl_immanant(tau, A.entries);
  CHECK(via_theta == product);
}

TEST_CASE("key index witness") {
  Permutation w = key_index_witness(Composition({0, 2, 1}));
  CHECK(apply_perm(w, Composition({2, 1, 0})) == Composition({0, 2, 1}));
  CHECK(w == Permutation::from_word({1, 2}, 3));
  CHECK(key_index_witness(Composition({3, 2, 1})).is_identity());
  // minimal length among all witnesses in S3
  Composition alpha({1, 0, 1});
  Composition sorted(alpha.sorted_decreasing().padded(3).parts());
  Permutation v = key_index_witness(alpha);
  CHECK(apply_perm(v, sorted) == alpha);
  for (const auto& u : all_permutations(3))
    if (apply_perm(u, sorted) == alpha) CHECK(v.inversions() <= u.inversions());
}
