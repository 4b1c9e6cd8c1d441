#include <doctest.h>

#include "flagkey/key.hpp"
#include "flagkey/tableau.hpp"

using namespace flagkey;

namespace {

// Independent validity oracle: checks the definition directly on absolute
// coordinates, without the Shape neighbor tables.
bool valid_filling(const Shape& s, const std::vector<std::uint8_t>& vals) {
  int step = s.is_shuffle() ? 2 : 1;
  for (int i = 0; i < s.cell_count(); ++i) {
    if (vals[i] < 1) return false;
    for (int j = 0; j < s.cell_count(); ++j) {
      if (s.cells()[i].row == s.cells()[j].row &&
          s.cells()[j].col == s.cells()[i].col + step && vals[j] < vals[i])
        return false;
      if (s.cells()[i].col == s.cells()[j].col &&
          s.cells()[j].row == s.cells()[i].row + step && vals[j] <= vals[i])
        return false;
    }
  }
  return true;
}

// Oracle: enumerate by brute force over all value assignments.
long long brute_count(const Shape& s, int max_entry, const std::vector<int>& bounds) {
  long long count = 0;
  std::vector<std::uint8_t> vals(s.cell_count(), 1);
  while (true) {
    bool ok = true;
    for (int i = 0; i < s.cell_count() && ok; ++i)
      if (!bounds.empty() && vals[i] > bounds[s.cells()[i].row]) ok = false;
    if (ok && valid_filling(s, vals)) ++count;
    int pos = s.cell_count() - 1;
    while (pos >= 0 && vals[pos] == max_entry) vals[pos--] = 1;
    if (pos < 0) break;
    ++vals[pos];
  }
  return count;
}

}  // namespace

TEST_CASE("shuffle geometry from the interlacing rule") {
  ShuffleShape sh(SkewShape(Partition({3, 2}), Partition{}),
                  SkewShape(Partition({2, 1}), Partition{}));
  auto shape = Shape::make(sh);
  std::vector<Cell> expect = {{1, 1}, {1, 3}, {1, 5}, {2, 2}, {2, 4},
                              {3, 1}, {3, 3}, {4, 2}};
  CHECK(shape->cells() == expect);
}

TEST_CASE("enumeration counts for SSYT(2,1)") {
  auto shape = Shape::make(SkewShape(Partition({2, 1}), Partition{}));
  CHECK(enumerate_tableaux(shape, 3).size() == 8);
  CHECK(enumerate_tableaux(shape, 3, Flag({2, 3})).size() == 5);
  auto single = Shape::make(SkewShape(Partition({1}), Partition{}));
  CHECK(enumerate_tableaux(single, 1).size() == 1);
}

TEST_CASE("enumeration is exhaustive and valid (cross-checked by brute force)") {
  std::vector<std::pair<SkewShape, int>> skew_cases = {
      {SkewShape(Partition({3, 2}), Partition({1})), 3},
      {SkewShape(Partition({2, 2, 1}), Partition({1})), 4},
      {SkewShape(Partition({4, 2}), Partition({2, 1})), 3},
  };
  for (const auto& [sk, m] : skew_cases) {
    auto shape = Shape::make(sk);
    auto tabs = enumerate_tableaux(shape, m);
    for (const auto& t : tabs) CHECK(valid_filling(*shape, t.entries()));
    CHECK(static_cast<long long>(tabs.size()) == brute_count(*shape, m, {}));
    // duplicate-free and sorted row-major lexicographic
    for (size_t i = 1; i < tabs.size(); ++i) CHECK(tabs[i - 1] < tabs[i]);
  }

  ShuffleShape sh(SkewShape(Partition({2, 1}), Partition{}),
                  SkewShape(Partition({2}), Partition{}));
  auto shape = Shape::make(sh);
  auto tabs = enumerate_tableaux(shape, 3);
  for (const auto& t : tabs) CHECK(valid_filling(*shape, t.entries()));
  CHECK(static_cast<long long>(tabs.size()) == brute_count(*shape, 3, {}));
  auto bounds = shape->row_bounds(Flag({2, 3}));
  CHECK(static_cast<long long>(enumerate_tableaux(shape, 3, bounds).size()) ==
        brute_count(*shape, 3, bounds));
}

TEST_CASE("shuffle enumeration factorizes over the two constituents") {
  SkewShape a(Partition({3, 2}), Partition({1}));
  SkewShape b(Partition({2, 2}), Partition{});
  int m = 3;
  auto whole = enumerate_tableaux(Shape::make(ShuffleShape(a, b)), m);
  auto first = enumerate_tableaux(Shape::make(a), m);
  auto second = enumerate_tableaux(Shape::make(b), m);
  CHECK(whole.size() == first.size() * second.size());
}

TEST_CASE("reading word") {
  auto single = Shape::make(SkewShape(Partition({1}), Partition{}));
  CHECK(Tableau(single, {1}).reading_word() == std::vector<int>{1});

  // the paper's shuffle example reads 32212111
  ShuffleShape sh(SkewShape(Partition({3, 2}), Partition{}),
                  SkewShape(Partition({2, 1}), Partition{}));
  auto shape = Shape::make(sh);
  // cells row-major: (1,1),(1,3),(1,5),(2,2),(2,4),(3,1),(3,3),(4,2)
  Tableau t(shape, {1, 1, 1, 1, 2, 2, 2, 3});
  CHECK(t.reading_word() == std::vector<int>{3, 2, 2, 1, 2, 1, 1, 1});

  // two-row tableau 1 1 / 2 reads bottom row first
  auto two = Shape::make(SkewShape(Partition({2, 1}), Partition{}));
  CHECK(Tableau(two, {1, 1, 2}).reading_word() == std::vector<int>{2, 1, 1});
}

TEST_CASE("weight") {
  // skew tableau of shape (4,2,2)/(2,1) with entries 1 2 / 2 / 2 3
  auto shape = Shape::make(SkewShape(Partition({4, 2, 2}), Partition({2, 1})));
  Tableau t(shape, {1, 2, 2, 2, 3});
  CHECK(t.weight(3) == Composition({1, 3, 1}));
  long long total = 0;
  for (int p : t.weight(3).parts()) total += p;
  CHECK(total == t.cell_count());

  auto empty = Shape::make(SkewShape(Partition{}, Partition{}));
  CHECK(Tableau(empty, {}).weight(0) == Composition{});
}

TEST_CASE("flagged Schur polynomials") {
  SkewShape s21(Partition({2, 1}), Partition{});
  // unflagged case equals the Schur polynomial
  CHECK(flagged_schur(s21, Flag({3, 3}), 3) ==
        key_polynomial(Composition({0, 1, 2}), 3));
  // flag (2,3) matches the kappa oracle for the Demazure example
  CHECK(flagged_schur(s21, Flag({2, 3}), 3) ==
        key_polynomial(Composition({0, 2, 1}), 3));
  // two-row flagged polynomial used by the product example
  Polynomial p = flagged_schur(SkewShape(Partition({3, 2}), Partition{}), Flag({1, 3}), 3);
  Polynomial q = flagged_schur(SkewShape(Partition({2, 1}), Partition{}), Flag({1, 3}), 3);
  KeyExpansion e = key_expand(p * q);
  KeyExpansion::Map expect;
  expect[Composition({5, 1, 2})] = 1;
  expect[Composition({5, 0, 3})] = 1;
  CHECK(e == KeyExpansion(expect));
}

TEST_CASE("character multiplicativity over shuffle shapes") {
  SkewShape a(Partition({2, 1}), Partition{});
  SkewShape b(Partition({2}), Partition{});
  Flag flag({2, 3});
  int tv = 3;
  auto shape = Shape::make(ShuffleShape(a, b));
  auto tabs = enumerate_tableaux(shape, 3, shape->row_bounds(flag));
  CHECK(character(tabs, tv) == flagged_schur(a, flag, tv) * flagged_schur(b, flag, tv));
}
