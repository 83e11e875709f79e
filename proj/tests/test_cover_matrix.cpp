#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tguard/cover_matrix.hpp"
#include "tguard/generator.hpp"

using namespace tguard;

namespace {

CoverMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, unsigned density) {
  CoverMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.next() % 100 < density);
  return m;
}

CoverMatrix built(const Terrain& t) { return build_cover_matrix(t, visibility_relation(t)); }

}  // namespace

TEST_CASE("build: square valley") {
  const Terrain t = validate(std::vector<Point>{{0, 10}, {0, 0}, {10, 0}, {10, 10}});
  const CoverMatrix m = built(t);
  CHECK(m.row_labels == std::vector<VertexIndex>{2, 1});
  CHECK(m.col_labels == std::vector<VertexIndex>{0, 3});
  CHECK(m.right_convex_rows == 1);
  CHECK(m.right_reflex_cols == 1);
  CHECK(m == [&] {
    CoverMatrix e = CoverMatrix::from_rows({{1, 0}, {0, 1}});
    e.row_labels = {2, 1};
    e.col_labels = {0, 3};
    e.right_convex_rows = 1;
    e.right_reflex_cols = 1;
    return e;
  }());
  CHECK(format_matrix(m) == "cols 0 3\n2 10\n1 01\n");
}

TEST_CASE("build: staircase gives an all-zero matrix in permuted order") {
  const CoverMatrix m = built(descending_staircase(3, 2, 2));
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 3);
  CHECK(m.row_labels == std::vector<VertexIndex>{5, 3, 1});
  CHECK(m.col_labels == std::vector<VertexIndex>{4, 2, 0});
  for (std::size_t i = 0; i < 3; ++i) CHECK(m.row_empty(i));
}

TEST_CASE("build: permutation, labels, and zero off-diagonal blocks") {
  std::vector<Terrain> corpus = testing::random_corpus(300, 1, 25);
  for (const Terrain& t : testing::comb_corpus(3)) corpus.push_back(t);
  for (const Terrain& t : corpus) {
    const CoverMatrix m = built(t);
    REQUIRE(m.rows() == t.size() / 2);
    REQUIRE(m.cols() == t.size() / 2);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const VertexClass c = t.classify(m.row_labels[i]);
      CHECK(c == (i < m.right_convex_rows ? VertexClass::RightConvex : VertexClass::LeftConvex));
      if (i > 0 && i != m.right_convex_rows) {
        const Coord prev = t[m.row_labels[i - 1]].x;
        const Coord cur = t[m.row_labels[i]].x;
        CHECK((i < m.right_convex_rows ? prev < cur : prev > cur));
      }
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const VertexClass c = t.classify(m.col_labels[j]);
      CHECK(c == (j < m.right_reflex_cols ? VertexClass::RightReflex : VertexClass::LeftReflex));
      if (j > 0 && j != m.right_reflex_cols) {
        const Coord prev = t[m.col_labels[j - 1]].x;
        const Coord cur = t[m.col_labels[j]].x;
        CHECK((j < m.right_reflex_cols ? prev > cur : prev < cur));
      }
    }
    std::vector<VertexIndex> all(m.row_labels);
    all.insert(all.end(), m.col_labels.begin(), m.col_labels.end());
    std::sort(all.begin(), all.end());
    for (VertexIndex v = 0; v < t.size(); ++v) CHECK(all[v] == v);

    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const bool rc = i < m.right_convex_rows;
        const bool rr = j < m.right_reflex_cols;
        if (rc != rr) CHECK_FALSE(m.at(i, j));
        CHECK(m.at(i, j) == sees(t, m.col_labels[j], m.row_labels[i]));
      }
  }
}

TEST_CASE("standard greedy form examples") {
  const auto bad = greedy_form_violation(CoverMatrix::from_rows({{1, 1}, {1, 0}}));
  REQUIRE(bad.has_value());
  CHECK(*bad == Violation{0, 1, 0, 1});
  CHECK(is_standard_greedy_form(CoverMatrix::from_rows({{1, 1}, {0, 1}})));
  CHECK(is_standard_greedy_form(CoverMatrix::from_rows({{1, 1}, {1, 1}})));
  CHECK(is_standard_greedy_form(CoverMatrix(0, 0)));
  CHECK(is_standard_greedy_form(CoverMatrix(3, 0)));
  // Pattern straddling a word boundary.
  CoverMatrix wide(2, 130);
  wide.set(0, 63);
  wide.set(0, 128);
  wide.set(1, 63);
  const auto v = greedy_form_violation(wide);
  REQUIRE(v.has_value());
  CHECK(*v == Violation{0, 1, 63, 128});
}

TEST_CASE("greedy form check agrees with the quadruple scan") {
  SplitMix64 rng(2024);
  int in_form = 0;
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t rows = 1 + rng.next() % 7;
    const std::size_t cols = 1 + rng.next() % (iter % 3 == 0 ? 70 : 7);
    const CoverMatrix m = random_matrix(rng, rows, cols, static_cast<unsigned>(5 + rng.next() % 60));
    const auto v = greedy_form_violation(m);
    CHECK(v.has_value() == oracle::has_forbidden_pattern(m));
    if (v) CHECK(oracle::is_pattern_at(m, *v));
    in_form += v ? 0 : 1;
  }
  CHECK(in_form > 100);
}

TEST_CASE("totally balanced examples") {
  CHECK(is_totally_balanced_bruteforce(CoverMatrix::from_rows({{1, 0}, {0, 1}})));
  CHECK(is_totally_balanced_bruteforce(CoverMatrix::from_rows({{1, 1}, {1, 1}})));
  CHECK_FALSE(is_totally_balanced_bruteforce(CoverMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})));
  // 4-cycle hidden among extra lines.
  CHECK_FALSE(is_totally_balanced_bruteforce(CoverMatrix::from_rows(
      {{1, 1, 0, 0, 1}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 1}, {1, 0, 0, 1, 0}, {1, 1, 1, 1, 1}})));
  CHECK_THROWS_AS(is_totally_balanced_bruteforce(CoverMatrix(9, 9)), TooLargeError);
  CHECK_NOTHROW(is_totally_balanced_bruteforce(CoverMatrix(8, 300)));
  CHECK_NOTHROW(is_totally_balanced_bruteforce(CoverMatrix(300, 8)));
}

TEST_CASE("totally balanced check agrees with literal submatrix enumeration") {
  SplitMix64 rng(7);
  int unbalanced = 0;
  for (int iter = 0; iter < 1500; ++iter) {
    const std::size_t rows = 1 + rng.next() % 5;
    const std::size_t cols = 1 + rng.next() % 5;
    const CoverMatrix m = random_matrix(rng, rows, cols, static_cast<unsigned>(20 + rng.next() % 60));
    const bool tb = is_totally_balanced_bruteforce(m);
    CHECK(tb == oracle::totally_balanced_literal(m));
    unbalanced += tb ? 0 : 1;
    // Greedy form implies totally balanced.
    if (is_standard_greedy_form(m)) CHECK(tb);
  }
  CHECK(unbalanced > 20);
}

TEST_CASE("built matrices are in standard greedy form and totally balanced") {
  for (const Terrain& t : testing::random_corpus(300, 1, 16)) {
    const CoverMatrix m = built(t);
    CHECK(is_standard_greedy_form(m));
    CHECK_FALSE(oracle::has_forbidden_pattern(m));
    if (std::min(m.rows(), m.cols()) <= kBalancedCheckLimit) {
      CHECK(is_totally_balanced_bruteforce(m));
    }
  }
}

TEST_CASE("select_rows and select_cols keep labels and block counts") {
  const CoverMatrix m = built(valley_comb(2, 3, 4, 2));
  const std::vector<std::size_t> rows{0, 3};
  const CoverMatrix r = m.select_rows(rows);
  CHECK(r.rows() == 2);
  CHECK(r.row_labels == std::vector<VertexIndex>{m.row_labels[0], m.row_labels[3]});
  CHECK(r.right_convex_rows == 1);
  const std::vector<std::size_t> cols{1, 2};
  const CoverMatrix c = m.select_cols(cols);
  CHECK(c.col_labels == std::vector<VertexIndex>{m.col_labels[1], m.col_labels[2]});
  CHECK(c.right_reflex_cols == 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    CHECK(c.at(i, 0) == m.at(i, 1));
    CHECK(c.at(i, 1) == m.at(i, 2));
  }
}
