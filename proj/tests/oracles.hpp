#pragma once

// Independent oracles for the test suites. None of these call into the
// library's visibility or cover code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tguard/cover_matrix.hpp"
#include "tguard/geometry.hpp"

namespace tguard::oracle {

/// Terrain height just inside each open gap between columns, at every
/// interior column, and at the gap midpoints, compared exactly against the
/// segment in coordinates with x scaled by 2^40. Valid while coordinates stay
/// below 2^12 in magnitude.
inline bool sees_sampled(const Terrain& t, VertexIndex a, VertexIndex b) {
  using Wide = __int128;
  const Point pa = t[a];
  const Point pb = t[b];
  if (pa.x == pb.x) return false;
  const Point l = pa.x < pb.x ? pa : pb;
  const Point r = pa.x < pb.x ? pb : pa;
  constexpr Wide kScale = Wide{1} << 40;

  // Strictly below the segment at scaled abscissa X.
  auto below = [&](Wide X, Coord h) {
    const Wide lx = Wide{l.x} * kScale;
    const Wide rx = Wide{r.x} * kScale;
    const Wide det = (rx - lx) * Wide{h - l.y} - Wide{r.y - l.y} * (X - lx);
    return det < 0;
  };

  // Terrain as (x, height) columns from scratch.
  struct Column { Coord x; Coord top; };
  std::vector<Column> cols;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (cols.empty() || cols.back().x != t[i].x) {
      cols.push_back({t[i].x, t[i].y});
    } else {
      cols.back().top = std::max(cols.back().top, t[i].y);
    }
  }
  // Height of the horizontal piece leaving column m to the right.
  auto piece_height = [&](std::size_t m) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i].y == t[i + 1].y && t[i].x == cols[m].x) return t[i].y;
    }
    return Coord{0};
  };

  for (std::size_t m = 0; m + 1 < cols.size(); ++m) {
    const Coord x0 = cols[m].x;
    const Coord x1 = cols[m + 1].x;
    if (x1 <= l.x || x0 >= r.x) continue;
    const Coord h = piece_height(m);
    const Wide X0 = Wide{x0} * kScale;
    const Wide X1 = Wide{x1} * kScale;
    if (!below(X0 + 1, h) || !below((X0 + X1) / 2, h) || !below(X1 - 1, h)) return false;
  }
  for (const Column& c : cols) {
    if (c.x > l.x && c.x < r.x && !below(Wide{c.x} * kScale, c.top)) return false;
  }
  return true;
}

/// Every reflex vertex that sees c according to `pred`.
template <typename Pred>
std::vector<VertexIndex> all_reflex_seeing(const Terrain& t, VertexIndex c, Pred&& pred) {
  std::vector<VertexIndex> out;
  for (VertexIndex r = 0; r < t.size(); ++r) {
    if (is_reflex(t.classify(r)) && pred(t, r, c)) out.push_back(r);
  }
  return out;
}

/// Quadruple scan for the [[1,1],[1,0]] pattern.
inline bool has_forbidden_pattern(const CoverMatrix& m) {
  for (std::size_t i1 = 0; i1 < m.rows(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < m.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < m.cols(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < m.cols(); ++j2)
          if (m.at(i1, j1) && m.at(i1, j2) && m.at(i2, j1) && !m.at(i2, j2)) return true;
  return false;
}

inline bool is_pattern_at(const CoverMatrix& m, const Violation& v) {
  return v.i1 < v.i2 && v.j1 < v.j2 && m.at(v.i1, v.j1) && m.at(v.i1, v.j2) &&
         m.at(v.i2, v.j1) && !m.at(v.i2, v.j2);
}

/// Literal enumeration of square submatrices (rows x cols subsets of equal
/// size >= 2) with all line sums 2 and pairwise distinct columns. Tiny only.
inline bool totally_balanced_literal(const CoverMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t kp = m.cols();
  for (std::uint32_t rs = 0; rs < (1U << k); ++rs) {
    const int s = __builtin_popcount(rs);
    if (s < 2) continue;
    for (std::uint32_t cs = 0; cs < (1U << kp); ++cs) {
      if (__builtin_popcount(cs) != s) continue;
      bool sums_two = true;
      std::vector<std::uint32_t> col_sets;
      for (std::size_t j = 0; j < kp && sums_two; ++j) {
        if (!((cs >> j) & 1U)) continue;
        std::uint32_t set = 0;
        for (std::size_t i = 0; i < k; ++i)
          if (((rs >> i) & 1U) && m.at(i, j)) set |= 1U << i;
        sums_two = __builtin_popcount(set) == 2;
        col_sets.push_back(set);
      }
      for (std::size_t i = 0; i < k && sums_two; ++i) {
        if (!((rs >> i) & 1U)) continue;
        int sum = 0;
        for (std::size_t j = 0; j < kp; ++j)
          if (((cs >> j) & 1U) && m.at(i, j)) ++sum;
        sums_two = sum == 2;
      }
      if (!sums_two) continue;
      std::sort(col_sets.begin(), col_sets.end());
      if (std::adjacent_find(col_sets.begin(), col_sets.end()) == col_sets.end()) return false;
    }
  }
  return true;
}

inline bool covers(const CoverMatrix& m, const std::vector<std::size_t>& cols) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool hit = false;
    for (std::size_t j : cols) hit = hit || m.at(i, j);
    if (!hit) return false;
  }
  return true;
}

/// Minimum cover size over all 2^k' column subsets; -1 if none covers.
inline int min_cover_exhaustive(const CoverMatrix& m) {
  int best = -1;
  const std::size_t kp = m.cols();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kp); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (best >= 0 && size >= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m.rows() && ok; ++i) {
      bool hit = false;
      for (std::size_t j = 0; j < kp && !hit; ++j) hit = ((mask >> j) & 1U) && m.at(i, j);
      ok = hit;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace tguard::oracle
