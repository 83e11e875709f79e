#include "tguard/visibility.hpp"

#include <algorithm>
#include <string>

namespace tguard {

namespace {

using Wide = __int128;

// Signed position of p relative to the line through l and r (l.x < r.x):
// positive above, negative below, zero on it.
int side_of(const Point& l, const Point& r, const Point& p) noexcept {
  return orientation(l, r, p);
}

// Guards of convex vertex c by sweeping columns away from c toward the only
// side that can hold guards. The steepest column top seen so far (as viewed
// from c) blocks every later reflex vertex that is not strictly steeper.
std::vector<VertexIndex> sweep_guards(const Terrain& t, VertexIndex c) {
  const Point& pc = t[c];
  const VertexClass cls = t.classify(c);
  const bool walk_left = cls == VertexClass::RightConvex;
  const std::size_t col_c = c / 2;
  const std::size_t cols = t.column_count();

  // elevation(p) > elevation(q) as seen from c; both on the same side.
  auto steeper = [&](const Point& p, const Point& q) {
    const Wide run_p = p.x > pc.x ? p.x - pc.x : pc.x - p.x;
    const Wide run_q = q.x > pc.x ? q.x - pc.x : pc.x - q.x;
    return Wide{p.y - pc.y} * run_q > Wide{q.y - pc.y} * run_p;
  };

  std::vector<VertexIndex> out;
  const Point* blocker = nullptr;
  auto visit = [&](std::size_t m) {
    const VertexIndex lo = 2 * m;
    const VertexIndex top = t[lo].y > t[lo + 1].y ? lo : lo + 1;
    // Right reflex tops have even index, left reflex tops odd.
    const bool wanted_class = walk_left ? (top == lo) : (top == lo + 1);
    if (wanted_class && t[top].y > pc.y && (blocker == nullptr || steeper(t[top], *blocker))) {
      out.push_back(top);
    }
    if (blocker == nullptr || steeper(t[top], *blocker)) {
      blocker = &t[top];
    }
  };

  if (walk_left) {
    for (std::size_t m = col_c; m-- > 0;) {
      visit(m);
    }
    std::reverse(out.begin(), out.end());
  } else {
    for (std::size_t m = col_c + 1; m < cols; ++m) {
      visit(m);
    }
  }
  return out;
}

void append_pairs(std::vector<VisiblePair>& pairs, VertexIndex target,
                  const std::vector<VertexIndex>& guards) {
  for (VertexIndex g : guards) {
    pairs.push_back({g, target});
  }
}

}  // namespace

bool sees(const Terrain& t, VertexIndex a, VertexIndex b) {
  const Point& pa = t.at(a);
  const Point& pb = t.at(b);
  if (pa.x == pb.x) {
    return false;
  }
  const bool a_left = pa.x < pb.x;
  const Point& l = a_left ? pa : pb;
  const Point& r = a_left ? pb : pa;
  const std::size_t col_l = (a_left ? a : b) / 2;
  const std::size_t col_r = (a_left ? b : a) / 2;

  // Horizontal edge m runs from column m (vertex 2m+1) to column m+1 (2m+2).
  for (std::size_t m = col_l; m < col_r; ++m) {
    const Point& e0 = t[2 * m + 1];
    const Point& e1 = t[2 * m + 2];
    const int s0 = side_of(l, r, e0);
    const int s1 = side_of(l, r, e1);
    if (s0 > 0 || s1 > 0) {
      return false;
    }
    if (s0 == 0 && (m > col_l || s1 == 0)) {
      return false;
    }
    if (s1 == 0 && m + 1 < col_r) {
      return false;
    }
  }
  return true;
}

NotConvexError::NotConvexError(VertexIndex i)
    : std::invalid_argument("vertex " + std::to_string(i) + " is not convex"), index_(i) {}

std::vector<VertexIndex> candidate_guards(const Terrain& t, VertexIndex c) {
  const VertexClass cls = t.classify(c);
  if (!is_convex(cls)) {
    throw NotConvexError(c);
  }
  const Point& pc = t[c];
  const VertexClass guard_cls =
      cls == VertexClass::RightConvex ? VertexClass::RightReflex : VertexClass::LeftReflex;

  std::vector<VertexIndex> out;
  for (VertexIndex r = 0; r < t.size(); ++r) {
    if (t.classify(r) != guard_cls || t[r].y <= pc.y) {
      continue;
    }
    const bool right_side = t[r].x > pc.x;
    if ((guard_cls == VertexClass::RightReflex) == right_side) {
      continue;
    }
    if (sees(t, r, c)) {
      out.push_back(r);
    }
  }
  return out;
}

std::span<const VisiblePair> VisibilityRelation::of_target(VertexIndex target) const {
  auto lo = std::lower_bound(pairs.begin(), pairs.end(), target,
                             [](const VisiblePair& p, VertexIndex v) { return p.target < v; });
  auto hi = std::upper_bound(lo, pairs.end(), target,
                             [](VertexIndex v, const VisiblePair& p) { return v < p.target; });
  return {lo, hi};
}

VisibilityRelation visibility_relation(const Terrain& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<VertexIndex>> per_vertex(n);
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto c = static_cast<VertexIndex>(i);
    if (is_convex(t.classify(c))) {
      per_vertex[c] = sweep_guards(t, c);
    }
  }

  VisibilityRelation rel;
  for (VertexIndex c = 0; c < n; ++c) {
    append_pairs(rel.pairs, c, per_vertex[c]);
  }
  return rel;
}

VisibilityRelation visibility_relation_reference(const Terrain& t) {
  VisibilityRelation rel;
  for (VertexIndex c = 0; c < t.size(); ++c) {
    if (is_convex(t.classify(c))) {
      append_pairs(rel.pairs, c, candidate_guards(t, c));
    }
  }
  return rel;
}

}  // namespace tguard
