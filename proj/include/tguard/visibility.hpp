#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "tguard/geometry.hpp"

namespace tguard {

/// True iff every point of the open segment ab lies strictly above the
/// terrain. Symmetric; false when x(a) == x(b). Throws std::out_of_range on
/// a bad index.
///
/// The terrain over the open x-range is the set of horizontal edges between
/// the two endpoint columns. Each must lie strictly below the segment on its
/// part of the open range, so an edge endpoint strictly inside the range must
/// be strictly below the line and an endpoint on an end column may touch it.
bool sees(const Terrain& t, VertexIndex a, VertexIndex b);

class NotConvexError : public std::invalid_argument {
 public:
  explicit NotConvexError(VertexIndex i);
  VertexIndex index() const noexcept { return index_; }

 private:
  VertexIndex index_;
};

/// Reflex vertices that see convex vertex c, ascending by chain index.
/// Candidates are pruned first: a right convex vertex can only be seen by a
/// higher right reflex vertex on its left, a left convex vertex by a higher
/// left reflex vertex on its right.
std::vector<VertexIndex> candidate_guards(const Terrain& t, VertexIndex c);

struct VisiblePair {
  VertexIndex guard;
  VertexIndex target;

  friend bool operator==(const VisiblePair&, const VisiblePair&) = default;
};

/// All (reflex guard, convex target) pairs with sees(guard, target), sorted by
/// target then guard.
struct VisibilityRelation {
  std::vector<VisiblePair> pairs;

  /// Guards of one target, ascending; empty span if none.
  std::span<const VisiblePair> of_target(VertexIndex target) const;

  friend bool operator==(const VisibilityRelation&, const VisibilityRelation&) = default;
};

/// Per-convex-vertex angular sweep, parallelised over convex vertices with
/// OpenMP when available. O(n) per convex vertex.
VisibilityRelation visibility_relation(const Terrain& t);

/// Serial reference: candidate_guards() for each convex vertex in chain order.
VisibilityRelation visibility_relation_reference(const Terrain& t);

}  // namespace tguard
