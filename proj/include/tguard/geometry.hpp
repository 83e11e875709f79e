#pragma once

// Orthogonal terrains with exact integer coordinates.
//
// A terrain is stored as the chain v_0..v_{n-1}. The chain starts and ends
// with a vertical edge; the horizontal rays leaving v_0 to the left and
// v_{n-1} to the right are implicit. Vertical edges are therefore the pairs
// (v_{2m}, v_{2m+1}) and horizontal edges the pairs (v_{2m+1}, v_{2m+2}).
// Column m is the vertical edge at x = x(v_{2m}).

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tguard {

using Coord = std::int64_t;
using VertexIndex = std::size_t;

/// Coordinates must satisfy |x|, |y| <= kCoordLimit.
inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class VertexClass : std::uint8_t {
  LeftConvex,
  RightConvex,
  LeftReflex,
  RightReflex,
};

constexpr bool is_convex(VertexClass c) {
  return c == VertexClass::LeftConvex || c == VertexClass::RightConvex;
}
constexpr bool is_reflex(VertexClass c) { return !is_convex(c); }
constexpr bool is_left(VertexClass c) {
  return c == VertexClass::LeftConvex || c == VertexClass::LeftReflex;
}
constexpr bool is_right(VertexClass c) { return !is_left(c); }

std::string_view to_string(VertexClass c);

enum class ValidationCode : std::uint8_t {
  TooFewVertices,
  OddVertexCount,
  CoordinateOutOfRange,
  ZeroLengthEdge,
  DiagonalEdge,
  NonAlternatingEdges,
  NotMonotone,
};

std::string_view to_string(ValidationCode c);

/// Raised by validate(). index() names the offending vertex; for edge
/// violations it is the first endpoint of the edge.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationCode code, std::size_t index);

  ValidationCode code() const noexcept { return code_; }
  std::size_t index() const noexcept { return index_; }

 private:
  ValidationCode code_;
  std::size_t index_;
};

class Terrain {
 public:
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t column_count() const noexcept { return vertices_.size() / 2; }

  const Point& operator[](VertexIndex i) const noexcept { return vertices_[i]; }
  const Point& at(VertexIndex i) const;
  std::span<const Point> vertices() const noexcept { return vertices_; }

  /// The four-way class of vertex i. Vertices with even index are right
  /// endpoints of their horizontal edge (v_0 takes the left ray), odd
  /// indices are left endpoints. The top of each vertical edge is reflex.
  VertexClass classify(VertexIndex i) const;

  /// The other endpoint of i's vertical edge.
  static constexpr VertexIndex partner(VertexIndex i) noexcept { return i ^ 1U; }

  /// The convex vertex directly below a reflex vertex. Throws
  /// std::invalid_argument if i is convex.
  VertexIndex vertex_below(VertexIndex i) const;

  friend bool operator==(const Terrain&, const Terrain&) = default;

 private:
  explicit Terrain(std::vector<Point> v) : vertices_(std::move(v)) {}
  friend Terrain validate(std::span<const Point> raw);

  std::vector<Point> vertices_;
};

/// Checks every terrain invariant and returns the terrain, or throws
/// ValidationError naming the first violation. Checks run in this order:
/// coordinate range (per vertex), vertex count, then each edge in chain
/// order (zero length, diagonal, alternation, monotonicity).
Terrain validate(std::span<const Point> raw);

/// Reflects the terrain about x = 0 (and reverses the chain so it stays
/// x-monotone). Left and right classes swap.
Terrain mirror(const Terrain& t);

/// Sign of the doubled signed area of (a, b, c): +1 if c lies to the left
/// of the directed line a->b, -1 to the right, 0 if collinear. Exact for
/// all coordinates within kCoordLimit.
int orientation(const Point& a, const Point& b, const Point& c) noexcept;

}  // namespace tguard
