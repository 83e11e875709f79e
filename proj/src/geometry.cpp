#include "tguard/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace tguard {

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::LeftConvex: return "LeftConvex";
    case VertexClass::RightConvex: return "RightConvex";
    case VertexClass::LeftReflex: return "LeftReflex";
    case VertexClass::RightReflex: return "RightReflex";
  }
  return "?";
}

std::string_view to_string(ValidationCode c) {
  switch (c) {
    case ValidationCode::TooFewVertices: return "TooFewVertices";
    case ValidationCode::OddVertexCount: return "OddVertexCount";
    case ValidationCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ValidationCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ValidationCode::DiagonalEdge: return "DiagonalEdge";
    case ValidationCode::NonAlternatingEdges: return "NonAlternatingEdges";
    case ValidationCode::NotMonotone: return "NotMonotone";
  }
  return "?";
}

ValidationError::ValidationError(ValidationCode code, std::size_t index)
    : std::runtime_error(std::string(to_string(code)) + " at vertex " + std::to_string(index)),
      code_(code),
      index_(index) {}

const Point& Terrain::at(VertexIndex i) const {
  if (i >= vertices_.size()) {
    throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
  }
  return vertices_[i];
}

VertexClass Terrain::classify(VertexIndex i) const {
  const Point& p = at(i);
  const bool reflex = p.y > vertices_[partner(i)].y;
  const bool right = (i % 2) == 0;
  if (reflex) {
    return right ? VertexClass::RightReflex : VertexClass::LeftReflex;
  }
  return right ? VertexClass::RightConvex : VertexClass::LeftConvex;
}

VertexIndex Terrain::vertex_below(VertexIndex i) const {
  if (!is_reflex(classify(i))) {
    throw std::invalid_argument("vertex_below: vertex " + std::to_string(i) + " is convex");
  }
  return partner(i);
}

Terrain validate(std::span<const Point> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (std::abs(raw[i].x) > kCoordLimit || std::abs(raw[i].y) > kCoordLimit) {
      throw ValidationError(ValidationCode::CoordinateOutOfRange, i);
    }
  }
  if (raw.size() < 2) {
    throw ValidationError(ValidationCode::TooFewVertices, raw.size());
  }
  if (raw.size() % 2 != 0) {
    throw ValidationError(ValidationCode::OddVertexCount, raw.size());
  }
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    const Coord dx = raw[i + 1].x - raw[i].x;
    const Coord dy = raw[i + 1].y - raw[i].y;
    if (dx == 0 && dy == 0) {
      throw ValidationError(ValidationCode::ZeroLengthEdge, i);
    }
    if (dx != 0 && dy != 0) {
      throw ValidationError(ValidationCode::DiagonalEdge, i);
    }
    const bool should_be_vertical = (i % 2) == 0;
    if (should_be_vertical != (dx == 0)) {
      throw ValidationError(ValidationCode::NonAlternatingEdges, i);
    }
    if (dx < 0) {
      throw ValidationError(ValidationCode::NotMonotone, i);
    }
  }
  return Terrain(std::vector<Point>(raw.begin(), raw.end()));
}

Terrain mirror(const Terrain& t) {
  std::vector<Point> out(t.vertices().rbegin(), t.vertices().rend());
  for (Point& p : out) {
    p.x = -p.x;
  }
  return validate(out);
}

int orientation(const Point& a, const Point& b, const Point& c) noexcept {
  using Wide = __int128;
  const Wide det = Wide{b.x - a.x} * Wide{c.y - a.y} - Wide{b.y - a.y} * Wide{c.x - a.x};
  return (det > 0) - (det < 0);
}

}  // namespace tguard
