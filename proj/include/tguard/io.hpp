#pragma once

// Text formats.
//
// Terrain file:
//   <n>\n
//   <x> <y>\n        (n lines, chain order, decimal integers)
// Lines whose first character is '#' and blank lines are ignored by the
// parser; serialize() never writes them.
//
// Solution report (0-based chain indices, every list ascending):
//   status <optimal|infeasible|partial>
//   guards <count>
//   <index> <x> <y> <Class>          one per guard
//   assignment <count>
//   <convex> <- <guard>              one per covered convex vertex
//   unguardable <count>
//   <index> <x> <y> <Class>          one per unguardable convex vertex

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tguard/geometry.hpp"
#include "tguard/solver.hpp"

namespace tguard {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Throws SyntaxError (1-based line) or ValidationError.
Terrain parse_terrain(std::string_view text);
std::string serialize_terrain(const Terrain& t);

Terrain read_terrain_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

std::string_view to_string(SolveStatus s);

std::string format_report(const Terrain& t, const SolveResult& r);

struct ParsedReport {
  std::string status;
  std::vector<VertexIndex> guards;
  std::map<VertexIndex, VertexIndex> assignment;
  std::vector<VertexIndex> unguardable;
};

/// Reads back format_report() output; throws SyntaxError.
ParsedReport parse_report(std::string_view text);

/// SVG 1.1 drawing of the terrain, with guards and assignment segments when
/// a solution is given. Output is a pure function of the inputs.
std::string emit_svg(const Terrain& t, const GuardSolution* sol = nullptr);

}  // namespace tguard
