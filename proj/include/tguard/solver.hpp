#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tguard/cover_matrix.hpp"
#include "tguard/geometry.hpp"

namespace tguard {

class EmptyRowError : public std::invalid_argument {
 public:
  explicit EmptyRowError(std::size_t row);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class NotGreedyFormError : public std::invalid_argument {
 public:
  explicit NotGreedyFormError(const Violation& v);
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

class TooManyColumnsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CoverResult {
  /// Chosen column indices in the order they were picked.
  std::vector<std::size_t> columns;
  /// For each row, the first picked column that covers it.
  std::vector<std::size_t> row_cover;
};

/// Greedy cover of a matrix in standard greedy form: the first uncovered row
/// (top to bottom) takes its highest-index column. Any other column covering
/// that row covers a subset of the later rows, so the cover is minimum.
///
/// Throws EmptyRowError for a row without ones, NotGreedyFormError when
/// check_form is set and the matrix has the forbidden pattern.
CoverResult greedy_cover(const CoverMatrix& m, bool check_form = true);

inline constexpr std::size_t kBruteForceColumnLimit = 25;

struct CoverOptimum {
  std::size_t size = 0;
  /// Lexicographically smallest minimum cover (ascending column indices).
  std::vector<std::size_t> witness;
};

/// Exhaustive minimum cover: tries every column subset of size 0, 1, 2, ...
/// and stops at the first size with a cover. Needs k' <= 25.
CoverOptimum brute_force_optimum(const CoverMatrix& m);

struct GuardSolution {
  /// Reflex vertex indices, ascending.
  std::vector<VertexIndex> guards;
  /// Convex vertex -> the guard that first covered it during the greedy scan.
  std::map<VertexIndex, VertexIndex> assignment;

  std::size_t size() const noexcept { return guards.size(); }

  friend bool operator==(const GuardSolution&, const GuardSolution&) = default;
};

struct InfeasibilityReport {
  /// Convex vertices nobody can see, ascending.
  std::vector<VertexIndex> unguardable;

  friend bool operator==(const InfeasibilityReport&, const InfeasibilityReport&) = default;
};

enum class SolveStatus { Optimal, Infeasible, Partial };

struct SolveOptions {
  /// On infeasible instances also cover every guardable convex vertex.
  bool allow_partial = false;
  /// Run the greedy-form check before covering.
  bool check_form = true;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  /// Present for Optimal and Partial.
  std::optional<GuardSolution> solution;
  /// Present for Infeasible and Partial.
  std::optional<InfeasibilityReport> infeasibility;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

/// Minimum set of reflex guards seeing every convex vertex.
SolveResult solve(const Terrain& t, const SolveOptions& opts = {});

/// The matrix with its all-zero rows removed (the guardable subproblem).
CoverMatrix guardable_rows(const CoverMatrix& m);

/// Maps a column cover back to a guard solution on the terrain.
GuardSolution to_guard_solution(const CoverMatrix& m, const CoverResult& cover);

}  // namespace tguard
