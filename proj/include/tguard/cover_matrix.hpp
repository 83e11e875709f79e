#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tguard/geometry.hpp"
#include "tguard/visibility.hpp"

namespace tguard {

/// Dense 0/1 matrix stored as one bit row per constraint. Rows are convex
/// vertices and columns reflex vertices when built from a terrain; the
/// checkers and covers below work on any matrix.
class CoverMatrix {
 public:
  CoverMatrix() = default;
  CoverMatrix(std::size_t rows, std::size_t cols);

  /// From explicit 0/1 rows (all of equal length); labels are 0..k-1, 0..k'-1.
  static CoverMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool at(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept;

  std::span<const std::uint64_t> row_words(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Highest column index with a 1 in row i, if any.
  std::optional<std::size_t> last_in_row(std::size_t i) const noexcept;
  bool row_empty(std::size_t i) const noexcept { return !last_in_row(i).has_value(); }

  /// Chain index of the vertex behind each row / column.
  std::vector<VertexIndex> row_labels;
  std::vector<VertexIndex> col_labels;

  /// Leading rows that are right convex, leading columns that are right reflex.
  std::size_t right_convex_rows = 0;
  std::size_t right_reflex_cols = 0;

  /// Same matrix restricted to the given rows (kept in the given order).
  CoverMatrix select_rows(std::span<const std::size_t> keep) const;
  /// Same matrix restricted to the given columns (kept in the given order).
  CoverMatrix select_cols(std::span<const std::size_t> keep) const;

  friend bool operator==(const CoverMatrix&, const CoverMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Constraint matrix of the guarding program in the permuted order:
/// rows   = right convex by increasing x, then left convex by decreasing x;
/// cols   = right reflex by decreasing x, then left reflex by increasing x.
/// entry (i, j) is 1 iff col_labels[j] sees row_labels[i]. Empty rows are kept.
CoverMatrix build_cover_matrix(const Terrain& t, const VisibilityRelation& rel);

/// Row pair i1 < i2 and column pair j1 < j2 carrying the forbidden pattern
/// [[1, 1], [1, 0]].
struct Violation {
  std::size_t i1, i2, j1, j2;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// nullopt iff the matrix is in standard greedy form, otherwise a witness.
///
/// For a fixed column j1, the rows with a 1 in j1 form a chain r_1 < r_2 < ...
/// The matrix is in greedy form iff for every such chain every row contains
/// its predecessor on the columns after j1. Containment is transitive, so only
/// consecutive pairs need checking: O(nnz * k' / 64).
std::optional<Violation> greedy_form_violation(const CoverMatrix& m);

inline bool is_standard_greedy_form(const CoverMatrix& m) {
  return !greedy_form_violation(m).has_value();
}

class TooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kBalancedCheckLimit = 8;

/// Exhaustive totally-balanced test: true iff no square submatrix of size
/// s >= 2 has every row and column sum equal to 2 with pairwise distinct
/// columns (so all-ones 2x2 blocks are allowed; what is forbidden is a
/// cycle incidence matrix of length >= 3). Throws TooLargeError if
/// min(k, k') > kBalancedCheckLimit.
bool is_totally_balanced_bruteforce(const CoverMatrix& m);

/// One line per row: the label, a space, then '0'/'1' per column. The first
/// line lists the column labels.
std::string format_matrix(const CoverMatrix& m);

}  // namespace tguard
