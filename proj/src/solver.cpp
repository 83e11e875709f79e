#include "tguard/solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tguard/visibility.hpp"

namespace tguard {

namespace {

constexpr std::size_t kUncovered = std::numeric_limits<std::size_t>::max();

bool row_hits(const CoverMatrix& m, std::size_t i, std::uint32_t chosen_mask) {
  const auto words = m.row_words(i);
  return words.empty() ? false : (static_cast<std::uint32_t>(words[0]) & chosen_mask) != 0;
}

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

EmptyRowError::EmptyRowError(std::size_t row)
    : std::invalid_argument("row " + std::to_string(row) + " has no candidate column"), row_(row) {}

NotGreedyFormError::NotGreedyFormError(const Violation& v)
    : std::invalid_argument("matrix not in standard greedy form: rows " + std::to_string(v.i1) +
                            "," + std::to_string(v.i2) + " cols " + std::to_string(v.j1) + "," +
                            std::to_string(v.j2)),
      violation_(v) {}

CoverResult greedy_cover(const CoverMatrix& m, bool check_form) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row_empty(i)) {
      throw EmptyRowError(i);
    }
  }
  if (check_form) {
    if (auto v = greedy_form_violation(m)) {
      throw NotGreedyFormError(*v);
    }
  }

  CoverResult out;
  out.row_cover.assign(m.rows(), kUncovered);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (out.row_cover[i] != kUncovered) {
      continue;
    }
    const std::size_t j = *m.last_in_row(i);
    out.columns.push_back(j);
    for (std::size_t r = i; r < m.rows(); ++r) {
      if (out.row_cover[r] == kUncovered && m.at(r, j)) {
        out.row_cover[r] = j;
      }
    }
  }
  return out;
}

CoverOptimum brute_force_optimum(const CoverMatrix& m) {
  if (m.cols() > kBruteForceColumnLimit) {
    throw TooManyColumnsError("brute_force_optimum: " + std::to_string(m.cols()) +
                              " columns exceeds " + std::to_string(kBruteForceColumnLimit));
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row_empty(i)) {
      throw EmptyRowError(i);
    }
  }
  for (std::size_t size = 0; size <= m.cols(); ++size) {
    std::vector<std::size_t> combo(size);
    for (std::size_t j = 0; j < size; ++j) combo[j] = j;
    do {
      std::uint32_t mask = 0;
      for (std::size_t j : combo) mask |= 1U << j;
      bool covers = true;
      for (std::size_t i = 0; i < m.rows() && covers; ++i) {
        covers = row_hits(m, i, mask);
      }
      if (covers) {
        return {size, combo};
      }
    } while (next_combination(combo, m.cols()));
  }
  // Unreachable: every row is non-empty, so all columns cover.
  return {m.cols(), {}};
}

CoverMatrix guardable_rows(const CoverMatrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.row_empty(i)) keep.push_back(i);
  }
  return m.select_rows(keep);
}

GuardSolution to_guard_solution(const CoverMatrix& m, const CoverResult& cover) {
  GuardSolution sol;
  for (std::size_t j : cover.columns) {
    sol.guards.push_back(m.col_labels[j]);
  }
  std::sort(sol.guards.begin(), sol.guards.end());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    sol.assignment.emplace(m.row_labels[i], m.col_labels[cover.row_cover[i]]);
  }
  return sol;
}

SolveResult solve(const Terrain& t, const SolveOptions& opts) {
  const CoverMatrix full = build_cover_matrix(t, visibility_relation(t));

  InfeasibilityReport report;
  for (std::size_t i = 0; i < full.rows(); ++i) {
    if (full.row_empty(i)) {
      report.unguardable.push_back(full.row_labels[i]);
    }
  }
  std::sort(report.unguardable.begin(), report.unguardable.end());

  SolveResult result;
  if (report.unguardable.empty()) {
    result.status = SolveStatus::Optimal;
    result.solution = to_guard_solution(full, greedy_cover(full, opts.check_form));
    return result;
  }
  result.infeasibility = std::move(report);
  if (!opts.allow_partial) {
    result.status = SolveStatus::Infeasible;
    return result;
  }
  const CoverMatrix sub = guardable_rows(full);
  result.status = SolveStatus::Partial;
  result.solution = to_guard_solution(sub, greedy_cover(sub, opts.check_form));
  return result;
}

}  // namespace tguard
