#include "tguard/cover_matrix.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <sstream>

namespace tguard {

namespace {

constexpr std::size_t kNoSlot = std::numeric_limits<std::size_t>::max();

// Hamiltonian cycle on <= 8 vertices given adjacency bitmasks; the cycle is
// anchored at the lowest vertex of `verts`.
bool has_hamiltonian_cycle(std::uint32_t verts, const std::array<std::uint32_t, 32>& adj) {
  const int start = std::countr_zero(verts);
  // reach[mask] = set of end vertices v such that a path start..v covers mask.
  std::vector<std::uint32_t> reach(std::size_t{1} << 8, 0);
  reach[1U << start] = 1U << start;
  for (std::uint32_t mask = 0; mask < (1U << 8); ++mask) {
    if ((mask & ~verts) != 0 || reach[mask] == 0) {
      continue;
    }
    for (std::uint32_t ends = reach[mask]; ends != 0; ends &= ends - 1) {
      const int v = std::countr_zero(ends);
      for (std::uint32_t next = adj[v] & verts & ~mask; next != 0; next &= next - 1) {
        const int w = std::countr_zero(next);
        reach[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  for (std::uint32_t ends = reach[verts]; ends != 0; ends &= ends - 1) {
    const int v = std::countr_zero(ends);
    if (v != start && (adj[v] >> start) & 1U) {
      return true;
    }
  }
  return false;
}

}  // namespace

CoverMatrix::CoverMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {
  row_labels.resize(rows);
  col_labels.resize(cols);
  for (std::size_t i = 0; i < rows; ++i) row_labels[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_labels[j] = j;
}

CoverMatrix CoverMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  CoverMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("CoverMatrix::from_rows: ragged rows");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, rows[i][j] != 0);
    }
  }
  return m;
}

void CoverMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  std::uint64_t& w = bits_[i * words_ + j / 64];
  w = value ? (w | bit) : (w & ~bit);
}

std::optional<std::size_t> CoverMatrix::last_in_row(std::size_t i) const noexcept {
  const auto words = row_words(i);
  for (std::size_t w = words.size(); w-- > 0;) {
    if (words[w] != 0) {
      return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words[w]));
    }
  }
  return std::nullopt;
}

CoverMatrix CoverMatrix::select_rows(std::span<const std::size_t> keep) const {
  CoverMatrix out(keep.size(), cols_);
  out.col_labels = col_labels;
  out.right_reflex_cols = right_reflex_cols;
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const std::size_t i = keep[r];
    std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(i * words_), words_,
                out.bits_.begin() + static_cast<std::ptrdiff_t>(r * words_));
    out.row_labels[r] = row_labels[i];
    if (i < right_convex_rows) {
      ++out.right_convex_rows;
    }
  }
  return out;
}

CoverMatrix CoverMatrix::select_cols(std::span<const std::size_t> keep) const {
  CoverMatrix out(rows_, keep.size());
  out.row_labels = row_labels;
  out.right_convex_rows = right_convex_rows;
  for (std::size_t c = 0; c < keep.size(); ++c) {
    const std::size_t j = keep[c];
    out.col_labels[c] = col_labels[j];
    if (j < right_reflex_cols) {
      ++out.right_reflex_cols;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (at(i, j)) {
        out.set(i, c);
      }
    }
  }
  return out;
}

CoverMatrix build_cover_matrix(const Terrain& t, const VisibilityRelation& rel) {
  const std::size_t n = t.size();
  std::vector<VertexIndex> rows;
  std::vector<VertexIndex> cols;
  std::size_t rc = 0;
  std::size_t rr = 0;

  // Chain order is x order within a class.
  for (VertexIndex v = 0; v < n; ++v) {
    if (t.classify(v) == VertexClass::RightConvex) rows.push_back(v);
  }
  rc = rows.size();
  for (VertexIndex v = n; v-- > 0;) {
    if (t.classify(v) == VertexClass::LeftConvex) rows.push_back(v);
  }
  for (VertexIndex v = n; v-- > 0;) {
    if (t.classify(v) == VertexClass::RightReflex) cols.push_back(v);
  }
  rr = cols.size();
  for (VertexIndex v = 0; v < n; ++v) {
    if (t.classify(v) == VertexClass::LeftReflex) cols.push_back(v);
  }

  std::vector<std::size_t> row_of(n, kNoSlot);
  std::vector<std::size_t> col_of(n, kNoSlot);
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;

  CoverMatrix m(rows.size(), cols.size());
  m.row_labels = std::move(rows);
  m.col_labels = std::move(cols);
  m.right_convex_rows = rc;
  m.right_reflex_cols = rr;
  for (const VisiblePair& p : rel.pairs) {
    const std::size_t i = row_of.at(p.target);
    const std::size_t j = col_of.at(p.guard);
    if (i == kNoSlot || j == kNoSlot) {
      throw std::invalid_argument("build_cover_matrix: relation pair is not (reflex, convex)");
    }
    m.set(i, j);
  }
  return m;
}

std::optional<Violation> greedy_form_violation(const CoverMatrix& m) {
  std::vector<std::vector<std::size_t>> rows_of_col(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto words = m.row_words(i);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
        rows_of_col[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))].push_back(i);
      }
    }
  }

  const std::size_t nwords = m.words_per_row();
  for (std::size_t j1 = 0; j1 < m.cols(); ++j1) {
    const auto& chain = rows_of_col[j1];
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const auto upper = m.row_words(chain[k - 1]);
      const auto lower = m.row_words(chain[k]);
      // Columns strictly after j1: mask off bits <= j1 in the first word.
      for (std::size_t w = j1 / 64; w < nwords; ++w) {
        std::uint64_t missing = upper[w] & ~lower[w];
        if (w == j1 / 64) {
          const unsigned shift = static_cast<unsigned>(j1 % 64) + 1;
          missing &= shift == 64 ? 0 : (~std::uint64_t{0} << shift);
        }
        if (missing != 0) {
          const std::size_t j2 = w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
          return Violation{chain[k - 1], chain[k], j1, j2};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_totally_balanced_bruteforce(const CoverMatrix& m) {
  const bool transpose = m.cols() < m.rows();
  const std::size_t small = transpose ? m.cols() : m.rows();
  const std::size_t large = transpose ? m.rows() : m.cols();
  if (small > kBalancedCheckLimit) {
    throw TooLargeError("is_totally_balanced_bruteforce: min(k, k') = " + std::to_string(small) +
                        " exceeds " + std::to_string(kBalancedCheckLimit));
  }

  // Support of each large-side line over the small side.
  std::vector<std::uint32_t> support(large, 0);
  for (std::size_t a = 0; a < large; ++a) {
    for (std::size_t b = 0; b < small; ++b) {
      const bool one = transpose ? m.at(a, b) : m.at(b, a);
      if (one) support[a] |= 1U << b;
    }
  }

  // A forbidden submatrix on a small-side subset S is a set of |S| distinct
  // large-side lines, each meeting S twice, covering every element of S
  // twice: a 2-regular simple graph on S. Its smallest cycle is itself
  // forbidden, so it suffices to look for a Hamiltonian cycle on some S.
  for (std::uint32_t subset = 0; subset < (1U << small); ++subset) {
    if (std::popcount(subset) < 3) {
      continue;
    }
    std::array<std::uint32_t, 32> adj{};
    for (std::uint32_t s : support) {
      const std::uint32_t inside = s & subset;
      if (std::popcount(inside) == 2) {
        const int u = std::countr_zero(inside);
        const int v = 31 - std::countl_zero(inside);
        adj[u] |= 1U << v;
        adj[v] |= 1U << u;
      }
    }
    if (has_hamiltonian_cycle(subset, adj)) {
      return false;
    }
  }
  return true;
}

std::string format_matrix(const CoverMatrix& m) {
  std::ostringstream out;
  out << "cols";
  for (VertexIndex c : m.col_labels) out << ' ' << c;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << m.row_labels[i] << ' ';
    for (std::size_t j = 0; j < m.cols(); ++j) out << (m.at(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

}  // namespace tguard
