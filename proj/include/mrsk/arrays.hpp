#pragma once

// Two-rowed arrays and nonnegative integer matrices with prescribed margins.
//
// Index convention. A matrix M has n rows and n' columns; row i corresponds to
// the i-th step of the first flag F, column j to the j-th step of F'. The
// array records the pair (u = j over w = i) exactly M(i, j) times:
//
//            col j (u) ->
//   row i    [ M(1,1) M(1,2) ... ]
//   (w)      [ M(2,1) M(2,2) ... ]
//     |
//     v
//
// so u ranges over columns (content = column sums) and w over rows
// (content = row sums). Note the transpose relative to the "(j,i)-entry"
// phrasing sometimes used for the pair (i over j).
//
// The canonical array order sorts by u ascending, and by w *descending* among
// equal u. The lexicographic order (w ascending among equal u) is only
// available through to_lexicographic for cross-checks.

#include <compare>
#include <vector>

#include "mrsk/combinat.hpp"

namespace mrsk {

struct TwoRowArray {
  std::vector<int> u;  // top row
  std::vector<int> w;  // bottom row

  std::size_t size() const { return u.size(); }
  /// u weakly increasing, w weakly decreasing on runs of equal u.
  bool is_ordered() const;

  friend auto operator<=>(const TwoRowArray&, const TwoRowArray&) = default;
};

class MarginMatrix {
public:
  MarginMatrix() = default;
  /// Row-major grid; must be rectangular with nonnegative entries.
  explicit MarginMatrix(std::vector<std::vector<int>> entries);

  static MarginMatrix zeros(int rows, int cols);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return entries_.empty() ? 0 : static_cast<int>(entries_.front().size()); }
  /// 1-based.
  int operator()(int i, int j) const { return entries_[i - 1][j - 1]; }
  int& operator()(int i, int j) { return entries_[i - 1][j - 1]; }

  const std::vector<std::vector<int>>& entries() const { return entries_; }
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  int total() const;

  friend auto operator<=>(const MarginMatrix&, const MarginMatrix&) = default;

private:
  std::vector<std::vector<int>> entries_;
};

/// Expands M(i,j) copies of (u=j, w=i) in canonical order.
TwoRowArray matrix_to_array(const MarginMatrix& m);

/// Inverse of matrix_to_array; requires w <= rows and u <= cols.
MarginMatrix array_to_matrix(const TwoRowArray& a, int rows, int cols);

/// Stable sort into canonical order: u ascending, then w descending.
TwoRowArray reorder_to_paper(const std::vector<int>& u, const std::vector<int>& w);

/// Same multiset of columns in lexicographic order (u ascending, w ascending).
TwoRowArray to_lexicographic(const TwoRowArray& a);

/// Every nonnegative matrix with row sums mu and column sums nu, exactly once,
/// in lexicographic order of the row-major entries.
std::vector<MarginMatrix> enumerate_margin_matrices(const Composition& mu, const Composition& nu);

}  // namespace mrsk
