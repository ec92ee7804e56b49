#include "mrsk/arrays.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "mrsk/error.hpp"

namespace mrsk {

bool TwoRowArray::is_ordered() const {
  if (u.size() != w.size()) return false;
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    if (u[k] > u[k + 1]) return false;
    if (u[k] == u[k + 1] && w[k] < w[k + 1]) return false;
  }
  return true;
}

MarginMatrix::MarginMatrix(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (row.size() != entries_.front().size()) throw Error("matrix rows must have equal length");
    for (int e : row)
      if (e < 0) throw Error("matrix entries must be nonnegative");
  }
}

MarginMatrix MarginMatrix::zeros(int rows, int cols) {
  return MarginMatrix(std::vector<std::vector<int>>(static_cast<std::size_t>(rows),
                                                    std::vector<int>(static_cast<std::size_t>(cols), 0)));
}

std::vector<int> MarginMatrix::row_sums() const {
  std::vector<int> s;
  for (const auto& row : entries_) s.push_back(std::accumulate(row.begin(), row.end(), 0));
  return s;
}

std::vector<int> MarginMatrix::col_sums() const {
  std::vector<int> s(static_cast<std::size_t>(cols()), 0);
  for (const auto& row : entries_)
    for (std::size_t j = 0; j < row.size(); ++j) s[j] += row[j];
  return s;
}

int MarginMatrix::total() const {
  int t = 0;
  for (const auto& row : entries_) t += std::accumulate(row.begin(), row.end(), 0);
  return t;
}

TwoRowArray matrix_to_array(const MarginMatrix& m) {
  TwoRowArray a;
  for (int j = 1; j <= m.cols(); ++j) {
    for (int i = m.rows(); i >= 1; --i) {
      for (int c = 0; c < m(i, j); ++c) {
        a.u.push_back(j);
        a.w.push_back(i);
      }
    }
  }
  return a;
}

MarginMatrix array_to_matrix(const TwoRowArray& a, int rows, int cols) {
  if (a.u.size() != a.w.size()) throw Error("array rows differ in length");
  auto m = MarginMatrix::zeros(rows, cols);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.w[k] < 1 || a.w[k] > rows || a.u[k] < 1 || a.u[k] > cols)
      throw Error("array column (" + std::to_string(a.u[k]) + "," + std::to_string(a.w[k]) +
                  ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    ++m(a.w[k], a.u[k]);
  }
  return m;
}

TwoRowArray reorder_to_paper(const std::vector<int>& u, const std::vector<int>& w) {
  if (u.size() != w.size()) throw Error("array rows differ in length");
  std::vector<std::size_t> idx(u.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (u[a] != u[b]) return u[a] < u[b];
    return w[a] > w[b];
  });
  TwoRowArray out;
  for (std::size_t k : idx) {
    out.u.push_back(u[k]);
    out.w.push_back(w[k]);
  }
  return out;
}

TwoRowArray to_lexicographic(const TwoRowArray& a) {
  std::vector<std::size_t> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (a.u[x] != a.u[y]) return a.u[x] < a.u[y];
    return a.w[x] < a.w[y];
  });
  TwoRowArray out;
  for (std::size_t k : idx) {
    out.u.push_back(a.u[k]);
    out.w.push_back(a.w[k]);
  }
  return out;
}

std::vector<MarginMatrix> enumerate_margin_matrices(const Composition& mu, const Composition& nu) {
  if (mu.size() != nu.size())
    throw Error("margins " + mu.to_string() + " and " + nu.to_string() + " have different totals");
  const int n = static_cast<int>(mu.length());
  const int np = static_cast<int>(nu.length());
  std::vector<MarginMatrix> out;
  auto m = MarginMatrix::zeros(n, np);
  std::vector<int> col_left(nu.parts());

  // Fill row by row, cell by cell; the last cell of each row takes the
  // remainder of that row's budget.
  std::function<void(int, int, int)> rec = [&](int i, int j, int row_left) {
    if (i > n) {
      if (std::all_of(col_left.begin(), col_left.end(), [](int c) { return c == 0; })) out.push_back(m);
      return;
    }
    if (j == np) {
      if (row_left > col_left[np - 1]) return;
      m(i, j) = row_left;
      col_left[np - 1] -= row_left;
      rec(i + 1, 1, i < n ? mu[i] : 0);
      col_left[np - 1] += row_left;
      m(i, j) = 0;
      return;
    }
    for (int v = 0; v <= std::min(row_left, col_left[j - 1]); ++v) {
      m(i, j) = v;
      col_left[j - 1] -= v;
      rec(i, j + 1, row_left - v);
      col_left[j - 1] += v;
    }
    m(i, j) = 0;
  };
  if (n == 0 || np == 0) return out;
  rec(1, 1, mu[0]);
  return out;
}

}  // namespace mrsk
