#include "mrsk/standardize.hpp"

#include <algorithm>
#include <numeric>

#include "mrsk/error.hpp"
#include "mrsk/rsk.hpp"

namespace mrsk {

namespace {

// offsets[v] = number of letters smaller than v.
std::vector<int> block_offsets(const std::vector<int>& letters) {
  const int max = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
  std::vector<int> count(static_cast<std::size_t>(max) + 2, 0);
  for (int v : letters) ++count[static_cast<std::size_t>(v)];
  std::vector<int> offsets(count.size(), 0);
  for (std::size_t v = 1; v < count.size(); ++v) offsets[v] = offsets[v - 1] + count[v - 1];
  return offsets;
}

}  // namespace

Tableau std_tableau(const Tableau& t, StdConvention conv) {
  std::vector<Tableau::Row> rows = t.rows();
  auto offsets = block_offsets(t.reading_word());
  std::vector<int> used(offsets.size(), 0);

  if (conv == StdConvention::Variant) {
    if (!t.is_semistandard()) throw NotSemistandardError("std_tableau: input is not column-semistandard");
    // Each value occurs at most once per row, so reading rows top-down visits
    // its occurrences top row first.
    for (auto& row : rows)
      for (int& e : row) {
        const auto v = static_cast<std::size_t>(e);
        e = offsets[v] + ++used[v];
      }
  } else {
    // Left to right: by column, and top to bottom within a column.
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < width; ++c)
      for (auto& row : rows) {
        if (c >= row.size()) break;
        const auto v = static_cast<std::size_t>(row[c]);
        row[c] = offsets[v] + ++used[v];
      }
  }
  return Tableau(std::move(rows));
}

TwoRowArray std_array(const TwoRowArray& a, StdConvention conv) {
  if (a.u.size() != a.w.size()) throw Error("array rows differ in length");
  if (conv == StdConvention::Variant && !a.is_ordered())
    throw NotOrderedError("std_array: array is not in canonical order");
  const std::size_t d = a.size();
  auto offsets = block_offsets(a.w);
  std::vector<int> seen(offsets.size(), 0);
  std::vector<int> count(offsets.size(), 0);
  for (int v : a.w) ++count[static_cast<std::size_t>(v)];

  TwoRowArray out;
  out.u.resize(d);
  std::iota(out.u.begin(), out.u.end(), 1);
  out.w.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto v = static_cast<std::size_t>(a.w[k]);
    const int occurrence = seen[v]++;
    out.w[k] = conv == StdConvention::Variant ? offsets[v] + count[v] - occurrence : offsets[v] + occurrence + 1;
  }
  return out;
}

TwoRowArray std_inverse(const TwoRowArray& perm, const Composition& mu, const Composition& nu) {
  const int d = static_cast<int>(perm.size());
  if (perm.w.size() != perm.u.size() || mu.size() != d || nu.size() != d)
    throw NotInImageError("std_inverse: size mismatch between permutation and contents");

  TwoRowArray out;
  for (std::size_t j = 0; j < nu.length(); ++j)
    for (int c = 0; c < nu[j]; ++c) out.u.push_back(static_cast<int>(j) + 1);

  std::vector<int> upper(mu.length());
  std::partial_sum(mu.parts().begin(), mu.parts().end(), upper.begin());
  for (int letter : perm.w) {
    auto it = std::lower_bound(upper.begin(), upper.end(), letter);
    if (letter < 1 || it == upper.end()) throw NotInImageError("std_inverse: letter out of range");
    out.w.push_back(static_cast<int>(it - upper.begin()) + 1);
  }
  if (!out.is_ordered() || std_array(out) != perm)
    throw NotInImageError("std_inverse: permutation is not in the image of standardization for mu=" +
                          mu.to_string() + ", nu=" + nu.to_string());
  return out;
}

bool check_commute(const TwoRowArray& a) {
  const auto [p, q] = rsk_forward(a);
  const auto std_pair = rsk_forward(std_array(a));
  return std_pair.p == std_tableau(p) && std_pair.q == std_tableau(q);
}

}  // namespace mrsk
