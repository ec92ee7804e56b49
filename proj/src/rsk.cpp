#include "mrsk/rsk.hpp"

#include <algorithm>

#include "mrsk/error.hpp"

namespace mrsk {

namespace {

using Rows = std::vector<Tableau::Row>;

// Shared by forward insertion and the mirabolic algorithm: inserts into raw
// rows so that long insertion sequences avoid re-validating the tableau.
Cell insert_into_rows(Rows& rows, int z, BumpRule rule, std::vector<Cell>* route) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    auto it = rule == BumpRule::Variant ? std::lower_bound(row.begin(), row.end(), z)
                                        : std::upper_bound(row.begin(), row.end(), z);
    const Cell cell{static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1};
    if (route) route->push_back(cell);
    if (it == row.end()) {
      row.push_back(z);
      return cell;
    }
    std::swap(*it, z);
  }
}

TableauPair forward(const TwoRowArray& a, BumpRule rule) {
  if (a.u.size() != a.w.size()) throw Error("array rows differ in length");
  Rows p, q;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Cell box = insert_into_rows(p, a.w[k], rule, nullptr);
    if (static_cast<std::size_t>(box.row) > q.size()) q.emplace_back();
    q[static_cast<std::size_t>(box.row - 1)].push_back(a.u[k]);
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

}  // namespace

InsertionResult row_insert(const Tableau& t, int z, BumpRule rule) {
  if (z < 1) throw Error("inserted value must be positive");
  if (rule == BumpRule::Variant && !t.is_semistandard())
    throw NotSemistandardError("row_insert: input tableau is not column-semistandard");
  Rows rows = t.rows();
  InsertionResult res;
  res.final_box = insert_into_rows(rows, z, rule, &res.bump_route);
  res.tableau = Tableau(std::move(rows));
  return res;
}

TableauPair rsk_forward(const TwoRowArray& a) {
  if (!a.is_ordered()) throw NotOrderedError("rsk_forward: array is not in canonical order");
  return forward(a, BumpRule::Variant);
}

TableauPair rsk_forward_classical(const TwoRowArray& a) { return forward(a, BumpRule::Classical); }

TwoRowArray rsk_inverse(const Tableau& p, const Tableau& q) {
  if (p.shape() != q.shape()) throw ShapeError("rsk_inverse: tableaux have different shapes");
  if (!p.is_semistandard() || !q.is_semistandard())
    throw NotSemistandardError("rsk_inverse: tableaux must be column-semistandard");

  Rows pr = p.rows();
  Rows qr = q.rows();
  const std::size_t d = static_cast<std::size_t>(p.size());
  TwoRowArray out;
  out.u.resize(d);
  out.w.resize(d);

  for (std::size_t k = d; k-- > 0;) {
    // Largest entry of q sits at a row end; scan bottom-up so the lowest wins.
    std::size_t row = qr.size();
    int best = 0;
    for (std::size_t r = qr.size(); r-- > 0;) {
      if (qr[r].back() > best) {
        best = qr[r].back();
        row = r;
      }
    }
    out.u[k] = best;
    qr[row].pop_back();

    int y = pr[row].back();
    pr[row].pop_back();
    for (std::size_t r = row; r-- > 0;) {
      // y was bumped by the right-most entry of row r that is <= y.
      auto& cur = pr[r];
      auto it = std::upper_bound(cur.begin(), cur.end(), y);
      if (it == cur.begin()) throw InvariantViolation("rsk_inverse: reverse bump found no entry");
      --it;
      std::swap(*it, y);
    }
    out.w[k] = y;
    if (qr[row].empty()) {
      qr.pop_back();
      pr.pop_back();
    }
  }
  return out;
}

}  // namespace mrsk
