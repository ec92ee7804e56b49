#include "mrsk/mirabolic.hpp"

#include <algorithm>
#include <numeric>

#include "mrsk/error.hpp"
#include "mrsk/rsk.hpp"

namespace mrsk {

namespace {

MatrixPos position_of(const TwoRowArray& a, int column) {
  const auto k = static_cast<std::size_t>(column - 1);
  return {a.w[k], a.u[k]};
}

bool northwest_of(const MatrixPos& p, const MatrixPos& q) { return p.row <= q.row && p.col <= q.col; }

}  // namespace

bool DecoratedMatrix::is_valid() const {
  const MatrixPos* prev = nullptr;
  for (const auto& p : delta) {  // sorted by row
    if (p.row < 1 || p.row > m.rows() || p.col < 1 || p.col > m.cols()) return false;
    if (m(p.row, p.col) <= 0) return false;
    if (prev && !(prev->row < p.row && prev->col > p.col)) return false;
    prev = &p;
  }
  return true;
}

bool validate_decoration(const DecoratedArray& da) {
  const auto& a = da.omega;
  const int d = static_cast<int>(a.size());
  for (int j : da.beta)
    if (j < 1 || j > d) return false;
  for (int i = 1; i <= d; ++i) {
    if (da.beta.count(i)) continue;
    for (int j : da.beta) {
      const auto pi = position_of(a, i);
      const auto pj = position_of(a, j);
      if (!(pi.col > pj.col || pi.row > pj.row)) return false;
    }
  }
  return true;
}

DecoratedArray delta_to_beta(const DecoratedMatrix& dm) {
  if (!dm.is_valid()) throw Error("delta_to_beta: invalid decoration (zero entry or non-antichain)");
  DecoratedArray da{matrix_to_array(dm.m), {}};
  for (int l = 1; l <= static_cast<int>(da.omega.size()); ++l) {
    const auto p = position_of(da.omega, l);
    if (std::any_of(dm.delta.begin(), dm.delta.end(), [&](const MatrixPos& q) { return northwest_of(p, q); }))
      da.beta.insert(l);
  }
  return da;
}

DecoratedMatrix beta_to_delta(const DecoratedArray& da) {
  if (da.beta.empty()) throw Error("beta_to_delta: empty beta is the v=0 stratum and has no Delta");
  if (!validate_decoration(da)) throw Error("beta_to_delta: invalid decoration");
  std::set<MatrixPos> image;
  for (int l : da.beta) image.insert(position_of(da.omega, l));

  const int rows = *std::max_element(da.omega.w.begin(), da.omega.w.end());
  const int cols = *std::max_element(da.omega.u.begin(), da.omega.u.end());
  DecoratedMatrix dm{array_to_matrix(da.omega, rows, cols), {}};
  for (const auto& p : image) {
    const bool dominated = std::any_of(image.begin(), image.end(),
                                       [&](const MatrixPos& q) { return q != p && northwest_of(p, q); });
    if (!dominated) dm.delta.insert(p);
  }
  return dm;
}

MirabolicTrace mirabolic_rsk_traced(const DecoratedArray& da) {
  if (!da.omega.is_ordered()) throw NotOrderedError("mirabolic_rsk: array is not in canonical order");
  if (!validate_decoration(da)) throw Error("mirabolic_rsk: invalid decoration " + to_string(da.beta));

  const int d = static_cast<int>(da.omega.size());
  MirabolicTrace trace;
  std::vector<int> reserve(static_cast<std::size_t>(d));
  std::iota(reserve.begin(), reserve.end(), d + 1);
  trace.initial_reserve = reserve;

  Tableau t, tp;
  for (int i = 1; i <= d; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    const int letter = da.omega.w[k];
    MirabolicStep step{i, da.beta.count(i) > 0, letter, {}, {}, {}};
    if (!step.decorated) {
      // Least z >= letter always exists: fewer than d replacements so far, so
      // some value > d remains.
      auto it = std::lower_bound(reserve.begin(), reserve.end(), letter);
      if (it == reserve.end()) throw InvariantViolation("mirabolic_rsk: reserve row exhausted");
      step.inserted = *it;
      *it = letter;
    }
    auto ins = row_insert(t, step.inserted);
    t = std::move(ins.tableau);

    auto rows = tp.rows();
    if (static_cast<std::size_t>(ins.final_box.row) > rows.size()) rows.emplace_back();
    rows[static_cast<std::size_t>(ins.final_box.row - 1)].push_back(da.omega.u[k]);
    tp = Tableau(std::move(rows));

    step.reserve = reserve;
    step.t = t;
    step.t_prime = tp;
    trace.steps.push_back(std::move(step));
  }

  Tableau full = t;
  for (int z : reserve) full = row_insert(full, z).tableau;
  trace.t_full = full;
  trace.nu = full.shape();

  auto nu_parts = trace.nu.parts();
  if (!nu_parts.empty()) nu_parts.erase(nu_parts.begin());

  auto& out = trace.output;
  out.theta = Partition(nu_parts);
  out.t = full.restricted_to(d);
  out.lambda = out.t.shape();
  out.t_prime = tp;
  out.lambda_prime = tp.shape();
  return trace;
}

MirabolicOutput mirabolic_rsk(const DecoratedArray& da) { return mirabolic_rsk_traced(da).output; }

std::vector<DecoratedArray> enumerate_decorated_arrays(const Composition& mu, const Composition& mu_prime) {
  std::vector<DecoratedArray> out;
  for (const auto& m : enumerate_margin_matrices(mu, mu_prime)) {
    const auto a = matrix_to_array(m);
    const int d = static_cast<int>(a.size());
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      DecoratedArray da{a, {}};
      for (int l = 1; l <= d; ++l)
        if (mask & (1u << (l - 1))) da.beta.insert(l);
      if (validate_decoration(da)) out.push_back(std::move(da));
    }
  }
  return out;
}

std::vector<MirabolicOutput> enumerate_mirabolic_outputs(const Composition& mu, const Composition& mu_prime) {
  std::vector<MirabolicOutput> out;
  const int d = mu.size();
  const auto partitions = enumerate_partitions(d);
  for (const auto& lambda : partitions) {
    const auto ts = enumerate_semistandard(lambda, mu);
    if (ts.empty()) continue;
    for (const auto& lambda_prime : partitions) {
      const auto tps = enumerate_semistandard(lambda_prime, mu_prime);
      if (tps.empty()) continue;
      for (const auto& theta : enumerate_interlacing(lambda)) {
        if (!interlaces(lambda_prime, theta)) continue;
        for (const auto& t : ts)
          for (const auto& tp : tps) out.push_back({lambda, theta, lambda_prime, t, tp});
      }
    }
  }
  return out;
}

DecoratedArray mirabolic_inverse_search(const MirabolicOutput& target, const Composition& mu,
                                        const Composition& mu_prime, int max_size) {
  if (mu.size() > max_size) throw Error("mirabolic_inverse_search: size exceeds the exhaustive bound");
  std::optional<DecoratedArray> found;
  for (auto& da : enumerate_decorated_arrays(mu, mu_prime)) {
    if (mirabolic_rsk(da) != target) continue;
    if (found) throw InvariantViolation("mirabolic_inverse_search: multiple preimages");
    found = std::move(da);
  }
  if (!found) throw InvariantViolation("mirabolic_inverse_search: no preimage");
  return *found;
}

std::string to_string(const std::set<int>& beta) {
  std::string s = "{";
  for (int b : beta) {
    if (s.size() > 1) s += ",";
    s += std::to_string(b);
  }
  return s + "}";
}

}  // namespace mrsk
