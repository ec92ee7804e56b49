#include "mrsk/flag.hpp"

#include <algorithm>

#include "mrsk/error.hpp"

namespace mrsk {

using gf::MatrixGF;
using gf::SubspaceGF;
using gf::Vector;

// ------------------------------------------------------------------- FlagGF

FlagGF::FlagGF(std::vector<SubspaceGF> steps) {
  if (steps.empty()) throw Error("a flag needs at least one step");
  field_ = steps.front().field();
  ambient_ = steps.front().ambient();
  steps_.emplace_back(field_, ambient_);
  std::vector<int> type;
  for (auto& s : steps) {
    if (s.ambient() != ambient_ || !(s.field() == field_)) throw Error("flag steps live in different spaces");
    const auto& prev = steps_.back();
    if (!s.contains(prev) || s.dim() <= prev.dim()) throw Error("flag steps must be strictly increasing");
    type.push_back(s.dim() - prev.dim());
    steps_.push_back(std::move(s));
  }
  if (static_cast<std::size_t>(steps_.back().dim()) != ambient_) throw Error("last flag step must be the whole space");
  type_ = Composition(std::move(type));
}

FlagGF FlagGF::from_generators(gf::PrimeField field, std::size_t ambient,
                               const std::vector<std::vector<Vector>>& generators) {
  std::vector<SubspaceGF> steps;
  std::vector<Vector> acc;
  for (const auto& gens : generators) {
    acc.insert(acc.end(), gens.begin(), gens.end());
    steps.push_back(SubspaceGF::span(field, ambient, acc));
  }
  return FlagGF(std::move(steps));
}

bool FlagGF::is_lowered_by(const MatrixGF& x) const {
  for (std::size_t i = 1; i < steps_.size(); ++i)
    if (!steps_[i - 1].contains(gf::image(x, steps_[i]))) return false;
  return true;
}

NilpotentEndo::NilpotentEndo(MatrixGF m) : m_(std::move(m)) {
  if (!gf::is_nilpotent(m_)) throw NotNilpotentError("matrix is not nilpotent");
}

// -------------------------------------------------------- relative position

MarginMatrix relative_position(const FlagGF& f, const FlagGF& f_prime) {
  if (f.ambient() != f_prime.ambient()) throw Error("relative_position: flags live in different spaces");
  const std::size_t n = f.length(), np = f_prime.length();
  std::vector<std::vector<int>> c(n + 1, std::vector<int>(np + 1, 0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= np; ++j) c[i][j] = gf::intersect(f[i], f_prime[j]).dim();
  auto m = MarginMatrix::zeros(static_cast<int>(n), static_cast<int>(np));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= np; ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = c[i][j] - c[i][j - 1] - c[i - 1][j] + c[i - 1][j - 1];
  return m;
}

// ------------------------------------------------------- tableau of a flag

Tableau tableau_of_flag(const MatrixGF& x, const FlagGF& f) {
  if (!f.is_lowered_by(x)) throw NotInvariantError("tableau_of_flag: flag is not lowered by x");
  std::vector<Tableau::Row> rows;
  Partition prev;
  for (std::size_t i = 1; i <= f.length(); ++i) {
    const Partition cur = gf::jordan_type(gf::restrict(x, f[i]));
    if (!prev.contained_in(cur)) throw InvariantViolation("tableau_of_flag: Jordan types do not grow");
    rows.resize(cur.length());
    for (std::size_t r = 1; r <= cur.length(); ++r)
      for (int c = prev.part(r); c < cur.part(r); ++c) rows[r - 1].push_back(static_cast<int>(i));
    prev = cur;
  }
  Tableau t(std::move(rows));
  if (!t.is_semistandard()) throw InvariantViolation("tableau_of_flag: result is not column-semistandard");
  return t;
}

// ---------------------------------------------------------- flag sampling

FlagGF sample_flag_in_component(const MatrixGF& x, const Tableau& t, std::mt19937_64& rng, int max_attempts) {
  const auto field = x.field();
  const std::size_t d = x.rows();
  const Partition lambda = gf::jordan_type(x);
  if (!t.is_semistandard()) throw NotSemistandardError("sample_flag_in_component: tableau is not semistandard");
  if (t.shape() != lambda)
    throw EmptyStratumError("tableau shape " + t.shape().to_string() + " differs from the Jordan type " +
                            lambda.to_string());
  const auto mu = Composition::from_content(t.content());

  std::vector<MatrixGF> powers{MatrixGF::identity(field, d)};
  for (std::size_t k = 1; k <= d; ++k) powers.push_back(powers.back() * x);

  // Top-down: F_{i-1} lies between x F_i and F_i, so it is x-stable and
  // x F_i is inside it automatically. Writing W = x F_i + span(z's) with z
  // drawn from L_k = (ker x^k n F_i) + x F_i, a generic choice gives
  // rank(x^k on W) = rank(x^{k+1} on F_i) + #{z drawn from L_j, j > k}, which
  // fixes how many z come from each layer.
  const std::size_t n = mu.length();
  std::vector<SubspaceGF> steps(n);
  steps[n - 1] = SubspaceGF::whole(field, d);
  for (std::size_t i = n; i >= 2; --i) {
    const auto& upper = steps[i - 1];
    const Partition outer = t.restricted_to(static_cast<int>(i)).shape();
    const Partition inner = t.restricted_to(static_cast<int>(i) - 1).shape();
    const auto base = gf::image(x, upper);

    // tail[k] = #z drawn from layers j > k.
    std::vector<int> tail(d + 2, 0);
    for (std::size_t k = 0; k <= d; ++k)
      tail[k] = inner.rank_of_power(static_cast<int>(k)) - outer.rank_of_power(static_cast<int>(k) + 1);
    std::vector<SubspaceGF> layers(d + 1);
    for (std::size_t k = 1; k <= d; ++k) {
      if (tail[k - 1] < tail[k] || tail[k] < 0)
        throw EmptyStratumError("no x-stable flag reaches tableau step " + std::to_string(i - 1));
      layers[k] = gf::sum(gf::intersect(gf::nullspace(powers[k]), upper), base);
    }

    bool ok = false;
    for (int attempt = 0; attempt < max_attempts && !ok; ++attempt) {
      std::vector<Vector> gens = base.basis();
      for (std::size_t k = 1; k <= d; ++k)
        for (int c = tail[k]; c < tail[k - 1]; ++c) gens.push_back(layers[k].random_element(rng));
      auto cand = SubspaceGF::span(field, d, gens);
      if (cand.dim() != inner.size()) continue;
      if (gf::jordan_type(gf::restrict(x, cand)) != inner) continue;
      steps[i - 2] = std::move(cand);
      ok = true;
    }
    if (!ok) throw EmptyStratumError("could not realise tableau step " + std::to_string(i - 1) + " after retries");
  }
  return FlagGF(std::move(steps));
}

FlagGF sample_x_stable_flag(const MatrixGF& x, const Composition& mu, std::mt19937_64& rng) {
  if (static_cast<std::size_t>(mu.size()) != x.rows()) throw Error("sample_x_stable_flag: |mu| differs from d");
  const auto lambda = gf::jordan_type(x);
  const auto tableaux = enumerate_semistandard(lambda, mu);
  if (tableaux.empty())
    throw EmptyStratumError("empty variety stratum: no tableau of shape " + lambda.to_string() + " and content " +
                            mu.to_string());
  std::uniform_int_distribution<std::size_t> pick(0, tableaux.size() - 1);
  return sample_flag_in_component(x, tableaux[pick(rng)], rng);
}

// ------------------------------------------------------- orbit decoration

namespace {

// Rows of the linear system "a X f = 0" in the d*d entries of X (row-major),
// one row per pair (annihilator vector a, basis vector f).
void append_lowering_rows(std::vector<Vector>& rows, const SubspaceGF& source, const SubspaceGF& target,
                          std::size_t extra_cols) {
  const auto& field = source.field();
  const std::size_t d = source.ambient();
  const auto ann = target.annihilator();
  for (const auto& a : ann.basis())
    for (const auto& f : source.basis()) {
      Vector row(d * d + extra_cols, 0);
      for (std::size_t r = 0; r < d; ++r) {
        if (a[r] == 0) continue;
        for (std::size_t c = 0; c < d; ++c) row[r * d + c] = field.mul(a[r], f[c]);
      }
      rows.push_back(std::move(row));
    }
}

SubspaceGF solve(const gf::PrimeField& field, std::size_t unknowns, const std::vector<Vector>& rows) {
  if (rows.empty()) return SubspaceGF::whole(field, unknowns);
  MatrixGF m(field, rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = rows[r][c];
  return gf::nullspace(m);
}

MatrixGF unpack_matrix(const gf::PrimeField& field, const Vector& packed, std::size_t d) {
  MatrixGF m(field, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = packed[r * d + c];
  return m;
}

}  // namespace

std::set<int> beta_of_triple(const FlagGF& f, const FlagGF& f_prime, const Vector& v) {
  const auto& field = f.field();
  const std::size_t d = f.ambient();
  if (v.size() != d) throw Error("beta_of_triple: vector length differs from d");

  // Stabilizer algebra A: a F_i in F_i and a F'_j in F'_j.
  std::vector<Vector> rows;
  for (std::size_t i = 1; i < f.length(); ++i) append_lowering_rows(rows, f[i], f[i], 0);
  for (std::size_t j = 1; j < f_prime.length(); ++j) append_lowering_rows(rows, f_prime[j], f_prime[j], 0);
  const auto algebra = solve(field, d * d, rows);

  std::vector<Vector> orbit_span;
  for (const auto& a : algebra.basis()) orbit_span.push_back(unpack_matrix(field, a, d) * v);
  const auto s = SubspaceGF::span(field, d, orbit_span);

  const auto m = relative_position(f, f_prime);
  const auto omega = matrix_to_array(m);
  const std::size_t n = f.length(), np = f_prime.length();
  std::vector<std::vector<int>> c(n + 1, std::vector<int>(np + 1, 0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= np; ++j) c[i][j] = gf::intersect(s, gf::intersect(f[i], f_prime[j])).dim();

  std::set<MatrixPos> decorated;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= np; ++j) {
      const int mixed = c[i][j] - c[i][j - 1] - c[i - 1][j] + c[i - 1][j - 1];
      const int entry = m(static_cast<int>(i), static_cast<int>(j));
      if (mixed == 0) continue;
      if (mixed != entry)
        throw InvariantViolation("beta_of_triple: cyclic submodule meets position (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") partially");
      decorated.insert({static_cast<int>(i), static_cast<int>(j)});
    }

  std::set<int> beta;
  for (std::size_t l = 0; l < omega.size(); ++l)
    if (decorated.count({omega.w[l], omega.u[l]})) beta.insert(static_cast<int>(l) + 1);
  return beta;
}

// ---------------------------------------------------------------- conormal

SubspaceGF conormal_space(const FlagGF& f, const FlagGF& f_prime, const Vector& v) {
  const auto& field = f.field();
  const std::size_t d = f.ambient();
  if (f_prime.ambient() != d || v.size() != d) throw Error("conormal_space: dimension mismatch");
  std::vector<Vector> rows;
  // x F_i in F_{i-1}.
  for (std::size_t i = 1; i <= f.length(); ++i) append_lowering_rows(rows, f[i], f[i - 1], d);
  // (x + v*(.) v) F'_j in F'_{j-1}, which is x' F'_j in F'_{j-1} for x' = -x - v* (x) v.
  for (std::size_t j = 1; j <= f_prime.length(); ++j) {
    const auto& src = f_prime[j];
    const auto ann = f_prime[j - 1].annihilator();
    for (const auto& a : ann.basis()) {
      gf::Residue av = 0;
      for (std::size_t r = 0; r < d; ++r) av = field.add(av, field.mul(a[r], v[r]));
      for (const auto& b : src.basis()) {
        Vector row(d * d + d, 0);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) row[r * d + c] = field.mul(a[r], b[c]);
        for (std::size_t c = 0; c < d; ++c) row[d * d + c] = field.mul(av, b[c]);
        rows.push_back(std::move(row));
      }
    }
  }
  return solve(field, d * d + d, rows);
}

Vector pack_conormal(const MatrixGF& x, const Vector& v_star) {
  Vector packed;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) packed.push_back(x(r, c));
  packed.insert(packed.end(), v_star.begin(), v_star.end());
  return packed;
}

ConormalVector sample_conormal(const FlagGF& f, const FlagGF& f_prime, const Vector& v, std::mt19937_64& rng) {
  const auto& field = f.field();
  const std::size_t d = f.ambient();
  const auto space = conormal_space(f, f_prime, v);
  const auto packed = space.random_element(rng);
  ConormalVector c;
  c.x = unpack_matrix(field, packed, d);
  c.v_star.assign(packed.begin() + static_cast<std::ptrdiff_t>(d * d), packed.end());
  c.x_prime = -c.x - gf::outer(field, v, c.v_star);
  if (!gf::is_nilpotent(c.x) || !gf::is_nilpotent(c.x_prime))
    throw InvariantViolation("sample_conormal: flag-lowering map is not nilpotent");
  return c;
}

bool is_conormal(const ConormalVector& c, const FlagGF& f, const FlagGF& f_prime, const Vector& v) {
  const auto sum = c.x + c.x_prime + gf::outer(f.field(), v, c.v_star);
  return sum.is_zero() && f.is_lowered_by(c.x) && f_prime.is_lowered_by(c.x_prime);
}

MirabolicOutput mirabolic_type_of_conormal(const ConormalVector& c, const FlagGF& f, const FlagGF& f_prime,
                                           const Vector& v) {
  if (!is_conormal(c, f, f_prime, v)) throw Error("mirabolic_type_of_conormal: not a conormal vector");
  MirabolicOutput out;
  out.lambda = gf::jordan_type(c.x);
  out.lambda_prime = gf::jordan_type(c.x_prime);
  out.theta = gf::jordan_type(gf::quotient_action(c.x, gf::cyclic_span(c.x, v)));
  out.t = tableau_of_flag(c.x, f);
  out.t_prime = tableau_of_flag(c.x_prime, f_prime);
  return out;
}

Triple orbit_representative(const DecoratedArray& da, const MatrixGF& g) {
  const auto& a = da.omega;
  const std::size_t d = a.size();
  if (g.rows() != d || g.cols() != d) throw Error("orbit_representative: basis matrix has wrong size");
  const int n = *std::max_element(a.w.begin(), a.w.end());
  const int np = *std::max_element(a.u.begin(), a.u.end());
  const auto& field = g.field();

  auto build = [&](const std::vector<int>& labels, int steps) {
    std::vector<SubspaceGF> out;
    for (int i = 1; i <= steps; ++i) {
      std::vector<Vector> gens;
      for (std::size_t r = 0; r < d; ++r)
        if (labels[r] <= i) gens.push_back(g.column(r));
      out.push_back(SubspaceGF::span(field, d, gens));
    }
    return FlagGF(std::move(out));
  };

  Triple t{build(a.w, n), build(a.u, np), Vector(d, 0)};
  for (int l : da.beta) {
    const auto col = g.column(static_cast<std::size_t>(l - 1));
    for (std::size_t r = 0; r < d; ++r) t.v[r] = field.add(t.v[r], col[r]);
  }
  return t;
}

}  // namespace mrsk
