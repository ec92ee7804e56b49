// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include <fmt/core.h>

#include "mrsk/appendix.hpp"
#include "mrsk/cli.hpp"
#include "mrsk/flag.hpp"
#include "mrsk/json_io.hpp"
#include "mrsk/rsk.hpp"
#include "mrsk/standardize.hpp"
#include "mrsk/verify.hpp"

using namespace mrsk;

namespace {

constexpr std::uint64_t kSeed = 20261016;
constexpr int kWorkers = 4;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool run_criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double t = seconds_since(t0);
  const bool pass = o.pass && t < limit_s;
  fmt::print("{} {} {} ({:.3f} s, limit {} s){}{}\n", pass ? "PASS" : "FAIL", id, name, t, limit_s,
             o.detail.empty() ? "" : ": ", o.detail);
  std::fflush(stdout);
  return pass;
}

AppendixFixture fixture() { return load_appendix_fixture(default_fixture_dir() / "appendix-a.json"); }

Outcome worked_combinatorial() {
  const auto fx = fixture();
  const DecoratedArray input{TwoRowArray{{1, 1, 2, 2, 3, 3, 3}, {4, 2, 3, 1, 4, 2, 1}}, {4, 7}};
  const MirabolicOutput expected{Partition{4, 2, 1}, Partition{3, 2, 1}, Partition{3, 2, 1, 1},
                                 Tableau{{1, 2, 3, 4}, {1, 2}, {4}}, Tableau{{1, 2, 3}, {1, 3}, {2}, {3}}};

  std::ostringstream out, err;
  const int code = cli::run({"--json", "mirabolic", "run", "--array", to_json(input.omega).dump(), "--beta", "4,7"},
                            out, err);
  if (code != 0) return {false, "CLI exit " + std::to_string(code) + ": " + err.str()};
  const auto j = Json::parse(out.str());
  if (mirabolic_output_from_json(j.at("output")) != expected) return {false, "CLI output differs"};

  const auto trace = mirabolic_rsk_traced(input);
  if (trace.output != expected) return {false, "library output differs"};
  if (!trace_matches(trace, fx)) return {false, "trace differs from the worked example"};
  const auto& steps = j.at("trace");
  if (steps.size() != fx.trace.size()) return {false, "CLI trace length"};
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (int_list(steps[i].at("R"), "R") != fx.trace[i].reserve || tableau_from_json(steps[i].at("T")) != fx.trace[i].t)
      return {false, "CLI trace step " + std::to_string(i + 1)};
  return {true, "7 steps, R and T_i match"};
}

Outcome worked_geometric() {
  const auto fx = fixture();
  if (fx.field.p() != 10007) return {false, "fixture prime"};
  const auto rep = check_appendix(fx);
  std::string failed;
  for (const auto& [k, b] : rep.buckets)
    if (b.matches != b.total) failed += " " + k;
  if (!failed.empty()) return {false, "failed:" + failed};
  return {true, std::to_string(rep.total) + " checks"};
}

Outcome rsk_bijection() {
  long arrays = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& nu : enumerate_compositions(d)) {
        std::set<TableauPair> image;
        for (const auto& m : enumerate_margin_matrices(mu, nu)) {
          const auto a = matrix_to_array(m);
          const auto pq = rsk_forward(a);
          if (!image.insert(pq).second) return {false, "not injective at " + mu.to_string() + "," + nu.to_string()};
          if (rsk_inverse(pq.p, pq.q) != a) return {false, "inverse fails"};
          ++arrays;
        }
        std::size_t pairs = 0;
        for (const auto& lambda : enumerate_partitions(d)) {
          const auto ps = enumerate_semistandard(lambda, mu);
          const auto qs = enumerate_semistandard(lambda, nu);
          pairs += ps.size() * qs.size();
          for (const auto& p : ps)
            for (const auto& q : qs) {
              if (!image.count({p, q})) return {false, "pair not hit at " + mu.to_string() + "," + nu.to_string()};
              const auto a = rsk_inverse(p, q);
              if (rsk_forward(a) != TableauPair{p, q}) return {false, "forward(inverse) fails"};
            }
        }
        if (pairs != image.size()) return {false, "count mismatch at " + mu.to_string() + "," + nu.to_string()};
      }
  return {true, std::to_string(arrays) + " arrays"};
}

Outcome commute() {
  long n = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& nu : enumerate_compositions(d))
        for (const auto& m : enumerate_margin_matrices(mu, nu)) {
          if (!check_commute(matrix_to_array(m))) return {false, "fails on " + to_json(m).dump()};
          ++n;
        }
  return {true, std::to_string(n) + " arrays"};
}

Outcome dictionary() {
  const MarginMatrix m({{1, 0, 2}, {1, 1, 0}, {0, 3, 0}});
  const DecoratedMatrix dm{m, {{1, 3}, {2, 1}}};
  const DecoratedArray da{TwoRowArray{{1, 1, 2, 2, 2, 2, 3, 3}, {2, 1, 3, 3, 3, 2, 1, 1}}, {1, 2, 7, 8}};
  if (delta_to_beta(dm) != da) return {false, "worked example delta -> beta"};
  if (beta_to_delta(da) != dm) return {false, "worked example beta -> delta"};

  long n = 0;
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& mup : enumerate_compositions(d))
        for (const auto& a : enumerate_decorated_arrays(mu, mup)) {
          if (a.beta.empty()) {
            if (!delta_to_beta(DecoratedMatrix{array_to_matrix(a.omega, static_cast<int>(mu.length()),
                                                                static_cast<int>(mup.length())),
                                               {}})
                     .beta.empty())
              return {false, "empty decoration"};
          } else {
            const auto back = beta_to_delta(a);
            if (!back.is_valid() || delta_to_beta(back) != a) return {false, "round trip fails"};
          }
          ++n;
        }
  return {true, std::to_string(n) + " decorated arrays"};
}

Outcome mirabolic_bijection() {
  long arrays = 0, inverted = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto rep = verify_mirabolic_bijection(d);
    if (rep.matches != rep.total || rep.total == 0) return {false, "forward sweep fails at d=" + std::to_string(d)};
    arrays += rep.total;
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& mup : enumerate_compositions(d))
        for (const auto& o : enumerate_mirabolic_outputs(mu, mup)) {
          if (mirabolic_rsk(mirabolic_inverse_search(o, mu, mup)) != o) return {false, "inverse search fails"};
          ++inverted;
        }
  }
  return {true, fmt::format("{} arrays, {} quintuples inverted", arrays, inverted)};
}

Outcome rosso() {
  struct Cfg {
    Partition lambda;
    Composition mu, nu;
  };
  const std::vector<Cfg> cfgs{
      {Partition{4, 2, 1}, Composition{2, 2, 1, 2}, Composition{2, 2, 3}},
      {Partition{4, 2, 1}, Composition{2, 2, 1, 2}, Composition{2, 2, 1, 2}},
      {Partition{3, 2, 1, 1}, Composition{2, 2, 3}, Composition{2, 2, 3}},
      {Partition{4, 2, 1}, Composition::ones(7), Composition{2, 2, 1, 2}},
      {Partition{3, 2, 1}, Composition::ones(6), Composition::ones(6)},
      {Partition{3, 1, 1}, Composition{2, 1, 2}, Composition::ones(5)},
      {Partition{2, 2}, Composition{2, 2}, Composition{1, 2, 1}},
      {Partition{2, 1}, Composition::ones(3), Composition::ones(3)},
  };
  VerificationReport total;
  std::string detail;
  double worst = 0;
  for (const auto& c : cfgs) {
    RossoConfig rc{c.lambda, c.mu, c.nu};
    rc.seed = kSeed;
    rc.workers = kWorkers;
    const auto t0 = Clock::now();
    const auto rep = verify_rosso(rc);
    worst = std::max(worst, seconds_since(t0));
    total.merge(rep);
    detail += fmt::format("\n    {}/{}/{}: ", c.lambda.to_string(), c.mu.to_string(), c.nu.to_string());
    detail += rep.counters.count("empty_stratum") ? std::string("empty stratum, no samples")
                                                  : fmt::format("{}/{} = {:.4f}", rep.matches, rep.total, rep.rate());
  }
  const bool ok = total.total > 0 && total.rate() >= 0.98 && worst < 60;
  return {ok, fmt::format("aggregate {}/{} = {:.4f}, slowest config {:.2f} s", total.matches, total.total,
                          total.rate(), worst) +
                  detail};
}

Outcome thm2() {
  const std::vector<std::pair<Composition, Composition>> cfgs{
      {Composition{1}, Composition{1}},
      {Composition{1, 1}, Composition{2}},
      {Composition{1, 1, 1}, Composition{2, 1}},
      {Composition{2, 2}, Composition::ones(4)},
      {Composition{1, 2, 1}, Composition{2, 1, 1}},
      {Composition::ones(5), Composition::ones(5)},
      {Composition{2, 2, 1}, Composition{1, 2, 2}},
      {Composition{2, 3}, Composition{3, 2}},
      {Composition{1, 2, 1, 1}, Composition{2, 1, 2}},
  };
  VerificationReport total;
  std::string detail;
  double worst = 0;
  for (const auto& [mu, mup] : cfgs) {
    Thm2Config tc{mu, mup};
    tc.seed = kSeed;
    tc.workers = kWorkers;
    const auto t0 = Clock::now();
    const auto rep = verify_thm2(tc);
    worst = std::max(worst, seconds_since(t0));
    total.merge(rep);
    const long vz = rep.counters.count("v_zero_samples") ? rep.counters.at("v_zero_samples") : 0;
    detail += fmt::format("\n    {}/{}: {}/{} = {:.4f}, v=0 samples {}", mu.to_string(), mup.to_string(), rep.matches,
                          rep.total, rep.rate(), vz);
  }
  const bool ok = total.total > 0 && total.rate() >= 0.98 && worst < 120;
  return {ok, fmt::format("aggregate {}/{} = {:.4f}, v=0 samples {}, slowest config {:.2f} s", total.matches,
                          total.total, total.rate(), total.counters["v_zero_samples"], worst) +
                  detail};
}

Outcome properties() {
  // Interlacing on every output of mirabolic_rsk, d <= 5.
  long outputs = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& mup : enumerate_compositions(d))
        for (const auto& da : enumerate_decorated_arrays(mu, mup)) {
          const auto o = mirabolic_rsk(da);
          if (!interlaces(o.lambda, o.theta) || !interlaces(o.lambda_prime, o.theta))
            return {false, "interlacing fails"};
          ++outputs;
        }

  // Variant against classical RSK on permutations.
  long perms = 0;
  for (int d = 1; d <= 5; ++d) {
    std::vector<int> u(static_cast<std::size_t>(d)), w;
    std::iota(u.begin(), u.end(), 1);
    w = u;
    do {
      const TwoRowArray a{u, w};
      if (rsk_forward(a) != rsk_forward_classical(a)) return {false, "variant differs from classical"};
      ++perms;
    } while (std::next_permutation(w.begin(), w.end()));
  }

  // Jordan types of conjugated Jordan forms.
  const gf::PrimeField field;
  std::mt19937_64 rng(kSeed);
  long shapes = 0;
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : enumerate_partitions(d)) {
      const auto n = static_cast<std::size_t>(d);
      // g is built as a product of a random lower and upper unitriangular
      // matrix so its inverse is available by transposing the recipe.
      gf::MatrixGF lower = gf::MatrixGF::identity(field, n), upper = gf::MatrixGF::identity(field, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          if (r > c) lower(r, c) = field.random(rng);
          if (r < c) upper(r, c) = field.random(rng);
        }
      auto unitri_inverse = [&](const gf::MatrixGF& t) {
        // (I - N)^{-1} = I + N + N^2 + ... for nilpotent N = I - t.
        const auto nil = gf::MatrixGF::identity(field, n) - t;
        gf::MatrixGF acc = gf::MatrixGF::identity(field, n), term = gf::MatrixGF::identity(field, n);
        for (std::size_t k = 1; k < n; ++k) {
          term = term * nil;
          acc = acc + term;
        }
        return acc;
      };
      const auto g = lower * upper;
      const auto g_inv = unitri_inverse(upper) * unitri_inverse(lower);
      if (g * g_inv != gf::MatrixGF::identity(field, n)) return {false, "test inverse wrong"};
      const auto x = g * gf::MatrixGF::jordan_nilpotent(field, lambda) * g_inv;
      if (gf::jordan_type(x) != lambda) return {false, "jordan_type fails on " + lambda.to_string()};
      ++shapes;
    }

  // dim(A+B) + dim(A n B) = dim A + dim B.
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto random_subspace = [&] {
      std::vector<gf::Vector> vs(std::uniform_int_distribution<std::size_t>(0, n)(rng), gf::Vector(n));
      for (auto& v : vs)
        for (auto& e : v) e = std::bernoulli_distribution(0.4)(rng) ? field.random(rng) : 0;
      return gf::SubspaceGF::span(field, n, vs);
    };
    const auto a = random_subspace();
    const auto b = random_subspace();
    if (gf::sum(a, b).dim() + gf::intersect(a, b).dim() != a.dim() + b.dim()) return {false, "dimension identity"};
  }
  return {true, fmt::format("{} mirabolic outputs, {} permutations, {} Jordan types, 1000 subspace pairs", outputs,
                            perms, shapes)};
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  int failed = 0;
  failed += !run_criterion(1, "worked example, combinatorial side", 1, worked_combinatorial);
  failed += !run_criterion(2, "worked example, geometric side", 1, worked_geometric);
  failed += !run_criterion(3, "RSK bijection, d <= 5", 120, rsk_bijection);
  failed += !run_criterion(4, "standardization commutes with RSK, d <= 5", 120, commute);
  failed += !run_criterion(5, "decoration dictionary, d <= 4", 60, dictionary);
  failed += !run_criterion(6, "mirabolic RSK bijection, d <= 4", 300, mirabolic_bijection);
  failed += !run_criterion(7, "flag relative position vs RSK (statistical), d <= 7", 480, rosso);
  failed += !run_criterion(8, "conormal Jordan data vs mirabolic RSK (statistical), d <= 5", 1080, thm2);
  failed += !run_criterion(9, "property suites", 120, properties);
  fmt::print("{} of 9 criteria passed in {:.2f} s\n", 9 - failed, seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
