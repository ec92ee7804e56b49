#include "mrsk/verify.hpp"

#include <map>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "mrsk/arrays.hpp"
#include "mrsk/error.hpp"
#include "mrsk/flag.hpp"
#include "mrsk/rsk.hpp"

namespace mrsk {

namespace {

std::string compact(const Tableau& t) {
  std::string s = "[";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) s += (c ? "," : "") + std::to_string(t.rows()[r][c]);
    s += "]";
  }
  return s + "]";
}

std::string compact(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string bucket_key(const DecoratedArray& da) {
  return "u=" + compact(da.omega.u) + ";w=" + compact(da.omega.w) + ";beta=" + to_string(da.beta);
}

// Runs body(sample_index, rng, report) for every sample, spreading samples
// round-robin over the workers. Each worker owns its generator, so the merged
// report depends only on (seed, workers, samples).
template <typename Body>
VerificationReport fan_out(const std::string& kind, int samples, std::uint64_t seed, int workers, Body body) {
  workers = std::max(1, workers);
  std::vector<VerificationReport> partial(static_cast<std::size_t>(workers));
  auto run_worker = [&](int w) {
    auto rng = worker_rng(seed, w);
    auto& rep = partial[static_cast<std::size_t>(w)];
    for (int s = w; s < samples; s += workers) body(rng, rep);
  };
  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }
  VerificationReport out;
  out.kind = kind;
  for (const auto& p : partial) out.merge(p);
  return out;
}

}  // namespace

void VerificationReport::record(const std::string& bucket, bool match) {
  auto& b = buckets[bucket];
  ++b.total;
  ++total;
  if (match) {
    ++b.matches;
    ++matches;
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& [key, count] : other.buckets) {
    auto& b = buckets[key];
    b.matches += count.matches;
    b.total += count.total;
  }
  for (const auto& [key, value] : other.counters) counters[key] += value;
  matches += other.matches;
  total += other.total;
}

std::mt19937_64 worker_rng(std::uint64_t seed, int worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  return std::mt19937_64(seq);
}

VerificationReport verify_rosso(const RossoConfig& cfg) {
  if (cfg.lambda.size() != cfg.mu.size() || cfg.mu.size() != cfg.nu.size())
    throw Error("verify_rosso: lambda, mu and nu must have the same size");
  const gf::PrimeField field(cfg.p);
  const auto x = gf::MatrixGF::jordan_nilpotent(field, cfg.lambda);
  const int n = static_cast<int>(cfg.mu.length());
  const int np = static_cast<int>(cfg.nu.length());
  if (enumerate_semistandard(cfg.lambda, cfg.mu).empty() || enumerate_semistandard(cfg.lambda, cfg.nu).empty()) {
    VerificationReport empty;
    empty.kind = "rosso";
    empty.counters["empty_stratum"] = 1;
    return empty;
  }

  return fan_out("rosso", cfg.samples, cfg.seed, cfg.workers, [&](std::mt19937_64& rng, VerificationReport& rep) {
    const auto f = sample_x_stable_flag(x, cfg.mu, rng);
    const auto fp = sample_x_stable_flag(x, cfg.nu, rng);
    const auto t = tableau_of_flag(x, f);
    const auto tp = tableau_of_flag(x, fp);
    const auto predicted = array_to_matrix(rsk_inverse(t, tp), n, np);
    rep.record(compact(t) + "|" + compact(tp), relative_position(f, fp) == predicted);
  });
}

VerificationReport verify_thm2(const Thm2Config& cfg) {
  if (cfg.mu.size() != cfg.mu_prime.size()) throw Error("verify_thm2: mu and mu' must have the same size");
  const gf::PrimeField field(cfg.p);
  const std::size_t d = static_cast<std::size_t>(cfg.mu.size());

  std::vector<DecoratedArray> undecorated, decorated;
  for (auto& da : enumerate_decorated_arrays(cfg.mu, cfg.mu_prime))
    (da.beta.empty() ? undecorated : decorated).push_back(std::move(da));

  return fan_out("thm2", cfg.samples, cfg.seed, cfg.workers, [&](std::mt19937_64& rng, VerificationReport& rep) {
    const bool zero = decorated.empty() || std::bernoulli_distribution(cfg.v_zero_probability)(rng);
    const auto& pool = zero ? undecorated : decorated;
    const auto& da = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    if (zero) ++rep.counters["v_zero_samples"];

    const auto g = gf::MatrixGF::random_invertible(field, d, rng);
    const auto triple = orbit_representative(da, g);

    bool match = false;
    try {
      const DecoratedArray recovered{matrix_to_array(relative_position(triple.f, triple.f_prime)),
                                     beta_of_triple(triple.f, triple.f_prime, triple.v)};
      if (recovered != da) {
        ++rep.counters["orbit_mismatches"];
      } else {
        const auto c = sample_conormal(triple.f, triple.f_prime, triple.v, rng);
        match = mirabolic_type_of_conormal(c, triple.f, triple.f_prime, triple.v) == mirabolic_rsk(da);
      }
    } catch (const InvariantViolation&) {
      ++rep.counters["invariant_violations"];
    }
    rep.record(bucket_key(da), match);
  });
}

VerificationReport verify_mirabolic_bijection(int d) {
  VerificationReport rep;
  rep.kind = "mirabolic-bijection";
  const auto compositions = enumerate_compositions(d);
  for (const auto& mu : compositions) {
    for (const auto& mu_prime : compositions) {
      const auto key = mu.to_string() + "|" + mu_prime.to_string();
      const auto outputs = enumerate_mirabolic_outputs(mu, mu_prime);
      const std::set<MirabolicOutput> targets(outputs.begin(), outputs.end());
      std::map<MirabolicOutput, int> hits;
      std::vector<MirabolicOutput> images;
      for (const auto& da : enumerate_decorated_arrays(mu, mu_prime)) {
        images.push_back(mirabolic_rsk(da));
        ++hits[images.back()];
      }
      for (const auto& img : images) rep.record(key, targets.count(img) > 0 && hits[img] == 1);
      for (const auto& t : targets)
        if (!hits.count(t)) rep.record(key, false);
      if (targets.size() != outputs.size()) ++rep.counters["duplicate_outputs"];
    }
  }
  return rep;
}

}  // namespace mrsk
