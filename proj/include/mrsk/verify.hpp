#pragma once

// Statistical harnesses comparing the geometric side (random points over F_p)
// with the combinatorial algorithms.
//
// The geometric statements hold for generic points only; a random point over
// F_p lands off the generic locus with probability O(1/p), so the harnesses
// report match rates rather than asserting every sample.

#include <cstdint>
#include <map>
#include <string>

#include "mrsk/combinat.hpp"
#include "mrsk/gf.hpp"
#include "mrsk/mirabolic.hpp"

namespace mrsk {

struct BucketCount {
  long matches = 0;
  long total = 0;
  friend bool operator==(const BucketCount&, const BucketCount&) = default;
};

struct VerificationReport {
  std::string kind;
  std::map<std::string, BucketCount> buckets;
  std::map<std::string, long> counters;  // auxiliary tallies, e.g. v=0 samples
  long matches = 0;
  long total = 0;

  double rate() const { return total == 0 ? 1.0 : static_cast<double>(matches) / static_cast<double>(total); }
  void record(const std::string& bucket, bool match);
  /// Associative and commutative on the counts.
  void merge(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct RossoConfig {
  Partition lambda;
  Composition mu;
  Composition nu;
  gf::Residue p = gf::kDefaultPrime;
  int samples = 500;
  std::uint64_t seed = 0;
  int workers = 1;
};

/// For x in Jordan form of type lambda, draws F and F' from random components
/// of F^mu_x and F^nu_x and checks relative_position(F, F') against the
/// matrix of rsk_inverse(T, T'). Buckets are keyed by the pair (T, T').
/// When F^mu_x or F^nu_x is empty no samples are drawn and the counter
/// "empty_stratum" is set.
VerificationReport verify_rosso(const RossoConfig& cfg);

struct Thm2Config {
  Composition mu;
  Composition mu_prime;
  gf::Residue p = gf::kDefaultPrime;
  int samples = 500;
  std::uint64_t seed = 0;
  double v_zero_probability = 0.1;
  int workers = 1;
};

/// Draws a decorated array (empty beta with probability v_zero_probability),
/// realises its orbit in a random basis, recovers (omega, beta) from the
/// geometry, samples a conormal vector and compares its Jordan data and
/// tableaux with mirabolic_rsk. Buckets are keyed by (omega, beta).
VerificationReport verify_thm2(const Thm2Config& cfg);

/// Exhaustive check that mirabolic_rsk maps the decorated arrays of every
/// composition pair of d bijectively onto enumerate_mirabolic_outputs. One
/// record per array (its image is a valid quintuple hit by nothing else) and
/// one failing record per quintuple that is never hit. Buckets are keyed by
/// "mu|mu'".
VerificationReport verify_mirabolic_bijection(int d);

/// Deterministic per-worker generator.
std::mt19937_64 worker_rng(std::uint64_t seed, int worker);

}  // namespace mrsk
