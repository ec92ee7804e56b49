#pragma once

// Decorated arrays (an ordered array plus a subset beta of its columns), the
// equivalent decorated matrices (M, Delta), and the mirabolic RSK algorithm.
//
// Column indices in beta are 1-based positions in the canonical array.
// Matrix positions in Delta are 1-based (row = w value, column = u value).

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mrsk/arrays.hpp"
#include "mrsk/combinat.hpp"

namespace mrsk {

struct DecoratedArray {
  TwoRowArray omega;
  std::set<int> beta;

  friend auto operator<=>(const DecoratedArray&, const DecoratedArray&) = default;
};

struct MatrixPos {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const MatrixPos&, const MatrixPos&) = default;
};

struct DecoratedMatrix {
  MarginMatrix m;
  std::set<MatrixPos> delta;

  /// Rows strictly increase while columns strictly decrease along delta, and
  /// every position of delta carries a positive entry.
  bool is_valid() const;

  friend auto operator<=>(const DecoratedMatrix&, const DecoratedMatrix&) = default;
};

struct MirabolicOutput {
  Partition lambda;
  Partition theta;
  Partition lambda_prime;
  Tableau t;
  Tableau t_prime;

  friend auto operator<=>(const MirabolicOutput&, const MirabolicOutput&) = default;
};

/// One loop iteration of the algorithm, for printing traces.
struct MirabolicStep {
  int index = 0;             // 1-based array column
  bool decorated = false;    // index in beta
  int inserted = 0;          // value inserted into T_{i-1}
  std::vector<int> reserve;  // R after this step
  Tableau t;                 // T_i
  Tableau t_prime;           // T'_i
};

struct MirabolicTrace {
  std::vector<int> initial_reserve;
  std::vector<MirabolicStep> steps;
  Tableau t_full;  // T_{2d}
  Partition nu;    // shape of T_{2d}
  MirabolicOutput output;
};

/// For i outside beta and j inside beta, u(i) > u(j) or w(i) > w(j). Also
/// requires beta to index existing columns.
bool validate_decoration(const DecoratedArray& da);

/// beta = columns l with (w(l), u(l)) weakly northwest of some position of
/// Delta (row <= and column <=).
DecoratedArray delta_to_beta(const DecoratedMatrix& dm);

/// Delta = the maximal positions (outer corners) of {(w(l), u(l)) : l in beta}.
/// An empty beta is the v = 0 stratum, which has no Delta; that case throws.
DecoratedMatrix beta_to_delta(const DecoratedArray& da);

MirabolicOutput mirabolic_rsk(const DecoratedArray& da);
MirabolicTrace mirabolic_rsk_traced(const DecoratedArray& da);

/// All (omega, beta) with omega in canonical order with w-content mu and
/// u-content mu_prime, and beta a valid decoration (including empty).
std::vector<DecoratedArray> enumerate_decorated_arrays(const Composition& mu, const Composition& mu_prime);

/// All quintuples (lambda, theta, lambda', T, T') with both interlacings,
/// T of shape lambda and content mu, T' of shape lambda' and content mu'.
std::vector<MirabolicOutput> enumerate_mirabolic_outputs(const Composition& mu, const Composition& mu_prime);

/// Exhaustive preimage search; throws if the preimage is empty or not unique.
DecoratedArray mirabolic_inverse_search(const MirabolicOutput& out, const Composition& mu,
                                        const Composition& mu_prime, int max_size = 6);

std::string to_string(const std::set<int>& beta);

}  // namespace mrsk
