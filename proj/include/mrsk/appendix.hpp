#pragma once

// The worked 7-dimensional example shipped as fixtures/appendix-a.json, and a
// deterministic end-to-end check of it (no randomness involved).

#include <filesystem>

#include "mrsk/flag.hpp"
#include "mrsk/gf.hpp"
#include "mrsk/json_io.hpp"
#include "mrsk/mirabolic.hpp"
#include "mrsk/verify.hpp"

namespace mrsk {

struct AppendixFixture {
  gf::PrimeField field;
  gf::MatrixGF x;
  gf::MatrixGF x_prime;
  FlagGF f;
  FlagGF f_prime;
  gf::Vector v;
  gf::Vector v_star;
  DecoratedArray input;
  MarginMatrix matrix;
  MirabolicOutput expected;
  std::vector<int> initial_reserve;
  std::vector<MirabolicStep> trace;  // inserted is left at 0
  Tableau t_full;
  Partition nu;
};

AppendixFixture load_appendix_fixture(const std::filesystem::path& path, gf::Residue p = gf::kDefaultPrime);

/// True when R, T_i, T'_i and the decorated flag agree at every step, and the
/// final T_2d and nu agree. The inserted values are not compared.
bool trace_matches(const MirabolicTrace& trace, const AppendixFixture& fx);

/// One bucket per check, each with a single 0/1 record:
///   combinatorial: mirabolic_rsk, trace
///   geometric:     relative_position, beta, conormal, lambda, theta,
///                  lambda_prime, T, T_prime, geometry_vs_algorithm
VerificationReport check_appendix(const AppendixFixture& fx);

}  // namespace mrsk
