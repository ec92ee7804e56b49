#pragma once

// Geometric side: partial flags over F_p, the tableau of an x-stable flag,
// relative position, the orbit decoration of a (flag, flag, vector) triple,
// and conormal vectors.

#include <random>
#include <set>
#include <vector>

#include "mrsk/arrays.hpp"
#include "mrsk/combinat.hpp"
#include "mrsk/gf.hpp"
#include "mrsk/mirabolic.hpp"

namespace mrsk {

/// Chain 0 = F_0 < F_1 < ... < F_n = k^d with strict inclusions.
class FlagGF {
public:
  FlagGF() = default;
  /// steps holds F_1, ..., F_n; the last one must be the whole space.
  explicit FlagGF(std::vector<gf::SubspaceGF> steps);
  /// F_i = span of generators[0..i-1] concatenated, as in "F_2 = <F_1, a, b>".
  static FlagGF from_generators(gf::PrimeField field, std::size_t ambient,
                                const std::vector<std::vector<gf::Vector>>& generators);

  std::size_t ambient() const { return ambient_; }
  const gf::PrimeField& field() const { return field_; }
  std::size_t length() const { return steps_.size() - 1; }
  /// i in [0, length()]; F_0 is the zero subspace.
  const gf::SubspaceGF& operator[](std::size_t i) const { return steps_[i]; }
  const Composition& type() const { return type_; }

  /// x(F_i) inside F_{i-1} for every i.
  bool is_lowered_by(const gf::MatrixGF& x) const;

private:
  gf::PrimeField field_;
  std::size_t ambient_ = 0;
  std::vector<gf::SubspaceGF> steps_;  // F_0 .. F_n
  Composition type_;
};

/// Square matrix over F_p with x^d = 0, checked at construction.
class NilpotentEndo {
public:
  explicit NilpotentEndo(gf::MatrixGF m);
  const gf::MatrixGF& matrix() const { return m_; }
  Partition jordan_type() const { return gf::jordan_type(m_); }

private:
  gf::MatrixGF m_;
};

struct ConormalVector {
  gf::MatrixGF x;
  gf::MatrixGF x_prime;
  gf::Vector v_star;
};

/// M(i,j) = dim(F_i n F'_j) - dim(F_i n F'_{j-1}) - dim(F_{i-1} n F'_j)
///        + dim(F_{i-1} n F'_{j-1}).
MarginMatrix relative_position(const FlagGF& f, const FlagGF& f_prime);

/// Entry i fills the boxes by which the Jordan type of x restricted to F_i
/// exceeds that of x restricted to F_{i-1}.
Tableau tableau_of_flag(const gf::MatrixGF& x, const FlagGF& f);

/// Random point of the component of F^mu_x indexed by t, built top-down:
/// F_{i-1} = x F_i + random vectors from the layers (ker x^k n F_i) + x F_i,
/// with the number drawn per layer forced by the shapes of t.
FlagGF sample_flag_in_component(const gf::MatrixGF& x, const Tableau& t, std::mt19937_64& rng,
                                int max_attempts = 64);

/// Random x-stable flag of type mu: the component is chosen uniformly among
/// enumerate_semistandard(jordan_type(x), mu), then sampled generically.
/// Throws EmptyStratumError when no tableau of that shape and content exists.
FlagGF sample_x_stable_flag(const gf::MatrixGF& x, const Composition& mu, std::mt19937_64& rng);

/// Decoration beta of the triple, as 1-based columns of
/// matrix_to_array(relative_position(f, f_prime)).
std::set<int> beta_of_triple(const FlagGF& f, const FlagGF& f_prime, const gf::Vector& v);

/// Solution space of the conormal conditions in the unknowns (x, v*),
/// packed as x row-major followed by v*.
gf::SubspaceGF conormal_space(const FlagGF& f, const FlagGF& f_prime, const gf::Vector& v);
gf::Vector pack_conormal(const gf::MatrixGF& x, const gf::Vector& v_star);

/// Uniform element of conormal_space; x' = -x - v*(.) v.
ConormalVector sample_conormal(const FlagGF& f, const FlagGF& f_prime, const gf::Vector& v, std::mt19937_64& rng);

/// Checks all three defining linear conditions of a conormal vector.
bool is_conormal(const ConormalVector& c, const FlagGF& f, const FlagGF& f_prime, const gf::Vector& v);

/// (jordan type of x, of x restricted to V / k[x]v, of x', tableau of F under x,
/// tableau of F' under x').
MirabolicOutput mirabolic_type_of_conormal(const ConormalVector& c, const FlagGF& f, const FlagGF& f_prime,
                                           const gf::Vector& v);

/// Canonical orbit representative of a decorated array in the basis given by
/// the columns of g: F_i = <g e_r : w(r) <= i>, F'_j = <g e_s : u(s) <= j>,
/// v = sum over beta of g e_r.
struct Triple {
  FlagGF f;
  FlagGF f_prime;
  gf::Vector v;
};
Triple orbit_representative(const DecoratedArray& da, const gf::MatrixGF& g);

}  // namespace mrsk
