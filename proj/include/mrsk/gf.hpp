#pragma once

// Dense exact linear algebra over a prime field F_p.
//
// Vectors are column vectors stored as std::vector<Residue>. Subspaces keep a
// basis in reduced row-echelon form, one basis vector per row, so equal
// subspaces compare equal.

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mrsk/combinat.hpp"

namespace mrsk::gf {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

inline constexpr Residue kDefaultPrime = 10007;

bool is_prime(std::uint64_t n);

/// Arithmetic modulo an odd prime p < 2^31.
class PrimeField {
public:
  explicit PrimeField(Residue p = kDefaultPrime);

  Residue p() const { return p_; }
  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue inv(Residue a) const;
  /// Maps a signed integer to its residue.
  Residue from_int(std::int64_t v) const;
  /// Representative in (-p/2, p/2], for printing.
  std::int64_t to_signed(Residue a) const;

  Residue random(std::mt19937_64& rng) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  Residue p_;
};

class MatrixGF {
public:
  MatrixGF() = default;
  MatrixGF(PrimeField field, std::size_t rows, std::size_t cols);
  /// Row-major signed integers, reduced mod p.
  static MatrixGF from_ints(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);
  static MatrixGF identity(PrimeField field, std::size_t n);
  static MatrixGF random(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
  static MatrixGF random_invertible(PrimeField field, std::size_t n, std::mt19937_64& rng);
  /// Nilpotent in Jordan form: blocks of sizes lambda_1, lambda_2, ... placed
  /// in that order along the diagonal, each mapping e_{s+1} -> e_s.
  static MatrixGF jordan_nilpotent(PrimeField field, const Partition& lambda);
  /// Matrix whose columns are the given vectors.
  static MatrixGF from_columns(PrimeField field, std::size_t rows, const std::vector<Vector>& cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  MatrixGF operator*(const MatrixGF& o) const;
  Vector operator*(const Vector& v) const;
  MatrixGF operator+(const MatrixGF& o) const;
  MatrixGF operator-(const MatrixGF& o) const;
  MatrixGF operator-() const;
  MatrixGF pow(unsigned k) const;
  MatrixGF transpose() const;
  bool is_zero() const;
  int rank() const;

  std::vector<std::vector<std::int64_t>> to_signed_ints() const;

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

struct RrefResult {
  MatrixGF matrix;  // same size as the input; zero rows at the bottom
  int rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const MatrixGF& m);

/// Rank-one operator z -> cov(z) * vec, i.e. the matrix vec * cov^T.
MatrixGF outer(const PrimeField& field, const Vector& vec, const Vector& cov);

class SubspaceGF {
public:
  SubspaceGF() = default;
  /// Zero subspace of k^ambient.
  SubspaceGF(PrimeField field, std::size_t ambient);
  static SubspaceGF span(PrimeField field, std::size_t ambient, const std::vector<Vector>& vectors);
  static SubspaceGF whole(PrimeField field, std::size_t ambient);

  const PrimeField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  /// RREF basis, one vector per entry.
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const SubspaceGF& other) const;
  /// Reduces v against the basis; the result is zero at every pivot.
  Vector reduce(const Vector& v) const;
  /// Coordinates of v (which must lie in the subspace) in the RREF basis.
  Vector coordinates(const Vector& v) const;
  /// Vectors w with <w, s> = 0 for every s in the subspace.
  SubspaceGF annihilator() const;
  Vector random_element(std::mt19937_64& rng) const;

  friend bool operator==(const SubspaceGF&, const SubspaceGF&) = default;

private:
  PrimeField field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

SubspaceGF sum(const SubspaceGF& a, const SubspaceGF& b);
SubspaceGF intersect(const SubspaceGF& a, const SubspaceGF& b);
bool contains(const SubspaceGF& a, const Vector& v);

/// Kernel {z : m z = 0} as a subspace of k^cols.
SubspaceGF nullspace(const MatrixGF& m);
/// m(s).
SubspaceGF image(const MatrixGF& m, const SubspaceGF& s);
/// {z : m z in s}.
SubspaceGF preimage(const MatrixGF& m, const SubspaceGF& s);
/// span{v, m v, m^2 v, ...}.
SubspaceGF cyclic_span(const MatrixGF& m, const Vector& v);

bool is_nilpotent(const MatrixGF& x);
/// Throws NotNilpotentError unless x^d = 0.
Partition jordan_type(const MatrixGF& x);

/// Matrix of x restricted to an invariant subspace, in its RREF basis.
MatrixGF restrict(const MatrixGF& x, const SubspaceGF& s);
/// Matrix of the induced map on k^d / s, in the basis of standard vectors at
/// the non-pivot coordinates of s.
MatrixGF quotient_action(const MatrixGF& x, const SubspaceGF& s);

/// Debug dump: {"p": ..., "rows": [[...]]} with signed representatives.
std::string dump(const MatrixGF& m);

}  // namespace mrsk::gf
