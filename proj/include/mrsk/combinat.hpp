#pragma once

// Partitions, compositions and tableaux.
//
// Tableaux follow the "column-semistandard" convention used throughout this
// library: entries strictly increase along rows and weakly increase down
// columns. This is the transpose of the textbook semistandard convention.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mrsk {

/// Weakly decreasing sequence of positive integers. The empty sequence is the
/// zero partition.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops trailing zeros before validating.
  static Partition from_padded(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;  // |lambda|

  /// 1-based access with zero padding beyond the last part.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  /// Sum over k>=1 of max(lambda_i - k, 0); the rank of x^k for a nilpotent
  /// of this Jordan type.
  int rank_of_power(int k) const;
  /// True when every part of *this is <= the corresponding part of other.
  bool contained_in(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// Finite sequence of positive integers (zero parts are rejected).
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Explicit conversion from a content vector; fails if any entry is zero.
  static Composition from_content(const std::vector<int>& content);
  /// (1,1,...,1) with d parts.
  static Composition ones(int d);

  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

/// Multiplicity vector: c[i-1] counts entry i. May contain zeros, unlike a
/// Composition.
using ContentVector = std::vector<int>;

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Left-justified filling of a Young diagram with positive integers, stored
/// row-major. Construction checks only the diagram shape; filling rules are
/// queried with is_semistandard / is_standard.
class Tableau {
public:
  using Row = std::vector<int>;

  Tableau() = default;
  explicit Tableau(std::vector<Row> rows);
  Tableau(std::initializer_list<std::initializer_list<int>> rows);

  const std::vector<Row>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  /// Number of boxes.
  int size() const;
  int max_entry() const;

  /// 1-based access.
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }

  Partition shape() const;
  ContentVector content() const;
  bool is_semistandard() const;
  bool is_standard() const;

  /// Boxes holding entries <= bound; always a Young diagram for semistandard
  /// tableaux.
  Tableau restricted_to(int bound) const;

  /// Reading word: rows concatenated top to bottom.
  std::vector<int> reading_word() const;

  /// One row per line, entries separated by single spaces.
  std::string to_text() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
  std::vector<Row> rows_;
};

// Free-function forms.
Partition shape(const Tableau& t);
ContentVector content(const Tableau& t);
bool is_semistandard(const Tableau& t);

/// lambda_i >= theta_i >= lambda_{i+1} for every i, theta padded with zeros.
bool interlaces(const Partition& lambda, const Partition& theta);

/// Sum over i of (i-1) * lambda_i.
int n_lambda(const Partition& lambda);

/// All partitions of d, in reverse lexicographic order ((d) first).
std::vector<Partition> enumerate_partitions(int d);

/// All compositions of d, in lexicographic order.
std::vector<Composition> enumerate_compositions(int d);

/// All partitions theta with (lambda, theta) interlacing.
std::vector<Partition> enumerate_interlacing(const Partition& lambda);

/// Every column-semistandard tableau with the given shape and content, each
/// exactly once, ordered lexicographically by reading word. Throws on a size
/// mismatch.
std::vector<Tableau> enumerate_semistandard(const Partition& shape, const Composition& content);

}  // namespace mrsk
