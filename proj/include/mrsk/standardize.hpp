#pragma once

#include "mrsk/arrays.hpp"
#include "mrsk/combinat.hpp"

namespace mrsk {

enum class StdConvention {
  Variant,    // tableaux: top row first; arrays: equal letters numbered decreasingly
  Classical,  // tableaux and arrays: equal letters numbered increasingly left to right
};

/// Renumbers the occurrences of each value consecutively. Under the variant
/// convention occurrences are taken top row first (at most one per row); the
/// input must be column-semistandard.
Tableau std_tableau(const Tableau& t, StdConvention conv = StdConvention::Variant);

/// Top row becomes 1..d. In the bottom row the occurrences of each value are
/// replaced by the next block of integers, assigned decreasingly from left to
/// right (variant) or increasingly (classical, for lexicographic arrays).
/// The variant form requires canonical order.
TwoRowArray std_array(const TwoRowArray& a, StdConvention conv = StdConvention::Variant);

/// Undoes std_array for fixed contents: top row becomes nu_1 ones, nu_2 twos,
/// ...; bottom letter k becomes j when it lies in the j-th block of mu. Throws
/// NotInImageError when the permutation is not the standardization of any
/// array with these contents.
TwoRowArray std_inverse(const TwoRowArray& perm, const Composition& mu, const Composition& nu);

/// rsk_forward(std_array(a)) == (std_tableau(P), std_tableau(Q)).
bool check_commute(const TwoRowArray& a);

}  // namespace mrsk
