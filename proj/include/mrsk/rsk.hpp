#pragma once

// Row-bumping RSK for column-semistandard tableaux.
//
// The default rule bumps the left-most entry that is greater than *or equal
// to* the inserted value, so equal letters stack vertically and both output
// tableaux are strictly increasing along rows. The classical rule (bump the
// left-most strictly larger entry) is kept behind BumpRule::Classical for
// comparison on permutations only.

#include <utility>
#include <vector>

#include "mrsk/arrays.hpp"
#include "mrsk/combinat.hpp"

namespace mrsk {

enum class BumpRule {
  Variant,    // bump left-most entry >= z
  Classical,  // bump left-most entry > z
};

struct InsertionResult {
  Tableau tableau;
  Cell final_box;               // the cell added to the shape
  std::vector<Cell> bump_route; // one cell per row touched, top to bottom
};

/// Inserts z into t by row bumping. Under the variant rule t must be
/// column-semistandard.
InsertionResult row_insert(const Tableau& t, int z, BumpRule rule = BumpRule::Variant);

struct TableauPair {
  Tableau p;  // insertion tableau
  Tableau q;  // recording tableau
  friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

/// Inserts w(1..d) and records u(k) at each new box. The array must be in
/// canonical order (see reorder_to_paper).
TableauPair rsk_forward(const TwoRowArray& a);

/// Classical RSK on a word; only meaningful when all letters are distinct.
TableauPair rsk_forward_classical(const TwoRowArray& a);

/// Reverse bumping: repeatedly removes the box of q holding the largest
/// entry, taking the lowest such box on ties.
TwoRowArray rsk_inverse(const Tableau& p, const Tableau& q);

}  // namespace mrsk
