#pragma once

#include "orbvar/domino_tableau.hpp"
#include "orbvar/signed_perm.hpp"

namespace orbvar {

/// Two standard tableaux of the same type and shape, (T_L, T_R).
struct TableauPair {
  DominoTableau left;
  DominoTableau right;

  /// Throws DomainError unless both are standard with equal type and shape.
  TableauPair(DominoTableau l, DominoTableau r);

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
  friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

/// One step of domino insertion. Dominoes labeled below |value| stay put; the
/// new domino enters horizontally at the end of row 1 (value > 0) or
/// vertically at the bottom of column 1 (value < 0) of the shape they form,
/// and every larger label is re-placed in increasing order:
///   - untouched if it misses the cells placed so far;
///   - a horizontal domino in row i that is fully covered moves to the end of
///     row i+1; if only its left cell (i,c) is covered it becomes the vertical
///     domino (i,c+1),(i+1,c+1);
///   - vertical dominoes behave the same way with rows and columns swapped.
///
/// T may use any set of labels (as the insertion tableaux of a prefix of w do).
DominoTableau insertLetter(const DominoTableau& tableau, int value);

/// Domino Robinson-Schensted: left is the insertion tableau of w(1),...,w(n),
/// right records the cells added at each step.
TableauPair rs(const SignedPermutation& w, LieType type);

/// Inverse of rs, by reverse bumping from the largest recording label down.
SignedPermutation rsInverse(const TableauPair& pair);

}  // namespace orbvar
