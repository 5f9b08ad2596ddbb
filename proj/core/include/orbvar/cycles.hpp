#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbvar/domino_tableau.hpp"
#include "orbvar/insertion.hpp"

namespace orbvar {

/// Which squares are fixed. Under the X-coloring squares with row+col odd are
/// fixed, under the D-coloring those with row+col even, in both types. Every
/// domino has exactly one fixed square under either coloring.
enum class Coloring { X, D };

inline char toChar(Coloring c) { return c == Coloring::X ? 'X' : 'D'; }
Coloring parseColoring(std::string_view text);

bool isFixed(Square s, Coloring coloring);
Square fixedSquare(const Domino& d, Coloring coloring);

/// A cycle of a tableau under a coloring.
///
/// Moving through a cycle pivots each of its dominoes about its fixed square.
/// An anchored cycle is one whose pivot would uncover or collide with the
/// corner cell (1,1) (the core in type B, or the squares it pins): no
/// standard retiling exists, so moving through it is the identity.
struct Cycle {
  Coloring coloring = Coloring::X;
  std::vector<int> labels;     // sorted
  std::vector<Domino> targets;  // positions after the move, parallel to labels
  bool anchored = false;
  bool open = false;
  std::optional<Square> hole;    // cell removed from the shape
  std::optional<Square> corner;  // cell added to the shape
  std::optional<bool> down;      // the move lowers the shape
  bool boxed = false;

  int minLabel() const { return labels.front(); }
  bool contains(int label) const;
  std::string describe() const;
};

Cycle cycleOf(const DominoTableau& tableau, int label, Coloring coloring);
/// All cycles of a tableau; they partition its labels. Ordered by min label.
std::vector<Cycle> cyclesOf(const DominoTableau& tableau, Coloring coloring);

/// The cycle must have been computed on this tableau.
DominoTableau moveThrough(const DominoTableau& tableau, const Cycle& cycle);
/// Moves through label-disjoint cycles of the same tableau at once.
DominoTableau moveThroughSet(const DominoTableau& tableau, std::span<const Cycle> cycles);

/// The cycles of the right tableau (starting from the cycle of `label`) and of
/// the left tableau that have to move together so that both shapes change the
/// same way.
struct ExtendedCycle {
  std::vector<Cycle> right;
  std::vector<Cycle> left;
};

/// Throws DomainError when some hole or corner can only be matched by an
/// anchored or closed cycle on the other side (the extended cycle is blocked).
ExtendedCycle extendedCycle(const TableauPair& pair, int label, Coloring coloring);
TableauPair moveThroughExtended(const TableauPair& pair, int label, Coloring coloring);

}  // namespace orbvar
