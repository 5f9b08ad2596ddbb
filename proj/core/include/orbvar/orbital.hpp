#pragma once

#include <vector>

#include "orbvar/cycles.hpp"
#include "orbvar/partition.hpp"
#include "orbvar/signed_perm.hpp"

namespace orbvar {

struct AnnealStep {
  Cycle cycle;
  Partition shapeBefore;
  Partition shapeAfter;
};

struct OrbitalResult {
  DominoTableau tableau;
  Partition orbit;
  std::vector<AnnealStep> trace;
};

struct CandidateMove {
  Cycle cycle;
  DominoTableau result;
  Partition resultShape;

  int label() const { return cycle.minLabel(); }
  Coloring coloring() const { return cycle.coloring; }
};

/// Open cycles (either coloring) whose hole and corner lie in rows of odd
/// length (type C) or even length (type B) of the current shape and whose move
/// lowers the shape. One entry per cycle, in canonical order: dominance-largest
/// result first (lexicographically largest shape), then smallest label, then
/// X before D.
std::vector<CandidateMove> candidateMoves(const DominoTableau& tableau);

/// Lowers the shape through candidate moves until it is an X-partition.
/// Throws std::logic_error if no move is available before that.
OrbitalResult orbitalTableau(const DominoTableau& leftTableau);

/// Orbit partition of the orbital variety attached to w.
Partition orbitOf(const SignedPermutation& w, LieType type);

/// Open X-cycles (up or down), the moves allowed by specialProjection, in
/// canonical order.
std::vector<CandidateMove> specialMoves(const DominoTableau& tableau);

/// Moves through open X-cycles until the shape is a special X-partition.
DominoTableau specialProjection(const DominoTableau& tableau);

}  // namespace orbvar
