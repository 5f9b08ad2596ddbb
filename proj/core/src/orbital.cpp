#include "orbvar/orbital.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "orbvar/insertion.hpp"

namespace orbvar {

namespace {

void canonicalOrder(std::vector<CandidateMove>& moves) {
  std::stable_sort(moves.begin(), moves.end(), [](const CandidateMove& a, const CandidateMove& b) {
    if (a.resultShape != b.resultShape) return a.resultShape > b.resultShape;
    if (a.label() != b.label()) return a.label() < b.label();
    return a.coloring() == Coloring::X && b.coloring() == Coloring::D;
  });
}

bool rowLengthAllowed(int length, LieType type) { return (length % 2 == 1) == (type == LieType::C); }

}  // namespace

std::vector<CandidateMove> candidateMoves(const DominoTableau& tableau) {
  const auto current = shape(tableau);
  std::vector<CandidateMove> out;
  for (Coloring coloring : {Coloring::X, Coloring::D}) {
    for (auto& cycle : cyclesOf(tableau, coloring)) {
      if (!cycle.open || !*cycle.down) continue;
      if (!rowLengthAllowed(current[cycle.hole->row - 1], tableau.type()) ||
          !rowLengthAllowed(current[cycle.corner->row - 1], tableau.type())) {
        continue;
      }
      auto result = moveThrough(tableau, cycle);
      auto resultShape = shape(result);
      out.push_back(CandidateMove{std::move(cycle), std::move(result), std::move(resultShape)});
    }
  }
  canonicalOrder(out);
  return out;
}

OrbitalResult orbitalTableau(const DominoTableau& leftTableau) {
  if (auto check = validate(leftTableau); !check) throw DomainError("not a standard tableau: " + check.diagnostic);
  OrbitalResult result{leftTableau, shape(leftTableau), {}};
  const auto bound = partitionsOf(result.orbit.size()).size();
  while (!isXPartition(result.orbit, leftTableau.type())) {
    auto moves = candidateMoves(result.tableau);
    if (moves.empty()) {
      throw std::logic_error("no admissible cycle lowers " + result.orbit.toString() + " toward an X-partition");
    }
    auto& chosen = moves.front();
    result.trace.push_back(AnnealStep{chosen.cycle, result.orbit, chosen.resultShape});
    result.tableau = std::move(chosen.result);
    result.orbit = std::move(chosen.resultShape);
    if (result.trace.size() > bound) throw std::logic_error("anneal did not terminate");
  }
  return result;
}

Partition orbitOf(const SignedPermutation& w, LieType type) { return orbitalTableau(rs(w, type).left).orbit; }

std::vector<CandidateMove> specialMoves(const DominoTableau& tableau) {
  std::vector<CandidateMove> out;
  for (auto& cycle : cyclesOf(tableau, Coloring::X)) {
    if (!cycle.open) continue;
    auto result = moveThrough(tableau, cycle);
    auto resultShape = shape(result);
    out.push_back(CandidateMove{std::move(cycle), std::move(result), std::move(resultShape)});
  }
  canonicalOrder(out);
  return out;
}

namespace {

bool specialShape(const Partition& p, LieType type) { return isXPartition(p, type) && isSpecial(p, type); }

}  // namespace

// Depth-first in canonical order, never revisiting a tableau. Up and down moves
// are both allowed, so a plain greedy walk could oscillate; the visited set
// bounds the search by the number of tableaux reachable from the input.
DominoTableau specialProjection(const DominoTableau& tableau) {
  if (auto check = validate(tableau); !check) throw DomainError("not a standard tableau: " + check.diagnostic);
  std::set<DominoTableau> visited;
  std::vector<DominoTableau> stack{tableau};
  while (!stack.empty()) {
    auto current = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(current).second) continue;
    if (specialShape(shape(current), current.type())) return current;
    auto moves = specialMoves(current);
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
      if (!visited.count(it->result)) stack.push_back(std::move(it->result));
    }
  }
  throw std::logic_error("no tableau of special shape is reachable through open X-cycles");
}

}  // namespace orbvar
