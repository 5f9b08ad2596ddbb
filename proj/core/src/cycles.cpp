#include "orbvar/cycles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbvar {

Coloring parseColoring(std::string_view text) {
  if (text == "X" || text == "x") return Coloring::X;
  if (text == "D" || text == "d") return Coloring::D;
  throw std::invalid_argument("unknown coloring '" + std::string(text) + "' (expected X or D)");
}

bool isFixed(Square s, Coloring coloring) {
  const int parity = (s.row + s.col) % 2;
  return coloring == Coloring::X ? parity == 1 : parity == 0;
}

Square fixedSquare(const Domino& d, Coloring coloring) {
  return isFixed(d.first(), coloring) ? d.first() : d.second();
}

bool Cycle::contains(int label) const { return std::binary_search(labels.begin(), labels.end(), label); }

std::string Cycle::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  out += "} ";
  out += toChar(coloring);
  if (anchored) return out + " anchored";
  if (!open) return out + " closed" + (boxed ? " boxed" : " unboxed");
  auto sq = [](Square s) { return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")"; };
  out += " open ";
  out += *down ? "down" : "up";
  out += " hole " + sq(*hole) + " corner " + sq(*corner);
  out += boxed ? " boxed" : " unboxed";
  return out;
}

namespace {

constexpr int kEmpty = std::numeric_limits<int>::max();

// Cells off the board read as 0 (smaller than any label), empty cells as +inf.
int labelOrSentinel(const DominoTableau& t, Square s) {
  if (s.row < 1 || s.col < 1) return 0;
  return t.labelAt(s).value_or(kEmpty);
}

// Pivot about the fixed square F. A variable square left of or below F moves
// to the right of or above F; one right of or above F moves below or left of
// F. The diagonal neighbour decides which, so that the pivoted domino stays
// in order with its new neighbours.
Domino pivot(const DominoTableau& t, const Domino& d, Coloring coloring) {
  const Square f = fixedSquare(d, coloring);
  const Square v = d.first() == f ? d.second() : d.first();
  const int k = d.label();
  const bool leftOrDown = v.col < f.col || v.row > f.row;
  Square next;
  if (leftOrDown) {
    const bool goRight = labelOrSentinel(t, Square{f.row - 1, f.col + 1}) < k;
    next = goRight ? Square{f.row, f.col + 1} : Square{f.row - 1, f.col};
  } else {
    const bool goDown = labelOrSentinel(t, Square{f.row + 1, f.col - 1}) < k;
    next = goDown ? Square{f.row + 1, f.col} : Square{f.row, f.col - 1};
  }
  if (next.row < 1 || next.col < 1) return d;  // cannot leave the quadrant
  return Domino(k, f, next);
}

// Blocks of the 2x2 tiling start on even rows; columns start on odd columns
// for the X-coloring and even columns for the D-coloring, so that every block
// corner is a fixed square.
std::pair<int, int> blockOf(Square s, Coloring coloring) {
  const int colOffset = coloring == Coloring::X ? 1 : 0;
  return {s.row / 2, (s.col - colOffset + 2) / 2};
}

bool pivotStaysInBlock(const Domino& from, const Domino& to, Coloring coloring) {
  const auto b = blockOf(from.first(), coloring);
  return blockOf(from.second(), coloring) == b && blockOf(to.first(), coloring) == b &&
         blockOf(to.second(), coloring) == b;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

void classify(const DominoTableau& tableau, Cycle& cycle) {
  const auto moved = tableau.withDominoes(cycle.targets);
  if (!validate(moved)) {
    cycle.anchored = true;
    return;
  }
  cycle.boxed = true;
  for (std::size_t i = 0; i < cycle.labels.size(); ++i) {
    if (!pivotStaysInBlock(tableau.at(cycle.labels[i]), cycle.targets[i], cycle.coloring)) cycle.boxed = false;
  }
  std::set<Square> before;
  std::set<Square> after;
  for (std::size_t i = 0; i < cycle.labels.size(); ++i) {
    for (Square s : tableau.at(cycle.labels[i]).squares()) before.insert(s);
    for (Square s : cycle.targets[i].squares()) after.insert(s);
  }
  std::vector<Square> removed;
  std::vector<Square> added;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(removed));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(added));
  if (removed.empty() && added.empty()) return;
  if (removed.size() != 1 || added.size() != 1) {
    throw std::logic_error("open cycle changed more than one hole and one corner");
  }
  cycle.open = true;
  cycle.hole = removed.front();
  cycle.corner = added.front();
  cycle.down = dominates(shape(tableau), shape(moved));
}

}  // namespace

std::vector<Cycle> cyclesOf(const DominoTableau& tableau, Coloring coloring) {
  if (auto check = validate(tableau); !check) throw DomainError("cycles need a standard tableau: " + check.diagnostic);
  const auto dominoes = tableau.dominoes();
  const int m = static_cast<int>(dominoes.size());
  std::vector<Domino> targets;
  targets.reserve(m);
  for (const auto& d : dominoes) targets.push_back(pivot(tableau, d, coloring));

  // Labels are linked when the pivot of one lands on the other.
  UnionFind uf(m + 1);
  for (int i = 0; i < m; ++i) {
    for (Square s : targets[i].squares()) {
      auto other = tableau.labelAt(s);
      if (other && *other > 0) uf.unite(i + 1, *other);
    }
  }
  std::vector<Cycle> cycles;
  std::vector<int> slot(m + 1, -1);
  for (int k = 1; k <= m; ++k) {
    const int root = uf.find(k);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(cycles.size());
      Cycle fresh;
      fresh.coloring = coloring;
      cycles.push_back(std::move(fresh));
    }
    cycles[slot[root]].labels.push_back(k);
    cycles[slot[root]].targets.push_back(targets[k - 1]);
  }
  for (auto& c : cycles) classify(tableau, c);
  return cycles;
}

Cycle cycleOf(const DominoTableau& tableau, int label, Coloring coloring) {
  if (!tableau.hasLabel(label)) throw std::out_of_range("no domino labeled " + std::to_string(label));
  for (auto& c : cyclesOf(tableau, coloring)) {
    if (c.contains(label)) return c;
  }
  throw std::logic_error("cycles do not cover every label");
}

DominoTableau moveThrough(const DominoTableau& tableau, const Cycle& cycle) {
  if (cycle.anchored) return tableau;
  return tableau.withDominoes(cycle.targets);
}

DominoTableau moveThroughSet(const DominoTableau& tableau, std::span<const Cycle> cycles) {
  std::set<int> seen;
  std::vector<Domino> targets;
  for (const auto& c : cycles) {
    for (int l : c.labels) {
      if (!seen.insert(l).second) throw std::invalid_argument("cycles overlap at label " + std::to_string(l));
    }
    if (c.anchored) continue;
    targets.insert(targets.end(), c.targets.begin(), c.targets.end());
  }
  auto moved = tableau.withDominoes(targets);
  if (auto check = validate(moved); !check) {
    throw std::logic_error("moving through a set of cycles broke standardness: " + check.diagnostic);
  }
  return moved;
}

ExtendedCycle extendedCycle(const TableauPair& pair, int label, Coloring coloring) {
  const auto rightCycles = cyclesOf(pair.right, coloring);
  const auto leftCycles = cyclesOf(pair.left, coloring);
  std::size_t start = 0;
  while (!rightCycles[start].contains(label)) ++start;

  ExtendedCycle ext;
  ext.right.push_back(rightCycles[start]);
  if (!rightCycles[start].open) return ext;

  std::vector<bool> inRight(rightCycles.size(), false);
  std::vector<bool> inLeft(leftCycles.size(), false);
  inRight[start] = true;
  auto endpoints = [](const std::vector<Cycle>& all, const std::vector<bool>& chosen) {
    std::set<Square> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (chosen[i]) {
        out.insert(*all[i].hole);
        out.insert(*all[i].corner);
      }
    }
    return out;
  };
  // Alternate sides: every hole or corner on one side must be matched by an
  // open cycle of the other side with the same square.
  auto absorb = [](const std::vector<Cycle>& all, std::vector<bool>& chosen, const std::set<Square>& missing) {
    bool grew = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (chosen[i] || !all[i].open) continue;
      if (missing.count(*all[i].hole) || missing.count(*all[i].corner)) {
        chosen[i] = true;
        grew = true;
      }
    }
    return grew;
  };
  while (true) {
    const auto r = endpoints(rightCycles, inRight);
    const auto l = endpoints(leftCycles, inLeft);
    if (r == l) break;
    std::set<Square> needLeft;
    std::set<Square> needRight;
    std::set_difference(r.begin(), r.end(), l.begin(), l.end(), std::inserter(needLeft, needLeft.end()));
    std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::inserter(needRight, needRight.end()));
    const bool grewLeft = absorb(leftCycles, inLeft, needLeft);
    const bool grewRight = absorb(rightCycles, inRight, needRight);
    if (!grewLeft && !grewRight) {
      const Square s = needLeft.empty() ? *needRight.begin() : *needLeft.begin();
      throw DomainError("extended cycle of label " + std::to_string(label) + " is blocked at (" +
                        std::to_string(s.row) + "," + std::to_string(s.col) + ")");
    }
  }
  ext.right.clear();
  for (std::size_t i = 0; i < rightCycles.size(); ++i) {
    if (inRight[i]) ext.right.push_back(rightCycles[i]);
  }
  for (std::size_t i = 0; i < leftCycles.size(); ++i) {
    if (inLeft[i]) ext.left.push_back(leftCycles[i]);
  }
  return ext;
}

TableauPair moveThroughExtended(const TableauPair& pair, int label, Coloring coloring) {
  const auto ext = extendedCycle(pair, label, coloring);
  return TableauPair(moveThroughSet(pair.left, ext.left), moveThroughSet(pair.right, ext.right));
}

}  // namespace orbvar
