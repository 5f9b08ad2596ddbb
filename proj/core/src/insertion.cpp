#include "orbvar/insertion.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace orbvar {

TableauPair::TableauPair(DominoTableau l, DominoTableau r) : left(std::move(l)), right(std::move(r)) {
  if (left.type() != right.type()) throw DomainError("pair mixes tableau types");
  if (auto check = validate(left); !check) throw DomainError("left tableau: " + check.diagnostic);
  if (auto check = validate(right); !check) throw DomainError("right tableau: " + check.diagnostic);
  if (shape(left) != shape(right)) throw DomainError("left and right tableaux have different shapes");
}

namespace {

// Growing Young diagram with O(1) membership and row/column lengths.
class Diagram {
 public:
  bool contains(Square s) const {
    return s.row >= 1 && s.col >= 1 && s.row <= static_cast<int>(rows_.size()) && rows_[s.row - 1] >= s.col;
  }
  int rowLength(int r) const { return r <= static_cast<int>(rows_.size()) ? rows_[r - 1] : 0; }
  int colLength(int c) const {
    int n = 0;
    while (n < static_cast<int>(rows_.size()) && rows_[n] >= c) ++n;
    return n;
  }
  void add(Square s) {
    if (static_cast<int>(rows_.size()) < s.row) rows_.resize(s.row, 0);
    rows_[s.row - 1] = std::max(rows_[s.row - 1], s.col);
  }
  void add(const Domino& d) {
    add(d.first());
    add(d.second());
  }

 private:
  std::vector<int> rows_;
};

Diagram diagramBelow(const DominoTableau& tableau, int bound) {
  Diagram g;
  if (tableau.hasCore()) g.add(Square{1, 1});
  for (const auto& d : tableau.dominoes()) {
    if (d.label() < bound) g.add(d);
  }
  return g;
}

}  // namespace

DominoTableau insertLetter(const DominoTableau& tableau, int value) {
  const int a = std::abs(value);
  if (a == 0) throw std::invalid_argument("cannot insert 0");
  if (tableau.hasLabel(a)) throw std::invalid_argument("label " + std::to_string(a) + " already present");
  if (auto check = validate(tableau, false); !check) throw DomainError("malformed tableau: " + check.diagnostic);

  Diagram placed = diagramBelow(tableau, a);
  std::vector<Domino> out;
  for (const auto& d : tableau.dominoes()) {
    if (d.label() < a) out.push_back(d);
  }
  if (value > 0) {
    const int len = placed.rowLength(1);
    out.emplace_back(a, Square{1, len + 1}, Square{1, len + 2});
  } else {
    const int len = placed.colLength(1);
    out.emplace_back(a, Square{len + 1, 1}, Square{len + 2, 1});
  }
  placed.add(out.back());

  for (const auto& d : tableau.dominoes()) {
    if (d.label() < a) continue;
    const bool firstCovered = placed.contains(d.first());
    const bool secondCovered = placed.contains(d.second());
    const Square s = d.first();
    std::optional<Domino> moved;
    if (!firstCovered && !secondCovered) {
      moved = d;
    } else if (d.isHorizontal()) {
      if (secondCovered) {
        const int len = placed.rowLength(s.row + 1);
        moved = Domino(d.label(), Square{s.row + 1, len + 1}, Square{s.row + 1, len + 2});
      } else {
        moved = Domino(d.label(), Square{s.row, s.col + 1}, Square{s.row + 1, s.col + 1});
      }
    } else {
      if (secondCovered) {
        const int len = placed.colLength(s.col + 1);
        moved = Domino(d.label(), Square{len + 1, s.col + 1}, Square{len + 2, s.col + 1});
      } else {
        moved = Domino(d.label(), Square{s.row + 1, s.col}, Square{s.row + 1, s.col + 1});
      }
    }
    out.push_back(*moved);
    placed.add(*moved);
  }
  return DominoTableau(tableau.type(), std::move(out));
}

TableauPair rs(const SignedPermutation& w, LieType type) {
  DominoTableau insertion(type);
  std::vector<Domino> recording;
  Diagram before;
  if (hasCore(type)) before.add(Square{1, 1});
  for (int i = 1; i <= w.size(); ++i) {
    insertion = insertLetter(insertion, w(i));
    // The shape grows by exactly one domino: find the two new cells.
    Diagram after;
    if (hasCore(type)) after.add(Square{1, 1});
    for (const auto& d : insertion.dominoes()) after.add(d);
    std::vector<Square> grown;
    for (int r = 1; r <= static_cast<int>(2 * w.size() + 1) && grown.size() < 2; ++r) {
      for (int c = before.rowLength(r) + 1; c <= after.rowLength(r); ++c) grown.push_back(Square{r, c});
    }
    if (grown.size() != 2) throw std::logic_error("insertion did not grow the shape by one domino");
    recording.emplace_back(i, grown[0], grown[1]);
    before = after;
  }
  return TableauPair(std::move(insertion), DominoTableau(type, std::move(recording)));
}

namespace {

struct ReverseStep {
  DominoTableau tableau;
  int value;
};

// Undo one insertion: `extra` is the domino of cells the insertion added.
ReverseStep reverseInsert(const DominoTableau& tableau, Domino extra) {
  auto labels = tableau.labels();
  std::vector<Domino> restored;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    const int k = *it;
    const Domino& now = tableau.at(k);
    const int overlap = static_cast<int>(extra.contains(now.first())) + static_cast<int>(extra.contains(now.second()));
    if (overlap == 0) continue;
    const Square s = now.first();
    if (overlap == 2) {
      if (now.isHorizontal() && s.row == 1) {
        return {tableau.without(k).withDominoes(restored), k};
      }
      if (now.isVertical() && s.col == 1) {
        return {tableau.without(k).withDominoes(restored), -k};
      }
      const Diagram below = diagramBelow(tableau, k);
      if (now.isHorizontal()) {
        const int len = below.rowLength(s.row - 1);
        extra = Domino(k, Square{s.row - 1, len - 1}, Square{s.row - 1, len});
      } else {
        const int len = below.colLength(s.col - 1);
        extra = Domino(k, Square{len - 1, s.col - 1}, Square{len, s.col - 1});
      }
      restored.push_back(extra);
      continue;
    }
    if (now.isHorizontal() && extra.isVertical() && extra.second() == now.second()) {
      // Twisted from vertical (r-1,c),(r,c).
      restored.emplace_back(k, Square{s.row - 1, s.col}, Square{s.row, s.col});
      extra = Domino(k, Square{s.row - 1, s.col}, Square{s.row - 1, s.col + 1});
      continue;
    }
    if (now.isVertical() && extra.isHorizontal() && extra.second() == now.second()) {
      // Twisted from horizontal (r,c-1),(r,c).
      restored.emplace_back(k, Square{s.row, s.col - 1}, Square{s.row, s.col});
      extra = Domino(k, Square{s.row, s.col - 1}, Square{s.row + 1, s.col - 1});
      continue;
    }
    throw DomainError("reverse insertion met an impossible overlap at label " + std::to_string(k));
  }
  throw DomainError("reverse insertion did not reach an inserted domino");
}

}  // namespace

SignedPermutation rsInverse(const TableauPair& pair) {
  const int n = pair.right.dominoCount();
  std::vector<int> entries(n);
  DominoTableau current = pair.left;
  for (int i = n; i >= 1; --i) {
    auto step = reverseInsert(current, pair.right.at(i));
    entries[i - 1] = step.value;
    current = std::move(step.tableau);
  }
  return SignedPermutation(std::move(entries));
}

}  // namespace orbvar
