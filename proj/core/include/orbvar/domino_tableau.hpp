#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbvar/lie_type.hpp"
#include "orbvar/partition.hpp"

namespace orbvar {

/// A cell of the first quadrant; row 1 is the top row.
struct Square {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Square&, const Square&) = default;
};

/// Two edge-adjacent squares carrying a positive label. The squares are kept
/// in reading order (top/left first).
class Domino {
 public:
  Domino(int label, Square a, Square b);

  int label() const { return label_; }
  Square first() const { return squares_[0]; }
  Square second() const { return squares_[1]; }
  const std::array<Square, 2>& squares() const { return squares_; }
  bool isHorizontal() const { return squares_[0].row == squares_[1].row; }
  bool isVertical() const { return !isHorizontal(); }
  bool contains(Square s) const { return squares_[0] == s || squares_[1] == s; }
  Domino relabeled(int label) const { return Domino(label, squares_[0], squares_[1]); }

  friend auto operator<=>(const Domino&, const Domino&) = default;

 private:
  int label_;
  std::array<Square, 2> squares_;
};

/// A domino tableau of type B (with the 0-square core at (1,1)) or type C.
///
/// Construction does not check standardness; use validate(). Dominoes are
/// indexed both by label and by the squares they cover.
class DominoTableau {
 public:
  explicit DominoTableau(LieType type = LieType::C) : type_(type) {}
  DominoTableau(LieType type, std::vector<Domino> dominoes);

  LieType type() const { return type_; }
  bool hasCore() const { return orbvar::hasCore(type_); }
  int dominoCount() const { return count_; }
  int maxLabel() const { return static_cast<int>(byLabel_.size()) - 1; }
  std::vector<int> labels() const;
  std::vector<Domino> dominoes() const;

  bool hasLabel(int label) const;
  /// Throws std::out_of_range when the label is absent.
  const Domino& at(int label) const;
  /// Label covering s, 0 for the core; nullopt for an empty square.
  std::optional<int> labelAt(Square s) const;

  /// Copy with the given dominoes replacing (or adding) those of equal label.
  DominoTableau withDominoes(std::span<const Domino> replacements) const;
  DominoTableau without(int label) const;

  /// First overlap found while indexing squares, if any.
  const std::optional<std::string>& overlapProblem() const { return indexProblem_; }

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
    return a.type_ == b.type_ && a.byLabel_ == b.byLabel_;
  }
  friend auto operator<=>(const DominoTableau& a, const DominoTableau& b) {
    if (auto c = a.type_ <=> b.type_; c != 0) return c;
    return a.byLabel_ <=> b.byLabel_;
  }

 private:
  void index();

  LieType type_;
  std::vector<std::optional<Domino>> byLabel_{std::nullopt};
  std::map<Square, int> occupancy_;
  int count_ = 0;
  std::optional<std::string> indexProblem_;
};

struct ValidationResult {
  bool valid = true;
  std::string diagnostic;
  explicit operator bool() const { return valid; }
};

/// Checks disjointness and that every label prefix (with the core) is a Young
/// diagram. With requireContiguousLabels the labels must be exactly 1..m; the
/// intermediate tableaux of insertion use arbitrary label sets.
ValidationResult validate(const DominoTableau& tableau, bool requireContiguousLabels = true);

/// Row lengths of the core plus all dominoes. Throws DomainError if the cells
/// do not form a Young diagram.
Partition shape(const DominoTableau& tableau);
/// Row lengths of the core plus the dominoes with label <= k.
Partition subShape(const DominoTableau& tableau, int k);
/// Shape of the subtableau formed by the first k dominoes (and the core).
inline Partition firstDominoesSubtableauShape(const DominoTableau& tableau, int k) { return subShape(tableau, k); }

/// Grid of labels; the core prints as 0 and empty cells inside the bounding
/// box as '.'.
std::string renderAscii(const DominoTableau& tableau);

/// Row lengths of a set of squares, or nullopt if they do not form a diagram.
std::optional<Partition> diagramShape(std::span<const Square> squares);

}  // namespace orbvar
