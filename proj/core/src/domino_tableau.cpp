#include "orbvar/domino_tableau.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace orbvar {

Domino::Domino(int label, Square a, Square b) : label_(label), squares_{std::min(a, b), std::max(a, b)} {
  if (label < 1) throw std::invalid_argument("domino labels must be positive");
  const int dr = squares_[1].row - squares_[0].row;
  const int dc = squares_[1].col - squares_[0].col;
  if (dr + dc != 1 || dr < 0 || dc < 0) {
    throw std::invalid_argument("domino " + std::to_string(label) + " squares are not adjacent");
  }
  if (squares_[0].row < 1 || squares_[0].col < 1) {
    throw std::invalid_argument("domino " + std::to_string(label) + " leaves the first quadrant");
  }
}

DominoTableau::DominoTableau(LieType type, std::vector<Domino> dominoes) : type_(type) {
  for (const auto& d : dominoes) {
    if (d.label() >= static_cast<int>(byLabel_.size())) byLabel_.resize(d.label() + 1);
    if (byLabel_[d.label()]) throw std::invalid_argument("duplicate domino label " + std::to_string(d.label()));
    byLabel_[d.label()] = d;
  }
  index();
}

void DominoTableau::index() {
  occupancy_.clear();
  indexProblem_.reset();
  count_ = 0;
  if (hasCore()) occupancy_[Square{1, 1}] = 0;
  for (const auto& d : byLabel_) {
    if (!d) continue;
    ++count_;
    for (Square s : d->squares()) {
      auto [it, inserted] = occupancy_.emplace(s, d->label());
      if (!inserted && !indexProblem_) {
        const std::string other = it->second == 0 ? "the core" : "domino " + std::to_string(it->second);
        indexProblem_ = "domino " + std::to_string(d->label()) + " overlaps " + other + " at (" +
                        std::to_string(s.row) + "," + std::to_string(s.col) + ")";
      }
    }
  }
}

std::vector<int> DominoTableau::labels() const {
  std::vector<int> out;
  for (const auto& d : byLabel_) {
    if (d) out.push_back(d->label());
  }
  return out;
}

std::vector<Domino> DominoTableau::dominoes() const {
  std::vector<Domino> out;
  for (const auto& d : byLabel_) {
    if (d) out.push_back(*d);
  }
  return out;
}

bool DominoTableau::hasLabel(int label) const {
  return label >= 1 && label < static_cast<int>(byLabel_.size()) && byLabel_[label].has_value();
}

const Domino& DominoTableau::at(int label) const {
  if (!hasLabel(label)) throw std::out_of_range("no domino labeled " + std::to_string(label));
  return *byLabel_[label];
}

std::optional<int> DominoTableau::labelAt(Square s) const {
  auto it = occupancy_.find(s);
  if (it == occupancy_.end()) return std::nullopt;
  return it->second;
}

DominoTableau DominoTableau::withDominoes(std::span<const Domino> replacements) const {
  DominoTableau out = *this;
  for (const auto& d : replacements) {
    if (d.label() >= static_cast<int>(out.byLabel_.size())) out.byLabel_.resize(d.label() + 1);
    out.byLabel_[d.label()] = d;
  }
  out.index();
  return out;
}

DominoTableau DominoTableau::without(int label) const {
  DominoTableau out = *this;
  if (hasLabel(label)) {
    out.byLabel_[label].reset();
    while (out.byLabel_.size() > 1 && !out.byLabel_.back()) out.byLabel_.pop_back();
    out.index();
  }
  return out;
}

std::optional<Partition> diagramShape(std::span<const Square> squares) {
  std::vector<int> rows;
  for (Square s : squares) {
    if (s.row < 1 || s.col < 1) return std::nullopt;
    if (static_cast<int>(rows.size()) < s.row) rows.resize(s.row, 0);
    ++rows[s.row - 1];
  }
  // A set of cells is a diagram iff each row i is exactly columns 1..rows[i]
  // and rows weakly decrease.
  std::vector<std::vector<bool>> present(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) present[i].assign(rows[i] + 1, false);
  for (Square s : squares) {
    if (s.col > rows[s.row - 1] || present[s.row - 1][s.col]) return std::nullopt;
    present[s.row - 1][s.col] = true;
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i] > rows[i - 1]) return std::nullopt;
  }
  if (!rows.empty() && rows.back() == 0) return std::nullopt;
  return Partition(rows);
}

ValidationResult validate(const DominoTableau& tableau, bool requireContiguousLabels) {
  if (tableau.overlapProblem()) return {false, *tableau.overlapProblem()};
  const auto labels = tableau.labels();
  if (requireContiguousLabels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] != static_cast<int>(i) + 1) {
        return {false, "labels must be exactly 1.." + std::to_string(labels.size()) + "; label " +
                           std::to_string(i + 1) + " is missing"};
      }
    }
  }
  std::vector<Square> cells;
  if (tableau.hasCore()) cells.push_back(Square{1, 1});
  if (!diagramShape(cells)) return {false, "core is not a diagram"};
  for (int k : labels) {
    const auto& d = tableau.at(k);
    cells.push_back(d.first());
    cells.push_back(d.second());
    if (!diagramShape(cells)) {
      return {false, "dominoes with labels <= " + std::to_string(k) + " do not form a Young diagram"};
    }
  }
  return {};
}

namespace {

Partition shapeUpTo(const DominoTableau& tableau, int k) {
  std::vector<Square> cells;
  if (tableau.hasCore()) cells.push_back(Square{1, 1});
  for (const auto& d : tableau.dominoes()) {
    if (d.label() > k) break;
    cells.push_back(d.first());
    cells.push_back(d.second());
  }
  auto shape = diagramShape(cells);
  if (!shape) throw DomainError("dominoes with labels <= " + std::to_string(k) + " do not form a Young diagram");
  return *shape;
}

}  // namespace

Partition shape(const DominoTableau& tableau) { return shapeUpTo(tableau, tableau.maxLabel()); }

Partition subShape(const DominoTableau& tableau, int k) {
  if (k < 0 || k > tableau.maxLabel()) throw std::out_of_range("subShape: label bound out of range");
  return shapeUpTo(tableau, k);
}

std::string renderAscii(const DominoTableau& tableau) {
  int rows = tableau.hasCore() ? 1 : 0;
  int cols = rows;
  for (const auto& d : tableau.dominoes()) {
    rows = std::max(rows, d.second().row);
    cols = std::max(cols, d.second().col);
  }
  const int width = static_cast<int>(std::to_string(std::max(tableau.maxLabel(), 0)).size());
  std::ostringstream out;
  for (int r = 1; r <= rows; ++r) {
    std::string line;
    for (int c = 1; c <= cols; ++c) {
      auto label = tableau.labelAt(Square{r, c});
      std::string cell = label ? std::to_string(*label) : ".";
      if (c > 1) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && (line.back() == '.' || line.back() == ' ')) line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace orbvar
