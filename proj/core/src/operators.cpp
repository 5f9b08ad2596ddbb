#include "orbvar/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbvar {

RootSet tau(const SignedPermutation& w, Side side, LieType type) {
  return side == Side::Left ? leftDescents(w, type) : rightDescents(w, type);
}

std::optional<SignedPermutation> tryTSameLength(const SignedPermutation& w, RootIndex i, RootIndex j) {
  const int n = w.size();
  if (i.value < 2 || j.value < 2 || i.value > n || j.value > n || std::abs(i.value - j.value) != 1) {
    return std::nullopt;
  }
  auto inPair = [&](const SignedPermutation& x) {
    const auto d = rightDescents(x);
    return std::make_pair(d.count(i) > 0, d.count(j) > 0);
  };
  const auto [hasI, hasJ] = inPair(w);
  if (hasI == hasJ) return std::nullopt;
  std::optional<SignedPermutation> result;
  for (RootIndex s : {i, j}) {
    auto candidate = compose(w, SignedPermutation::generator(n, s));
    const auto [ci, cj] = inPair(candidate);
    if (ci == hasJ && cj == hasI) {
      if (result) throw std::logic_error("equal-length wall crossing is not single-valued at " + w.toString());
      result = std::move(candidate);
    }
  }
  if (!result) throw std::logic_error("equal-length wall crossing has no image at " + w.toString());
  return result;
}

SignedPermutation tSameLength(const SignedPermutation& w, RootIndex i, RootIndex j) {
  auto r = tryTSameLength(w, i, j);
  if (!r) {
    throw DomainError("T_{" + std::to_string(i.value) + "," + std::to_string(j.value) + "} is not defined at " +
                      w.toString());
  }
  return *r;
}

DominoTableau transposeInBox(const DominoTableau& tableau, int a, int b) {
  const Domino& da = tableau.at(a);
  const Domino& db = tableau.at(b);
  std::vector<Square> cells{da.first(), da.second(), db.first(), db.second()};
  const auto [rmin, rmax] = std::minmax({cells[0].row, cells[1].row, cells[2].row, cells[3].row});
  const auto [cmin, cmax] = std::minmax({cells[0].col, cells[1].col, cells[2].col, cells[3].col});
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  std::vector<Domino> replaced;
  if (rmax - rmin == 1 && cmax - cmin == 1) {
    const Square tl{rmin, cmin};
    if (da.isHorizontal()) {
      replaced = {Domino(lo, tl, Square{rmin + 1, cmin}), Domino(hi, Square{rmin, cmin + 1}, Square{rmin + 1, cmin + 1})};
    } else {
      replaced = {Domino(lo, tl, Square{rmin, cmin + 1}), Domino(hi, Square{rmin + 1, cmin}, Square{rmin + 1, cmin + 1})};
    }
  } else if (tableau.type() == LieType::B) {
    replaced = {da.relabeled(b), db.relabeled(a)};
  } else {
    throw std::logic_error("dominoes " + std::to_string(a) + " and " + std::to_string(b) + " do not fill a 2x2 box");
  }
  auto out = tableau.withDominoes(replaced);
  if (auto check = validate(out); !check) {
    throw std::logic_error("transposition broke standardness: " + check.diagnostic);
  }
  return out;
}

namespace {

OperatorDomainReport undefined(std::string reason) { return {false, std::nullopt, std::move(reason)}; }

}  // namespace

OperatorDomainReport vTruncatedDomain(const TableauPair& pair) {
  const auto& right = pair.right;
  if (right.dominoCount() < 2) return undefined("fewer than two dominoes");
  const auto sub = subShape(right, 2);
  const bool typeC = right.type() == LieType::C;
  const Partition first = typeC ? Partition({3, 1}) : Partition({3, 2});
  const Partition second = typeC ? Partition({2, 2}) : Partition({3, 1, 1});
  if (sub == first || sub == second) return {true, sub.toString(), "first dominoes form " + sub.toString()};
  return undefined("first dominoes of the right tableau form " + sub.toString() + ", expected " + first.toString() +
                   " or " + second.toString());
}

TableauPair vTruncated(const TableauPair& pair) {
  const auto report = vTruncatedDomain(pair);
  if (!report.defined) throw DomainError("V_ab undefined: " + report.reason);
  const auto sub = subShape(pair.right, 2);
  // The larger of the two domain shapes moves through the extended cycle of
  // the 2-domino first; the smaller only transposes the right tableau.
  const bool moves = sub == Partition({3, 1}) || sub == Partition({3, 2});
  if (!moves) return TableauPair(pair.left, transposeInBox(pair.right, 1, 2));
  auto moved = moveThroughExtended(pair, 2, Coloring::X);
  return TableauPair(std::move(moved.left), transposeInBox(moved.right, 1, 2));
}

OperatorDomainReport vDDomain(const TableauPair& pair) {
  const auto& right = pair.right;
  if (right.type() == LieType::C) {
    if (right.dominoCount() < 4) return undefined("fewer than four dominoes");
    const auto sub = subShape(right, 4);
    if (sub != Partition({4, 3, 1})) return undefined("first four dominoes form " + sub.toString() + ", expected [4,3,1]");
    if (!right.at(2).isVertical()) return undefined("the 2-domino is horizontal");
    return {true, sub.toString(), "first four dominoes form [4,3,1] with a vertical 2-domino"};
  }
  if (right.dominoCount() < 3) return undefined("fewer than three dominoes");
  const auto sub = subShape(right, 3);
  if (sub != Partition({4, 2, 1})) {
    return undefined("core and first three dominoes form " + sub.toString() + ", expected [4,2,1]");
  }
  return {true, sub.toString(), "core and first three dominoes form [4,2,1]"};
}

TableauPair vD(const TableauPair& pair) {
  const auto report = vDDomain(pair);
  if (!report.defined) throw DomainError("V_D undefined: " + report.reason);
  const int pivotLabel = pair.right.type() == LieType::C ? 4 : 3;
  auto moved = moveThroughExtended(pair, pivotLabel, Coloring::D);
  return TableauPair(std::move(moved.left), transposeInBox(moved.right, 2, pivotLabel));
}

}  // namespace orbvar
