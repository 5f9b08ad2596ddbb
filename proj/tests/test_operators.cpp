#include <doctest.h>

#include "oracles.hpp"
#include "orbvar/enumeration.hpp"
#include "orbvar/insertion.hpp"
#include "orbvar/operators.hpp"

using namespace orbvar;

namespace {
SignedPermutation P(const char* text) { return SignedPermutation::parse(text); }
Domino H(int label, int r, int c) { return Domino(label, {r, c}, {r, c + 1}); }
Domino V(int label, int r, int c) { return Domino(label, {r, c}, {r + 1, c}); }
DominoTableau C(std::vector<Domino> ds) { return DominoTableau(LieType::C, std::move(ds)); }
Partition L(const char* text) { return Partition::parse(text); }

std::vector<std::pair<int, int>> adjacentPairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 2; i < n; ++i) {
    out.emplace_back(i, i + 1);
    out.emplace_back(i + 1, i);
  }
  return out;
}
}  // namespace

TEST_CASE("tau") {
  CHECK(tau(P("1 2 3"), Side::Left).empty());
  CHECK(tau(P("1 2 3"), Side::Right).empty());
  // T_L of shape (2,1,1) in C_2: beta = e2 - e1 (index 2) is in tau, alpha = 2e1 (index 1) is not.
  const auto w = P("1 -2");
  REQUIRE(subShape(rs(w, LieType::C).left, 2) == L("[2,1,1]"));
  CHECK(toString(tau(w, Side::Left)) == "{2}");
  for (int n = 1; n <= 3; ++n) {
    for (const auto& x : enumerateGroup(n)) {
      CHECK(toString(tau(x, Side::Left)) == toString(tau(inverse(x), Side::Right)));
    }
  }
}

TEST_CASE("equal-length wall crossing") {
  CHECK(tSameLength(P("1 3 2"), RootIndex{2}, RootIndex{3}) == P("3 1 2"));
  CHECK_FALSE(tryTSameLength(P("1 2 3"), RootIndex{2}, RootIndex{3}).has_value());
  CHECK_FALSE(tryTSameLength(P("2 1 3"), RootIndex{1}, RootIndex{2}).has_value());
  CHECK_THROWS_AS(tSameLength(P("1 2 3"), RootIndex{2}, RootIndex{3}), DomainError);
}

TEST_CASE("wall crossing agrees with the length oracle, n <= 4") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& w : enumerateGroup(n)) {
      for (auto [i, j] : adjacentPairs(n)) {
        INFO(w.toString(), " ", i, ",", j);
        REQUIRE(tryTSameLength(w, RootIndex{i}, RootIndex{j}) == oracle::bruteTSame(w, i, j));
      }
    }
  }
}

TEST_CASE("wall crossing is an involution and keeps the left shape, n <= 3") {
  for (LieType type : {LieType::B, LieType::C}) {
    for (const auto& w : enumerateGroup(3)) {
      for (auto [i, j] : adjacentPairs(3)) {
        const auto x = tryTSameLength(w, RootIndex{i}, RootIndex{j});
        if (!x) continue;
        CHECK(tSameLength(*x, RootIndex{j}, RootIndex{i}) == w);
        CHECK(shape(rs(*x, type).left) == shape(rs(w, type).left));
      }
    }
  }
}

TEST_CASE("V_ab on the (2,2) case transposes the box") {
  const auto box = C({H(1, 1, 1), H(2, 2, 1)});
  const TableauPair pair(box, box);
  const auto report = vTruncatedDomain(pair);
  CHECK(report.defined);
  CHECK(report.caseName == "[2,2]");
  const auto out = vTruncated(pair);
  CHECK(out.left == box);
  CHECK(out.right == C({V(1, 1, 1), V(2, 1, 2)}));
}

TEST_CASE("V_ab domain") {
  const auto row = C({H(1, 1, 1), H(2, 1, 3)});
  const auto report = vTruncatedDomain(TableauPair(row, row));
  CHECK_FALSE(report.defined);
  CHECK_FALSE(report.caseName.has_value());
  CHECK_THROWS_AS(vTruncated(TableauPair(row, row)), DomainError);
  const auto b = DominoTableau(LieType::B, {H(1, 1, 2), H(2, 2, 1)});
  CHECK(vTruncatedDomain(TableauPair(b, b)).caseName == "[3,2]");
}

TEST_CASE("V_D domain") {
  std::optional<DominoTableau> vertical, horizontal;
  for (const auto& t : allSDT(L("[4,3,1]"), LieType::C)) {
    (t.at(2).isVertical() ? vertical : horizontal) = t;
  }
  REQUIRE(vertical);
  REQUIRE(horizontal);
  CHECK(vDDomain(TableauPair(*vertical, *vertical)).defined);
  const auto h = vDDomain(TableauPair(*horizontal, *horizontal));
  CHECK_FALSE(h.defined);
  CHECK(h.reason == "the 2-domino is horizontal");
  for (const auto& t : allSDT(L("[4,2,1]"), LieType::B)) {
    CHECK(vDDomain(TableauPair(t, t)).defined);
  }
}

TEST_CASE("operators produce valid pairs on their domains") {
  int truncated = 0, typeD = 0;
  for (LieType type : {LieType::B, LieType::C}) {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& w : enumerateGroup(n)) {
        const auto pair = rs(w, type);
        INFO(w.toString(), " ", std::string(1, toChar(type)));
        if (vTruncatedDomain(pair).defined) {
          const auto out = vTruncated(pair);
          CHECK(shape(out.left) == shape(out.right));
          CHECK(rs(rsInverse(out), type) == out);
          if (n <= 3) CHECK(out != pair);
          ++truncated;
        }
        if (vDDomain(pair).defined) {
          const auto out = vD(pair);
          CHECK(shape(out.left) == shape(out.right));
          ++typeD;
        }
      }
    }
  }
  CHECK(truncated > 0);
  CHECK(typeD > 0);
}

TEST_CASE("box transposition") {
  const auto box = C({H(1, 1, 1), H(2, 2, 1)});
  CHECK(transposeInBox(box, 1, 2) == C({V(1, 1, 1), V(2, 1, 2)}));
  CHECK(transposeInBox(transposeInBox(box, 1, 2), 1, 2) == box);
  CHECK_THROWS_AS(transposeInBox(C({H(1, 1, 1), H(2, 1, 3)}), 1, 2), std::logic_error);
  // Type B dominoes that do not share a box swap labels.
  const auto b = DominoTableau(LieType::B, {H(1, 1, 2), V(2, 2, 1)});
  CHECK(transposeInBox(b, 1, 2) == DominoTableau(LieType::B, {V(1, 2, 1), H(2, 1, 2)}));
}
