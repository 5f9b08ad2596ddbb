#include <doctest.h>

#include "oracles.hpp"
#include "orbvar/domino_tableau.hpp"
#include "orbvar/enumeration.hpp"

using namespace orbvar;

namespace {
Domino H(int label, int r, int c) { return Domino(label, {r, c}, {r, c + 1}); }
Domino V(int label, int r, int c) { return Domino(label, {r, c}, {r + 1, c}); }
Partition L(const char* text) { return Partition::parse(text); }
}  // namespace

TEST_CASE("domino construction") {
  const Domino d(3, {1, 2}, {1, 1});
  CHECK(d.first() == Square{1, 1});
  CHECK(d.isHorizontal());
  CHECK(d.contains({1, 2}));
  CHECK_THROWS_AS(Domino(1, {1, 1}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Domino(0, {1, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Domino(1, {0, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("validation") {
  CHECK(validate(DominoTableau(LieType::C, {H(1, 1, 1)})));
  CHECK_FALSE(validate(DominoTableau(LieType::C, {H(1, 1, 1), V(2, 1, 1)})));
  CHECK_FALSE(validate(DominoTableau(LieType::C, {H(2, 1, 1)})));
  CHECK(validate(DominoTableau(LieType::C, {H(2, 1, 1)}), false));
  // Label 2 sits in row 2 before row 1 is long enough: prefix {2} alone is not a diagram.
  CHECK_FALSE(validate(DominoTableau(LieType::C, {H(2, 1, 1), H(1, 2, 1)})));
  // Type B: the core occupies (1,1).
  CHECK_FALSE(validate(DominoTableau(LieType::B, {H(1, 1, 1)})));
  CHECK(validate(DominoTableau(LieType::B, {H(1, 1, 2)})));
  CHECK(validate(DominoTableau(LieType::B, {V(1, 2, 1)})));
  CHECK(validate(DominoTableau(LieType::C)));
}

TEST_CASE("validate agrees with the independent standardness check, n = 2") {
  // Every labelled arrangement of two dominoes inside a 5x5 box.
  std::vector<std::pair<Square, Square>> placements;
  for (int r = 1; r <= 5; ++r) {
    for (int c = 1; c <= 5; ++c) {
      if (c < 5) placements.push_back({{r, c}, {r, c + 1}});
      if (r < 5) placements.push_back({{r, c}, {r + 1, c}});
    }
  }
  int standard = 0;
  for (LieType type : {LieType::B, LieType::C}) {
    for (std::size_t a = 0; a < placements.size(); ++a) {
      for (std::size_t b = 0; b < placements.size(); ++b) {
        oracle::Tiling t{{1, placements[a]}, {2, placements[b]}};
        const bool expected = oracle::isStandard(t, hasCore(type));
        CHECK(static_cast<bool>(validate(oracle::tableauOf(type, t))) == expected);
        standard += expected;
      }
    }
  }
  // Two-domino tableaux: 6 in type C and 6 in type B.
  CHECK(standard == 12);
}

TEST_CASE("shape and subshape") {
  const DominoTableau t(LieType::C, {H(1, 1, 1), H(2, 2, 1)});
  CHECK(shape(t) == L("[2,2]"));
  CHECK(subShape(t, 1) == L("[2]"));
  CHECK(subShape(t, 0) == L("[]"));
  CHECK(subShape(t, 2) == shape(t));
  CHECK(subShape(DominoTableau(LieType::B, {H(1, 1, 2)}), 0) == L("[1]"));
  CHECK(firstDominoesSubtableauShape(DominoTableau(LieType::C, {V(1, 1, 1), H(2, 1, 2)}), 2) == L("[3,1]"));
  CHECK(firstDominoesSubtableauShape(DominoTableau(LieType::B, {H(1, 1, 2), H(2, 2, 1)}), 2) == L("[3,2]"));
  CHECK_THROWS_AS(subShape(t, 3), std::out_of_range);
}

TEST_CASE("accessors") {
  const DominoTableau t(LieType::B, {V(2, 2, 1), H(1, 1, 2)});
  CHECK(t.labels() == std::vector<int>{1, 2});
  CHECK(t.labelAt({1, 1}) == 0);
  CHECK(t.labelAt({3, 1}) == 2);
  CHECK_FALSE(t.labelAt({1, 4}).has_value());
  CHECK(t.at(1).isHorizontal());
  CHECK_THROWS_AS(t.at(3), std::out_of_range);
  CHECK(t.without(2).labels() == std::vector<int>{1});
  const std::vector<Domino> moved{V(1, 1, 2)};
  CHECK(t.withDominoes(moved).at(1).isVertical());
}

TEST_CASE("ascii rendering") {
  const DominoTableau t(LieType::B, {H(1, 1, 2), V(2, 2, 1)});
  CHECK(renderAscii(t) == "0 1 1\n2\n2\n");
  CHECK(renderAscii(DominoTableau(LieType::C, {H(1, 1, 1), H(2, 2, 1)})) == "1 1\n2 2\n");
}

TEST_CASE("diagramShape") {
  const std::vector<Square> good{{1, 1}, {1, 2}, {2, 1}};
  const std::vector<Square> bad{{1, 1}, {2, 2}};
  CHECK(diagramShape(good) == L("[2,1]"));
  CHECK_FALSE(diagramShape(bad).has_value());
}

TEST_CASE("tableau counts agree with removal recursion") {
  for (LieType type : {LieType::B, LieType::C}) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& p : partitionsOf(2 * n + (hasCore(type) ? 1 : 0))) {
        INFO(p.toString(), " ", toChar(type));
        CHECK(countSDT(p, type) == oracle::countByRemoval(p, type));
      }
    }
  }
}
