#include <doctest.h>

#include "oracles.hpp"
#include "orbvar/partition.hpp"

using namespace orbvar;

namespace {
Partition L(const char* text) { return Partition::parse(text); }
}

TEST_CASE("parse") {
  CHECK(L("[3,1]").parts() == std::vector<int>{3, 1});
  CHECK(L("[]").empty());
  CHECK(L("[ 2, 2 ]") == L("[2,2]"));
  CHECK(L("[3,1]").toString() == "[3,1]");
  CHECK(Partition({2, 1, 0, 0}) == L("[2,1]"));
  CHECK_THROWS_AS(L("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(L("3,1"), std::invalid_argument);
  CHECK_THROWS_AS(L("[3,]"), std::invalid_argument);
  CHECK_THROWS_AS(L("[x]"), std::invalid_argument);
}

TEST_CASE("dominance") {
  CHECK(dominates(L("[4]"), L("[3,1]")));
  CHECK(dominates(L("[3,1]"), L("[2,2]")));
  CHECK_FALSE(dominates(L("[2,2]"), L("[3,1]")));
  CHECK(dominates(L("[2,2]"), L("[2,2]")));
  CHECK_THROWS_AS(dominates(L("[2]"), L("[2,1]")), std::invalid_argument);
}

TEST_CASE("transpose") {
  CHECK(transpose(L("[2,2]")) == L("[2,2]"));
  CHECK(transpose(L("[3,1]")) == L("[2,1,1]"));
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : partitionsOf(n)) CHECK(transpose(transpose(p)) == p);
  }
}

TEST_CASE("X-partitions") {
  CHECK(isXPartition(L("[2,2]"), LieType::C));
  CHECK_FALSE(isXPartition(L("[3,1]"), LieType::C));
  CHECK_FALSE(isXPartition(L("[4,1]"), LieType::B));
  CHECK(isXPartition(L("[3,1,1]"), LieType::B));
  for (int n = 0; n <= 11; ++n) {
    for (const auto& p : partitionsOf(n)) {
      for (LieType t : {LieType::B, LieType::C}) CHECK(isXPartition(p, t) == oracle::bruteIsX(p, t));
    }
  }
}

TEST_CASE("collapse") {
  CHECK(xCollapse(L("[3,1]"), LieType::C) == L("[2,2]"));
  CHECK(xCollapse(L("[2,2]"), LieType::C) == L("[2,2]"));
  CHECK(xCollapse(L("[4,1]"), LieType::B) == L("[3,1,1]"));
  CHECK_THROWS_AS(xCollapse(L("[3]"), LieType::C), DomainError);
}

TEST_CASE("collapse is the largest dominated X-partition, size <= 11") {
  for (int n = 1; n <= 11; ++n) {
    for (const auto& p : partitionsOf(n)) {
      for (LieType t : {LieType::B, LieType::C}) {
        if (t == LieType::C && n % 2 == 1) continue;
        INFO(p.toString(), " ", toChar(t));
        REQUIRE(xCollapse(p, t) == oracle::bruteCollapse(p, t));
      }
    }
  }
}

TEST_CASE("special partitions") {
  CHECK(isSpecial(L("[2,2]"), LieType::C));
  CHECK_FALSE(isSpecial(L("[2,1,1]"), LieType::C));
  CHECK(isSpecial(L("[1,1,1,1]"), LieType::C));
  CHECK(dualLS(L("[2,1,1]"), LieType::C) == L("[2,2]"));
  CHECK(dualLS(L("[1,1,1,1]"), LieType::C) == L("[4]"));
  CHECK_THROWS_AS(dualLS(L("[3,1]"), LieType::C), DomainError);
}

TEST_CASE("special agrees with d o d = id, size <= 11") {
  for (int n = 1; n <= 11; ++n) {
    for (const auto& p : partitionsOf(n)) {
      for (LieType t : {LieType::B, LieType::C}) {
        if ((t == LieType::C && n % 2 == 1) || (t == LieType::B && n % 2 == 0) || !isXPartition(p, t)) continue;
        INFO(p.toString(), " ", toChar(t));
        REQUIRE(isSpecial(p, t) == oracle::bruteIsSpecial(p, t));
      }
    }
  }
}

TEST_CASE("partitionsOf") {
  CHECK(partitionsOf(0).size() == 1);
  CHECK(partitionsOf(4).size() == 5);
  CHECK(partitionsOf(10).size() == 42);
  CHECK(partitionsOf(4).front() == L("[4]"));
}
