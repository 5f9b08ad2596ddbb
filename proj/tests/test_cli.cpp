#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "orbvar/serialization.hpp"

using namespace orbvar;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "orbvar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rs") {
  const auto r = run({"rs", "--type", "C", "2 -1"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["left"]["dominoes"].size() == 2);
  CHECK(doc["right"]["dominoes"].size() == 2);
  CHECK(pairFromJson(doc).left.type() == LieType::C);
}

TEST_CASE("orbital") {
  const auto r = run({"orbital", "--type", "C", "2 1"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["orbit"] == "[2,2]");
  CHECK(doc["trace"].is_array());
  const auto lowered = Json::parse(run({"orbital", "--type", "C", "-1 2"}).out);
  CHECK(lowered["orbit"] == "[2,2]");
  REQUIRE(lowered["trace"].size() == 1);
  CHECK(lowered["trace"][0]["before"] == "[3,1]");
  CHECK(lowered["trace"][0]["after"] == "[2,2]");
}

TEST_CASE("verify") {
  const auto r = run({"verify", "rs-bijection", "--n", "3", "--type", "C"});
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["instances"] == 48);
  const auto fail = run({"verify", "pipeline-confluence", "--n", "5", "--type", "C", "--samples", "50", "--seed", "7"});
  CHECK((fail.code == 0 || fail.code == 1));
  CHECK(Json::parse(fail.out)["passed"] == (fail.code == 0));
}

TEST_CASE("verify output does not depend on jobs") {
  const auto a = run({"verify", "pipeline-confluence", "--n", "4", "--type", "B", "--jobs", "1"});
  const auto b = run({"verify", "pipeline-confluence", "--n", "4", "--type", "B", "--jobs", "3"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rs", "2 -1"}).code == 2);
  CHECK(run({"rs", "--type", "A", "1"}).code == 2);
  CHECK(run({"rs", "--type", "C", "1 1"}).code == 2);
  CHECK(run({"verify", "nope", "--n", "2", "--type", "C"}).code == 2);
  CHECK(run({"verify", "rs-bijection", "--type", "C"}).code == 2);
  CHECK(run({"orbital", "--type", "C", "{not json"}).code == 2);
  CHECK(run({"move", "--type", "C", "1 2"}).code == 2);
  CHECK(run({"op", "tsame", "1 3 2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit 1") {
  const auto undefinedOp = run({"op", "vtrunc", "--type", "C", "1 2"});
  CHECK(undefinedOp.code == 1);
  CHECK(Json::parse(undefinedOp.out)["defined"] == false);
  CHECK(run({"orbital", R"({"type":"C","dominoes":[{"label":2,"cells":[[1,1],[1,2]]}]})"}).code == 1);
  CHECK(run({"count", "--type", "C", "--shape", "[3]"}).code == 1);
  CHECK(run({"move", "--type", "C", "--label", "5", "1 2"}).code == 1);
}

TEST_CASE("tableau JSON is accepted back") {
  const auto pairText = run({"rs", "--type", "B", "3 -1 2"}).out;
  const auto pair = Json::parse(pairText);
  const std::string left = pair["left"].dump();
  const std::string right = pair["right"].dump();
  for (const auto& sub : {"orbital", "special", "cycles"}) {
    CHECK(run({sub, left}).code == 0);
    CHECK(run({sub, right}).code == 0);
  }
  const auto moved = run({"move", "--label", "2", "--coloring", "D", left});
  REQUIRE(moved.code == 0);
  CHECK(run({"move", "--label", "2", "--coloring", "D", moved.out}).out == Json::parse(left).dump() + "\n");
  const auto inv = run({"inverse", pairText});
  CHECK(Json::parse(inv.out)["permutation"] == "3 -1 2");
  CHECK(run({"op", "vd", pairText}).code == 1);
  CHECK(run({"move", "--extended", "--label", "1", pairText}).code == 0);
}

TEST_CASE("file input and ascii output") {
  const auto path = std::filesystem::temp_directory_path() / "orbvar_cli_test_input.txt";
  {
    std::ofstream f(path);
    f << "2 1\n";
  }
  const auto r = run({"--format", "ascii", "rs", "--type", "C", path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 0);
  CHECK(r.out == "left\n1 1\n2 2\nright\n1 1\n2 2\n");
  CHECK(run({"rs", "--type", "C", "--format", "ascii", "2 1"}).out == r.out);
}

TEST_CASE("count") {
  const auto r = run({"count", "--type", "C", "--shape", "[2,2]"});
  CHECK(Json::parse(r.out)[0]["count"] == 2);
  const auto all = run({"--format", "ascii", "count", "--type", "C", "--n", "2"});
  CHECK(all.out == "[4] 1\n[3,1] 1\n[2,2] 2\n[2,1,1] 1\n[1,1,1,1] 1\ntotal 6\n");
}

TEST_CASE("wall crossing from the command line") {
  const auto r = run({"op", "tsame", "--i", "2", "--j", "3", "1 3 2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["permutation"] == "3 1 2");
  CHECK(run({"op", "tsame", "--i", "2", "--j", "3", "1 2 3"}).code == 1);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"orbital", "--type", "B", "-3 1 -2"}).out == run({"orbital", "--type", "B", "-3 1 -2"}).out);
}
