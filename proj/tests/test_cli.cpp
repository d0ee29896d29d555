#include <doctest.h>

#include <sstream>

#include "domino/cli.hpp"
#include "domino/io.hpp"

using namespace domino;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rs prints the pair as JSON") {
  const Run r = run({"rs", "--rank", "2", "--word", "4,-3,-2,1"});
  REQUIRE(r.code == kExitOk);
  CHECK(pair_from_json(Json::parse(r.out)) == rs_map(parse_word("4,-3,-2,1"), 2));
  CHECK(r.out.back() == '\n');
}

TEST_CASE("inverse-rs undoes rs byte for byte") {
  for (int rank = 0; rank <= 2; ++rank) {
    for (const SignedPermutation& w : enumerate_group(3)) {
      const std::string word = format_word(w);
      const Run pair = run({"rs", "--rank", std::to_string(rank), "--word", word});
      const Run back = run({"inverse-rs"}, pair.out);
      CHECK(back.code == kExitOk);
      CHECK(back.out == word + "\n");
    }
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"rs", "--bogus"}).code == kExitUsage);
  CHECK(run({"rs", "--rank", "1"}).code == kExitUsage);
  CHECK(run({"cells", "--n", "2", "--kind", "nope"}).code == kExitUsage);
  CHECK(run({"rs", "--word", "1,1"}).code == kExitDomain);
  CHECK(run({"inverse-rs"}, "not json").code == kExitDomain);
  CHECK(run({"ops", "--word", "1,2,3", "--apply", "knuth(1)"}).code == kExitDomain);
  CHECK(run({"graph", "--n", "7"}).code == kExitDomain);
  CHECK(run({"verify", "--n", "2", "--rank", "1"}).code == kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("ops reports the InSwap trace") {
  const Run r = run({"ops", "--rank", "2", "--word", "4,-3,-2,1", "--apply", "in(3)", "--check-tableau"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["result"] == "4,-3,1,-2");
  CHECK(j["tableau_check"] == "agree");
  CHECK(j["trace"]["sparse"] == false);
  CHECK(j["trace"]["cycle_right"] == Json::array({4}));

  const Run list = run({"ops", "--rank", "2", "--word", "4,-3,-2,1", "--format", "ascii"});
  CHECK(list.out == "knuth(1)\nin(1)\nin(3)\nsc(3)\n");
}

TEST_CASE("cycles, mt and special") {
  const Run c = run({"cycles", "--rank", "2", "--word", "4,-3,-2,1", "--format", "ascii"});
  CHECK(c.out.find("{4} open-noncore sb=(2,4) sf=(3,3)") != std::string::npos);
  const Run m = run({"mt", "--rank", "2", "--word", "4,-3,-2,1", "--label", "4", "--label", "4"});
  REQUIRE(m.code == kExitOk);
  const DominoTableau moved = tableau_from_json(Json::parse(m.out));
  CHECK(moved.domino(4) == Domino(4, {2, 3}, {3, 3}));
  const Run e = run({"mt", "--rank", "2", "--word", "4,-3,-2,1", "--label", "4", "--extended"});
  CHECK(Json::parse(e.out)["in_left"] == Json::array({4}));
  const Run s = run({"special", "--in", "-"}, to_json(moved).dump());
  CHECK(s.code == kExitOk);
}

TEST_CASE("cells, graph and verify") {
  const Run cells = run({"cells", "--n", "1", "--rank", "0", "--kind", "reducible-left"});
  CHECK(Json::parse(cells.out)["blocks"].size() == 2);
  const Run dot = run({"graph", "--n", "2", "--rank", "0", "--dot"});
  CHECK(dot.out.rfind("graph lambda_n2_r0 {", 0) == 0);
  const Run v = run({"verify", "--n", "3", "--rank", "1", "--suite", "stability"});
  CHECK(v.out.rfind("PASS stability n=3 r=1", 0) == 0);
  const Run vj = run({"verify", "--n", "2", "--rank", "0", "--format", "json"});
  CHECK(Json::parse(vj.out)["passed"] == true);
}

TEST_CASE("render draws both tableaux") {
  const Run r = run({"render", "--rank", "0", "--word", "1"});
  CHECK(r.out == "+-------+    +-------+\n|   1   |    |   1   |\n+-------+    +-------+\n");
}
