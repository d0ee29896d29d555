#include <doctest.h>

#include "domino/cells.hpp"
#include "domino/operators.hpp"
#include "support.hpp"

using namespace domino;

namespace {

std::string act(const OperatorDescriptor& op, const char* word) { return format_word(apply(op, parse_word(word))); }

}  // namespace

TEST_CASE("Knuth moves on words") {
  CHECK(act(OperatorDescriptor::knuth(1), "2,3,1") == "2,1,3");
  CHECK(act(OperatorDescriptor::knuth(1), "4,-3,-2,1") == "-3,4,-2,1");
  CHECK_FALSE(knuth_applicable(parse_word("1,2,3"), 1));
  CHECK_FALSE(knuth_applicable(parse_word("3,2,1"), 1));
  CHECK_THROWS_AS(apply_knuth(parse_word("1,2,3"), 1), DomainError);
  for (const SignedPermutation& w : enumerate_group(4)) {
    for (int j = 1; j <= 2; ++j) {
      if (!knuth_applicable(w, j)) continue;
      const SignedPermutation v = apply_knuth(w, j);
      CHECK(knuth_applicable(v, j));
      CHECK(apply_knuth(v, j) == w);
    }
  }
}

TEST_CASE("InSwap and SignChange on words") {
  CHECK(act(OperatorDescriptor::in_swap(3), "4,-3,-2,1") == "4,-3,1,-2");
  CHECK_FALSE(in_applicable(parse_word("4,-3,-2,1"), 2));
  CHECK(act(OperatorDescriptor::sign_change(3), "4,-3,-2,1") == "-4,-3,-2,1");
  CHECK_FALSE(sc_applicable(parse_word("4,-3,1,-2"), 3));
  CHECK_FALSE(sc_applicable(parse_word("2,3,1"), 1));
  CHECK(sc_applicable(parse_word("3,1,2"), 1));
  CHECK_THROWS_AS(applicable(OperatorDescriptor::in_swap(4), parse_word("1,2,3,4")), DomainError);
  CHECK_THROWS_AS(applicable(OperatorDescriptor::knuth(0), parse_word("1,2,3")), DomainError);
}

TEST_CASE("lambda sets") {
  auto names = [](int n, int rank) {
    std::vector<std::string> out;
    for (const OperatorDescriptor& op : lambda_set(n, rank)) out.push_back(to_string(op));
    return out;
  };
  CHECK(names(4, 2) == std::vector<std::string>{"knuth(1)", "knuth(2)", "in(1)", "in(2)", "in(3)", "sc(3)"});
  CHECK(names(2, 3) == std::vector<std::string>{"in(1)"});
  CHECK(names(3, 0) == std::vector<std::string>{"knuth(1)", "in(1)", "sc(1)"});
  CHECK(names(0, 0).empty());
}

TEST_CASE("descriptors print and parse") {
  for (const OperatorDescriptor& op : lambda_set(5, 1)) CHECK(parse_operator(to_string(op)) == op);
  CHECK(parse_operator("in(12)") == OperatorDescriptor::in_swap(12));
  CHECK_THROWS_AS(parse_operator("in( 2 )"), DomainError);
  CHECK_THROWS_AS(parse_operator("swap(2)"), DomainError);
  CHECK_THROWS_AS(parse_operator("knuth(x)"), DomainError);
  CHECK_THROWS_AS(parse_operator("sc(0)"), DomainError);
}

TEST_CASE("right descents of w show in T2") {
  for (int rank = 0; rank <= 3; ++rank) {
    for (const SignedPermutation& w : enumerate_group(4)) {
      const DominoTableau& t = rs_map(w, rank).right;
      for (int j = 1; j < 4; ++j) CHECK(lies_below(t, j + 1, j) == (w(j) > w(j + 1)));
      for (int k = 1; k <= std::min(rank + 1, 4); ++k) {
        const bool descending = [&] {
          for (int i = 1; i < k; ++i) if (std::abs(w(i)) < std::abs(w(i + 1))) return false;
          return true;
        }();
        if (k == rank + 1 && descending) CHECK(t.domino(k).vertical() == (w(k) < 0));
      }
    }
  }
}

TEST_CASE("tableau actions on the running example") {
  const TableauPair p = rs_map(parse_word("4,-3,-2,1"), 2);

  const TableauPair sc = apply_op_tableau(OperatorDescriptor::sign_change(3), p);
  CHECK(sc == rs_map(parse_word("-4,-3,-2,1"), 2));
  CHECK(sc.left == p.left);
  CHECK(sc.right == test::make(2, {{1, 3, 1, 4, 1}, {2, 2, 2, 3, 2}, {3, 1, 3, 2, 3}, {4, 1, 4, 2, 4}}));

  const InSwapTrace trace = trace_in_swap(p, 3);
  CHECK_FALSE(trace.sparse);
  REQUIRE(trace.config);
  CHECK((*trace.config == InConfig::TildeE0 || *trace.config == InConfig::TildeE1));
  REQUIRE(trace.cycle.own.size() == 1);
  CHECK(trace.cycle.own[0].labels == std::vector<int>{4});
  CHECK(trace.result == rs_map(parse_word("4,-3,1,-2"), 2));
  CHECK(trace.result.left == test::make(2, {{1, 1, 3, 1, 4}, {2, 3, 1, 4, 1}, {3, 2, 2, 3, 2}, {4, 2, 3, 3, 3}}));
  CHECK(trace.result.right == test::make(2, {{1, 1, 3, 1, 4}, {2, 3, 1, 4, 1}, {3, 2, 2, 2, 3}, {4, 3, 2, 3, 3}}));

  CHECK(apply_op_tableau(OperatorDescriptor::knuth(1), p) == rs_map(parse_word("-3,4,-2,1"), 2));
  CHECK_THROWS_AS(apply_op_tableau(OperatorDescriptor::in_swap(2), p), DomainError);
  CHECK_THROWS_AS(apply_op_tableau(OperatorDescriptor::sign_change(2), p), DomainError);
}

TEST_CASE("small ranks take the sparse branch") {
  const TableauPair p = rs_map(parse_word("2,-1,3"), 1);
  const InSwapTrace trace = trace_in_swap(p, 1);
  CHECK(trace.sparse);
  CHECK(trace.result.left == p.left);
  CHECK(trace.result == rs_map(parse_word("-1,2,3"), 1));
}

TEST_CASE("tableau actions commute with insertion") {
  for (int n = 0; n <= 3; ++n) {
    for (int rank = 0; rank <= 3; ++rank) {
      const VerifyReport r = verify_operators(build_table(n, rank, Kernel::Serial));
      CHECK_MESSAGE(r.passed(), r.suite, " n=", n, " r=", rank);
      if (n >= 2) CHECK(r.checked > 0);
    }
  }
}
