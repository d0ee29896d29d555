#include <doctest.h>

#include "domino/cycles.hpp"
#include "support.hpp"

using namespace domino;

TEST_CASE("moved dominos in the running example") {
  const DominoTableau t = test::running_example();
  CHECK(moved_domino(t, 4) == Domino(4, {2, 3}, {3, 3}));
  CHECK(cycle(t, 4).labels == std::vector<int>{4});
  const CycleClass cls = classify(t, cycle(t, 4));
  CHECK(cls.kind == CycleKind::OpenNonCore);
  CHECK(cls.back == Square{2, 4});
  CHECK(cls.front == Square{3, 3});
  CHECK_THROWS_AS(cycle(t, 9), DomainError);
}

TEST_CASE("cycles partition the labels") {
  for (int rank = 0; rank <= 3; ++rank) {
    for (const SignedPermutation& w : enumerate_group(4)) {
      const DominoTableau t = rs_map(w, rank).right;
      std::vector<int> all;
      for (const CycleSet& c : cycles(t)) all.insert(all.end(), c.labels.begin(), c.labels.end());
      std::sort(all.begin(), all.end());
      CHECK(all == t.labels());
    }
  }
}

TEST_CASE("moving through is an involution that flips boxing") {
  for (int rank = 0; rank <= 3; ++rank) {
    for (const SignedPermutation& w : enumerate_group(3)) {
      for (const DominoTableau& t : {rs_map(w, rank).left, rs_map(w, rank).right}) {
        for (const CycleSet& c : cycles(t)) {
          const MoveResult m = move_through(t, c);
          CHECK(move_through(m.tableau, c).tableau == t);
          for (int l : c.labels) CHECK(is_boxed(t.domino(l), rank) != is_boxed(m.tableau.domino(l), rank));
        }
      }
    }
  }
}

TEST_CASE("odd-rank special form terminates") {
  // Cycle {3} sits in column 1 below a one-square core.
  const DominoTableau t = rs_map(parse_word("2,1,-3"), 1).right;
  const DominoTableau s = special_form(t);
  CHECK(all_corners_empty(s));
  CHECK(special_form(s) == s);
  CHECK(is_somewhat_special(s));
}

TEST_CASE("special form is constant on orbits of non-core open cycles") {
  for (int rank = 0; rank <= 3; ++rank) {
    for (const SignedPermutation& w : enumerate_group(3)) {
      for (const DominoTableau& t : {rs_map(w, rank).left, rs_map(w, rank).right}) {
        const DominoTableau s = special_form(t);
        const std::vector<CycleSet> open = noncore_open_cycles(t);
        for (unsigned mask = 0; mask < (1u << open.size()); ++mask) {
          std::vector<CycleSet> pick;
          for (std::size_t i = 0; i < open.size(); ++i) {
            if (mask >> i & 1u) pick.push_back(open[i]);
          }
          CHECK(special_form(move_through_set(t, pick)) == s);
        }
      }
    }
  }
}

TEST_CASE("extended cycle through 4 in the running example") {
  const TableauPair p{test::running_example(), test::running_example()};
  const ExtendedCyclePair c = extended_cycle(p, 4, Side::Right);
  CHECK(c.in_left == std::vector<int>{4});
  CHECK(c.in_right == std::vector<int>{4});
  const TableauPair moved = move_through_pair(p, c);
  CHECK(moved.left.domino(4) == Domino(4, {2, 3}, {3, 3}));
  CHECK(moved.right.domino(4) == Domino(4, {2, 3}, {3, 3}));
}

TEST_CASE("both link rules give the same extended cycles") {
  for (int rank = 0; rank <= 3; ++rank) {
    for (const SignedPermutation& w : enumerate_group(3)) {
      const TableauPair p = rs_map(w, rank);
      for (int k = 1; k <= 3; ++k) {
        for (Side side : {Side::Left, Side::Right}) {
          CHECK(extended_cycle(p, k, side, LinkRule::SquareOfCycle) == extended_cycle(p, k, side, LinkRule::BackSquare));
        }
      }
    }
  }
}

TEST_CASE("core open cycles change the core by one square") {
  // rank 1, w = -1: the vertical domino under the core.
  const DominoTableau t = rs_map(parse_word("-1"), 1).right;
  const MoveResult m = move_through(t, cycle(t, 1));
  CHECK(m.cycle_class.kind == CycleKind::OpenCore);
  CHECK(size_of(m.tableau.core()) != size_of(t.core()));
  CHECK(m.tableau.rank() == 1);
  CHECK(noncore_open_cycles(t).empty());
}
