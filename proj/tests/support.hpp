#pragma once

#include <initializer_list>

#include "domino/tableau.hpp"

namespace test {

struct Piece {
  int label, r1, c1, r2, c2;
};

// A rank-r tableau with staircase core from {label, row, col, row, col}.
inline domino::DominoTableau make(int rank, std::initializer_list<Piece> dominos) {
  std::vector<domino::Domino> ds;
  for (const Piece& s : dominos) ds.emplace_back(s.label, domino::Square{s.r1, s.c1}, domino::Square{s.r2, s.c2});
  return domino::DominoTableau(rank, std::move(ds));
}

// G_2(4,-3,-2,1): both tableaux coincide.
inline domino::DominoTableau running_example() {
  return make(2, {{1, 1, 3, 1, 4}, {2, 3, 1, 4, 1}, {3, 2, 2, 3, 2}, {4, 2, 3, 2, 4}});
}

}  // namespace test
