#pragma once

#include <utility>

#include "domino/signed_perm.hpp"
#include "domino/tableau.hpp"

namespace domino {

/// Same-shape pair (T1, T2) produced by the rank r correspondence.
struct TableauPair {
  DominoTableau left;
  DominoTableau right;

  auto operator<=>(const TableauPair&) const = default;
  bool operator==(const TableauPair&) const = default;
};

/// Inserts the signed value into T.
///
/// A positive value enters as a horizontal domino at the end of row 1 of the
/// subtableau of smaller labels, a negative one as a vertical domino at the
/// foot of column 1. Larger labels are then visited in increasing order, each
/// reacting to the two squares just added below it:
///   - disjoint: the domino stays put;
///   - equal:    it is bumped to the end of the next row (horizontal) or to
///               the foot of the next column (vertical);
///   - one cell: the two dominos span a 2x2 block and the label takes the
///               half of the block the newcomer left free.
/// Throws DomainError if |value| already labels T.
DominoTableau insert_alpha(const DominoTableau& t, int value);

struct InsertionStep {
  DominoTableau tableau;
  Domino added;  // squares by which the shape grew, labeled with |value|
};
InsertionStep insert_with_growth(const DominoTableau& t, int value);

/// G_r(w) = (T1, T2): T1 by iterated insertion, T2 records the growth.
TableauPair rs_map(const SignedPermutation& w, int rank);

struct ReverseStep {
  TableauPair pair;
  int value;
};

/// (T1, T2)': strips domino n from T2 and undoes the last insertion into T1,
/// returning the value that was inserted. Throws DomainError on an empty pair.
ReverseStep reverse_step(const TableauPair& p);

/// Inverse of rs_map. Throws DomainError if p is not a valid same-shape pair
/// of standard tableaux.
SignedPermutation rs_inverse(const TableauPair& p);

/// Nullopt when p is a valid same-shape pair, otherwise a description.
std::optional<std::string> validate_pair(const TableauPair& p);

}  // namespace domino
