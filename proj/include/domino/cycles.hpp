#pragma once

#include <optional>
#include <vector>

#include "domino/insertion.hpp"
#include "domino/tableau.hpp"

namespace domino {

/// D'(k, T): the position domino k moves to. The fixed square of D(k, T)
/// stays and the variable half swings to the neighbor picked by comparing k
/// with the extended label diagonally across the fixed square.
Domino moved_domino(const DominoTableau& t, int k);

/// Labels of one cycle, ascending.
struct CycleSet {
  std::vector<int> labels;

  bool contains(int label) const;
  auto operator<=>(const CycleSet&) const = default;
  bool operator==(const CycleSet&) const = default;
};

enum class CycleKind { Closed, OpenCore, OpenNonCore };

const char* to_string(CycleKind kind);

/// back is S_b (the square leaving the shape, or joining/leaving the core)
/// and front is S_f (the square added to the shape). Both are present
/// exactly when the cycle is open.
struct CycleClass {
  CycleKind kind = CycleKind::Closed;
  std::optional<Square> back;
  std::optional<Square> front;

  bool open() const { return kind != CycleKind::Closed; }
  bool operator==(const CycleClass&) const = default;
};

/// The least set of labels containing k and closed under overlap of D(l)
/// with D'(m) in either direction. Throws DomainError if k is absent.
CycleSet cycle(const DominoTableau& t, int k);

/// All cycles of T, ordered by their smallest label.
std::vector<CycleSet> cycles(const DominoTableau& t);

struct MoveResult {
  DominoTableau tableau;
  CycleClass cycle_class;
};

/// MT(T, c). A core open cycle leaves the parity frame (rank) untouched and
/// grows or shrinks the stored core by S_b. Throws DomainError if c is not a
/// cycle of T.
MoveResult move_through(const DominoTableau& t, const CycleSet& c);
CycleClass classify(const DominoTableau& t, const CycleSet& c);

/// Moves through the cycles one after another. Throws DomainError if they
/// overlap or one is not a cycle of T.
DominoTableau move_through_set(const DominoTableau& t, const std::vector<CycleSet>& cycles);
/// Same, given the union of the cycles as a label set.
DominoTableau move_through_labels(const DominoTableau& t, const std::vector<int>& labels);

/// Every domino of the cycle lies in an X-cornered 2x2 block.
bool is_boxed(const DominoTableau& t, const CycleSet& c);

/// The non-core open cycles of T.
std::vector<CycleSet> noncore_open_cycles(const DominoTableau& t);

enum class Side { Left, Right };

/// How a cycle d of the partner tableau links cycles c1 and c2 into the same
/// extended cycle: S_f(d) must be a square of MT(c2), and S_b(d) must be
///   SquareOfCycle: any square currently covered by c1;
///   BackSquare:    S_b(c1) itself.
enum class LinkRule { SquareOfCycle, BackSquare };

/// Matched extended cycles: in_left is a union of cycles of T1, in_right a
/// union of cycles of T2. Both empty-partnered sides are allowed (a closed
/// cycle is its own extended cycle and pairs with the identity move).
struct ExtendedCyclePair {
  std::vector<int> in_left;
  std::vector<int> in_right;

  bool operator==(const ExtendedCyclePair&) const = default;
};

/// The extended cycle through k in the `side` tableau relative to the other,
/// together with the corresponding extended cycle on the other side.
ExtendedCyclePair extended_cycle(const TableauPair& p, int k, Side side,
                                 LinkRule rule = LinkRule::SquareOfCycle);

/// Cycles of the `side` tableau making up the extended cycle, with classes.
struct ExtendedCycleDetail {
  std::vector<CycleSet> own;
  std::vector<CycleSet> partner;
};
ExtendedCycleDetail extended_cycle_detail(const TableauPair& p, int k, Side side,
                                          LinkRule rule = LinkRule::SquareOfCycle);

/// MT((T1, T2), b) = (MT(T1, in_left), MT(T2, in_right)). Throws DomainError
/// if the result is not a same-shape pair.
TableauPair move_through_pair(const TableauPair& p, const ExtendedCyclePair& b);

/// S(T): moves through unboxed non-core open cycles until every non-core
/// open cycle is boxed.
DominoTableau special_form(const DominoTableau& t);

/// Every non-core open cycle is boxed.
bool is_somewhat_special(const DominoTableau& t);

}  // namespace domino
