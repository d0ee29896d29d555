#pragma once

#include <array>
#include <climits>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace domino {

/// S_{row,col}; row 1 is the top row and column 1 the leftmost column.
struct Square {
  int row = 1;
  int col = 1;

  auto operator<=>(const Square&) const = default;
  bool operator==(const Square&) const = default;
};

std::string to_string(const Square& s);

/// A labeled domino. Cells are stored in row-major order.
class Domino {
 public:
  Domino() = default;
  /// Throws DomainError unless the two cells share an edge.
  Domino(int label, Square a, Square b);

  int label() const { return label_; }
  const Square& first() const { return cells_[0]; }
  const Square& second() const { return cells_[1]; }
  const std::array<Square, 2>& cells() const { return cells_; }
  bool horizontal() const { return cells_[0].row == cells_[1].row; }
  bool vertical() const { return !horizontal(); }
  bool contains(const Square& s) const { return cells_[0] == s || cells_[1] == s; }
  int overlap(const Domino& other) const;

  Domino relabeled(int label) const { return Domino(label, cells_[0], cells_[1]); }

  auto operator<=>(const Domino&) const = default;
  bool operator==(const Domino&) const = default;

 private:
  int label_ = 0;
  std::array<Square, 2> cells_{};
};

/// Row lengths of a Young diagram, longest first, no trailing zeros.
using Partition = std::vector<int>;

enum class SquareKind { Fixed, VariableX, VariableW };

/// Fixed iff row+col and rank have opposite parity; a variable square is of
/// type X in odd rows and type W in even rows.
SquareKind square_kind(int row, int col, int rank);
inline SquareKind square_kind(const Square& s, int rank) { return square_kind(s.row, s.col, rank); }

/// The staircase {S_ij : i + j < r + 2}, i.e. the partition (r, r-1, ..., 1).
Partition staircase(int rank);
std::vector<Square> core_shape(int rank);

/// Label comparisons use 0 for core squares and for squares with a
/// non-positive index, and kInfinity for positive squares outside T.
inline constexpr int kInfinity = INT_MAX;

/// A domino tableau of rank r.
///
/// The rank fixes the parity frame (fixed vs. variable squares). The core is
/// stored explicitly: it is the staircase of the rank for every tableau built
/// by insertion, and differs from it by one square only after moving through
/// a core open cycle. Dominos are kept sorted by label. Values are immutable;
/// every "modification" builds a new tableau.
class DominoTableau {
 public:
  DominoTableau() = default;
  explicit DominoTableau(int rank);
  DominoTableau(int rank, std::vector<Domino> dominos);
  DominoTableau(int rank, Partition core, std::vector<Domino> dominos);

  int rank() const { return rank_; }
  const Partition& core() const { return core_; }
  bool has_staircase_core() const;
  /// The r' with core == staircase(r'), if there is one.
  std::optional<int> core_rank() const;

  const std::vector<Domino>& dominos() const { return dominos_; }
  int size() const { return static_cast<int>(dominos_.size()); }
  bool contains_label(int label) const;
  /// Throws DomainError when absent.
  const Domino& domino(int label) const;
  std::vector<int> labels() const;
  int max_label() const;

  bool in_core(const Square& s) const;
  /// Core or domino square.
  bool occupied(const Square& s) const;
  /// Extended label: 0 for core / non-positive indices, kInfinity outside T.
  int label_at(const Square& s) const;
  int label_at(int row, int col) const { return label_at(Square{row, col}); }

  /// Occupied squares, row-major.
  std::vector<Square> squares() const;
  /// Row lengths of the occupied set (meaningful when it is a Young diagram).
  Partition shape() const;

  DominoTableau with_domino(const Domino& d) const;
  DominoTableau without_label(int label) const;
  DominoTableau with_dominos(std::vector<Domino> dominos) const;

  auto operator<=>(const DominoTableau&) const = default;
  bool operator==(const DominoTableau&) const = default;

 private:
  int rank_ = 0;
  Partition core_;
  std::vector<Domino> dominos_;
};

enum class ViolationKind {
  BadCore,
  Overlap,
  CoreOverlap,
  NotYoungShape,
  NotAdjacent,
  LabelOrder,
  NotStandard,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidateOptions {
  /// Require labels to be exactly 1..n.
  bool require_standard = true;
  /// Accept a core that is any Young diagram (as produced by core moves).
  bool allow_core_change = false;
};

/// First violated invariant, or nullopt when T is a valid tableau.
std::optional<Violation> validate(const DominoTableau& t, ValidateOptions options = {});
bool is_young_diagram(const std::set<Square>& cells);

/// Contained in a 2x2 block whose top-left square is of type X.
/// The empty set counts as boxed.
bool is_boxed(const std::vector<Square>& cells, int rank);
bool is_boxed(const Domino& d, int rank);

enum class BendKind { Hole, Corner };

struct Bend {
  Square square;
  BendKind kind;
  bool full;

  auto operator<=>(const Bend&) const = default;
  bool operator==(const Bend&) const = default;
};

/// Variable squares at the outer boundary of T: nothing of T to the right
/// or below, and supported from above and the left (squares of the core
/// count as lying in T). Type W squares are holes, type X squares corners.
std::vector<Bend> holes_and_corners(const DominoTableau& t);
bool all_corners_empty(const DominoTableau& t);

/// Some square S_{m, r+3-m} with 1 <= m <= r+2 is unoccupied.
bool is_sparse(const DominoTableau& t);

/// Dominos with label <= k.
DominoTableau subtableau(const DominoTableau& t, int k);

/// Row lengths of the occupied squares, core included.
Partition shape(const DominoTableau& t);
Partition conjugate(const Partition& p);
int size_of(const Partition& p);

/// Every standard tableau of rank r with n dominos, by adding dominos
/// 1..n at outer positions in turn.
std::vector<DominoTableau> enumerate_standard(int rank, int n);

}  // namespace domino
