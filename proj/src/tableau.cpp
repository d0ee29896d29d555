#include "domino/tableau.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "domino/signed_perm.hpp"

namespace domino {

std::string to_string(const Square& s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

Domino::Domino(int label, Square a, Square b) : label_(label) {
  if (b < a) std::swap(a, b);
  const bool horizontal = a.row == b.row && b.col == a.col + 1;
  const bool vertical = a.col == b.col && b.row == a.row + 1;
  if (!horizontal && !vertical) {
    throw DomainError("domino " + std::to_string(label) + ": cells " + to_string(a) + " and " +
                      to_string(b) + " are not adjacent");
  }
  cells_ = {a, b};
}

int Domino::overlap(const Domino& other) const {
  int count = 0;
  for (const Square& s : cells_) count += other.contains(s) ? 1 : 0;
  return count;
}

SquareKind square_kind(int row, int col, int rank) {
  if (((row + col) - rank) % 2 != 0) return SquareKind::Fixed;
  return (row % 2 != 0) ? SquareKind::VariableX : SquareKind::VariableW;
}

Partition staircase(int rank) {
  Partition p;
  for (int len = rank; len >= 1; --len) p.push_back(len);
  return p;
}

std::vector<Square> core_shape(int rank) {
  std::vector<Square> out;
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; i + j < rank + 2; ++j) out.push_back({i, j});
  }
  return out;
}

DominoTableau::DominoTableau(int rank) : DominoTableau(rank, staircase(rank), {}) {}

DominoTableau::DominoTableau(int rank, std::vector<Domino> dominos)
    : DominoTableau(rank, staircase(rank), std::move(dominos)) {}

DominoTableau::DominoTableau(int rank, Partition core, std::vector<Domino> dominos)
    : rank_(rank), core_(std::move(core)), dominos_(std::move(dominos)) {
  if (rank < 0) throw DomainError("rank must be non-negative");
  while (!core_.empty() && core_.back() == 0) core_.pop_back();
  std::sort(dominos_.begin(), dominos_.end(),
            [](const Domino& a, const Domino& b) { return a.label() < b.label(); });
  for (std::size_t i = 1; i < dominos_.size(); ++i) {
    if (dominos_[i].label() == dominos_[i - 1].label()) {
      throw DomainError("duplicate domino label " + std::to_string(dominos_[i].label()));
    }
  }
  for (const Domino& d : dominos_) {
    if (d.label() <= 0) throw DomainError("domino labels must be positive");
  }
}

bool DominoTableau::has_staircase_core() const { return core_ == staircase(rank_); }

std::optional<int> DominoTableau::core_rank() const {
  const int r = core_.empty() ? 0 : core_.front();
  if (core_ == staircase(r)) return r;
  return std::nullopt;
}

bool DominoTableau::contains_label(int label) const {
  auto it = std::lower_bound(dominos_.begin(), dominos_.end(), label,
                             [](const Domino& d, int l) { return d.label() < l; });
  return it != dominos_.end() && it->label() == label;
}

const Domino& DominoTableau::domino(int label) const {
  auto it = std::lower_bound(dominos_.begin(), dominos_.end(), label,
                             [](const Domino& d, int l) { return d.label() < l; });
  if (it == dominos_.end() || it->label() != label) {
    throw DomainError("no domino labeled " + std::to_string(label));
  }
  return *it;
}

std::vector<int> DominoTableau::labels() const {
  std::vector<int> out;
  out.reserve(dominos_.size());
  for (const Domino& d : dominos_) out.push_back(d.label());
  return out;
}

int DominoTableau::max_label() const { return dominos_.empty() ? 0 : dominos_.back().label(); }

bool DominoTableau::in_core(const Square& s) const {
  return s.row >= 1 && s.col >= 1 && s.row <= static_cast<int>(core_.size()) &&
         s.col <= core_[s.row - 1];
}

bool DominoTableau::occupied(const Square& s) const {
  if (in_core(s)) return true;
  for (const Domino& d : dominos_) {
    if (d.contains(s)) return true;
  }
  return false;
}

int DominoTableau::label_at(const Square& s) const {
  if (s.row <= 0 || s.col <= 0 || in_core(s)) return 0;
  for (const Domino& d : dominos_) {
    if (d.contains(s)) return d.label();
  }
  return kInfinity;
}

std::vector<Square> DominoTableau::squares() const {
  std::vector<Square> out;
  for (int i = 1; i <= static_cast<int>(core_.size()); ++i) {
    for (int j = 1; j <= core_[i - 1]; ++j) out.push_back({i, j});
  }
  for (const Domino& d : dominos_) {
    out.push_back(d.first());
    out.push_back(d.second());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition DominoTableau::shape() const {
  Partition rows;
  for (const Square& s : squares()) {
    if (static_cast<int>(rows.size()) < s.row) rows.resize(s.row, 0);
    rows[s.row - 1] = std::max(rows[s.row - 1], s.col);
  }
  return rows;
}

DominoTableau DominoTableau::with_domino(const Domino& d) const {
  std::vector<Domino> ds = dominos_;
  ds.push_back(d);
  return DominoTableau(rank_, core_, std::move(ds));
}

DominoTableau DominoTableau::without_label(int label) const {
  std::vector<Domino> ds;
  for (const Domino& d : dominos_) {
    if (d.label() != label) ds.push_back(d);
  }
  return DominoTableau(rank_, core_, std::move(ds));
}

DominoTableau DominoTableau::with_dominos(std::vector<Domino> dominos) const {
  return DominoTableau(rank_, core_, std::move(dominos));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::BadCore: return "bad-core";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::CoreOverlap: return "core-overlap";
    case ViolationKind::NotYoungShape: return "not-young-shape";
    case ViolationKind::NotAdjacent: return "not-adjacent";
    case ViolationKind::LabelOrder: return "label-order";
    case ViolationKind::NotStandard: return "not-standard";
  }
  return "unknown";
}

bool is_young_diagram(const std::set<Square>& cells) {
  for (const Square& s : cells) {
    if (s.row < 1 || s.col < 1) return false;
    if (s.row > 1 && !cells.count({s.row - 1, s.col})) return false;
    if (s.col > 1 && !cells.count({s.row, s.col - 1})) return false;
  }
  return true;
}

std::optional<Violation> validate(const DominoTableau& t, ValidateOptions options) {
  const Partition& core = t.core();
  for (std::size_t i = 1; i < core.size(); ++i) {
    if (core[i] > core[i - 1]) return Violation{ViolationKind::BadCore, "core is not a partition"};
  }
  if (!options.allow_core_change && !t.has_staircase_core()) {
    return Violation{ViolationKind::BadCore,
                     "core is not the staircase of rank " + std::to_string(t.rank())};
  }

  std::set<Square> cells;
  for (int i = 1; i <= static_cast<int>(core.size()); ++i) {
    for (int j = 1; j <= core[i - 1]; ++j) cells.insert({i, j});
  }
  for (const Domino& d : t.dominos()) {
    for (const Square& s : d.cells()) {
      if (s.row < 1 || s.col < 1) {
        return Violation{ViolationKind::NotYoungShape,
                         "domino " + std::to_string(d.label()) + " leaves the quadrant"};
      }
      if (t.in_core(s)) {
        return Violation{ViolationKind::CoreOverlap,
                         "domino " + std::to_string(d.label()) + " covers core square " + to_string(s)};
      }
      if (!cells.insert(s).second) {
        return Violation{ViolationKind::Overlap, "square " + to_string(s) + " covered twice"};
      }
    }
  }
  if (!is_young_diagram(cells)) {
    return Violation{ViolationKind::NotYoungShape, "occupied squares do not form a Young diagram"};
  }
  for (const Square& s : cells) {
    const int here = t.label_at(s);
    const Square right{s.row, s.col + 1};
    const Square below{s.row + 1, s.col};
    if (cells.count(right) && t.label_at(right) < here) {
      return Violation{ViolationKind::LabelOrder, "labels decrease along row at " + to_string(s)};
    }
    if (cells.count(below) && t.label_at(below) < here) {
      return Violation{ViolationKind::LabelOrder, "labels decrease down column at " + to_string(s)};
    }
  }
  if (options.require_standard) {
    int expected = 1;
    for (const Domino& d : t.dominos()) {
      if (d.label() != expected++) {
        return Violation{ViolationKind::NotStandard, "labels are not exactly 1..n"};
      }
    }
  }
  return std::nullopt;
}

bool is_boxed(const std::vector<Square>& cells, int rank) {
  if (cells.empty()) return true;
  int min_row = cells.front().row, min_col = cells.front().col;
  for (const Square& s : cells) {
    min_row = std::min(min_row, s.row);
    min_col = std::min(min_col, s.col);
  }
  for (int i = min_row - 1; i <= min_row; ++i) {
    for (int j = min_col - 1; j <= min_col; ++j) {
      if (i < 0 || j < 0 || square_kind(i, j, rank) != SquareKind::VariableX) continue;
      const bool inside = std::all_of(cells.begin(), cells.end(), [&](const Square& s) {
        return s.row >= i && s.row <= i + 1 && s.col >= j && s.col <= j + 1;
      });
      if (inside) return true;
    }
  }
  return false;
}

bool is_boxed(const Domino& d, int rank) {
  return is_boxed(std::vector<Square>{d.first(), d.second()}, rank);
}

std::vector<Bend> holes_and_corners(const DominoTableau& t) {
  std::vector<Bend> out;
  const Partition rows = t.shape();
  const int max_row = static_cast<int>(rows.size()) + 1;
  const int max_col = (rows.empty() ? 0 : rows.front()) + 1;
  for (int i = 1; i <= max_row; ++i) {
    for (int j = 1; j <= max_col; ++j) {
      const SquareKind kind = square_kind(i, j, t.rank());
      if (kind == SquareKind::Fixed) continue;
      if (t.occupied({i, j + 1}) || t.occupied({i + 1, j})) continue;
      const bool above = t.occupied({i - 1, j});
      const bool left = t.occupied({i, j - 1});
      const bool supported = (above && left) || (above && j == 1) || (left && i == 1) ||
                             (i == 1 && j == 1);
      if (!supported) continue;
      out.push_back({{i, j}, kind == SquareKind::VariableW ? BendKind::Hole : BendKind::Corner,
                     t.occupied({i, j})});
    }
  }
  return out;
}

bool all_corners_empty(const DominoTableau& t) {
  for (const Bend& b : holes_and_corners(t)) {
    if (b.kind == BendKind::Corner && b.full) return false;
  }
  return true;
}

bool is_sparse(const DominoTableau& t) {
  const int r = t.rank();
  for (int m = 1; m <= r + 2; ++m) {
    if (!t.occupied({m, r + 3 - m})) return true;
  }
  return false;
}

DominoTableau subtableau(const DominoTableau& t, int k) {
  std::vector<Domino> kept;
  for (const Domino& d : t.dominos()) {
    if (d.label() <= k) kept.push_back(d);
  }
  return t.with_dominos(std::move(kept));
}

Partition shape(const DominoTableau& t) { return t.shape(); }

Partition conjugate(const Partition& p) {
  Partition out;
  for (int j = 1; !p.empty() && j <= p.front(); ++j) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[len] >= j) ++len;
    out.push_back(len);
  }
  return out;
}

int size_of(const Partition& p) {
  int total = 0;
  for (int v : p) total += v;
  return total;
}

namespace {

// Outer squares that can be added to `rows` keeping a Young diagram.
std::vector<Square> addable(const Partition& rows) {
  std::vector<Square> out;
  const int height = static_cast<int>(rows.size());
  for (int i = 1; i <= height + 1; ++i) {
    const int len = i <= height ? rows[i - 1] : 0;
    const int above = i == 1 ? INT_MAX : rows[i - 2];
    if (len < above) out.push_back({i, len + 1});
  }
  return out;
}

Partition add_square(Partition rows, const Square& s) {
  if (static_cast<int>(rows.size()) < s.row) rows.resize(s.row, 0);
  rows[s.row - 1] += 1;
  return rows;
}

void extend(const DominoTableau& t, const Partition& rows, int label, int n,
            std::vector<DominoTableau>& out) {
  if (label > n) {
    out.push_back(t);
    return;
  }
  std::set<std::pair<Square, Square>> seen;
  for (const Square& a : addable(rows)) {
    const Partition grown = add_square(rows, a);
    for (const Square& b : addable(grown)) {
      const bool adjacent = (a.row == b.row && std::abs(a.col - b.col) == 1) ||
                            (a.col == b.col && std::abs(a.row - b.row) == 1);
      if (!adjacent) continue;
      const auto key = std::minmax(a, b);
      if (!seen.insert({key.first, key.second}).second) continue;
      extend(t.with_domino(Domino(label, a, b)), add_square(grown, b), label + 1, n, out);
    }
  }
}

}  // namespace

std::vector<DominoTableau> enumerate_standard(int rank, int n) {
  std::vector<DominoTableau> out;
  extend(DominoTableau(rank), staircase(rank), 1, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace domino
