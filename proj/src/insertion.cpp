#include "domino/insertion.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace domino {

namespace {

// Row and column lengths of a growing Young diagram.
class Diagram {
 public:
  explicit Diagram(const Partition& core) : rows_(core) {}

  void add(const Square& s) {
    if (static_cast<int>(rows_.size()) < s.row) rows_.resize(s.row, 0);
    rows_[s.row - 1] = std::max(rows_[s.row - 1], s.col);
  }
  void add(const Domino& d) {
    add(d.first());
    add(d.second());
  }
  int row_length(int i) const {
    return i >= 1 && i <= static_cast<int>(rows_.size()) ? rows_[i - 1] : 0;
  }
  int column_length(int j) const {
    int h = 0;
    while (h < static_cast<int>(rows_.size()) && rows_[h] >= j) ++h;
    return h;
  }

 private:
  Partition rows_;
};

Domino horizontal_at(int label, int row, int col) { return Domino(label, {row, col}, {row, col + 1}); }
Domino vertical_at(int label, int row, int col) { return Domino(label, {row, col}, {row + 1, col}); }

// The two squares of the 2x2 block spanned by a and b that are not in `d`.
Domino block_complement(int label, const Domino& a, const Domino& b, const Domino& d) {
  int top = a.first().row, left = a.first().col;
  for (const Domino* x : {&a, &b}) {
    for (const Square& s : x->cells()) {
      top = std::min(top, s.row);
      left = std::min(left, s.col);
    }
  }
  std::vector<Square> rest;
  for (int i = top; i <= top + 1; ++i) {
    for (int j = left; j <= left + 1; ++j) {
      if (!d.contains({i, j})) rest.push_back({i, j});
    }
  }
  if (rest.size() != 2) throw std::logic_error("dominos do not span a 2x2 block");
  return Domino(label, rest[0], rest[1]);
}

}  // namespace

InsertionStep insert_with_growth(const DominoTableau& t, int value) {
  const int label = std::abs(value);
  if (value == 0) throw DomainError("cannot insert 0");
  if (t.contains_label(label)) throw DomainError("label " + std::to_string(label) + " already present");

  Diagram grown(t.core());
  std::vector<Domino> out;
  out.reserve(t.dominos().size() + 1);
  auto it = t.dominos().begin();
  for (; it != t.dominos().end() && it->label() < label; ++it) {
    out.push_back(*it);
    grown.add(*it);
  }

  Domino fresh = value > 0 ? horizontal_at(label, 1, grown.row_length(1) + 1)
                           : vertical_at(label, grown.column_length(1) + 1, 1);
  out.push_back(fresh);
  grown.add(fresh);

  for (; it != t.dominos().end(); ++it) {
    const Domino& old = *it;
    Domino moved = old;
    switch (old.overlap(fresh)) {
      case 0:
        break;
      case 2:
        if (old.horizontal()) {
          const int row = old.first().row + 1;
          moved = horizontal_at(old.label(), row, grown.row_length(row) + 1);
        } else {
          const int col = old.first().col + 1;
          moved = vertical_at(old.label(), grown.column_length(col) + 1, col);
        }
        fresh = moved;
        break;
      default: {
        moved = block_complement(old.label(), old, fresh, fresh);
        fresh = block_complement(old.label(), old, fresh, old);
        break;
      }
    }
    out.push_back(moved);
    grown.add(moved);
  }
  return {t.with_dominos(std::move(out)), fresh.relabeled(label)};
}

DominoTableau insert_alpha(const DominoTableau& t, int value) { return insert_with_growth(t, value).tableau; }

TableauPair rs_map(const SignedPermutation& w, int rank) {
  DominoTableau left(rank);
  std::vector<Domino> recorded;
  recorded.reserve(w.size());
  for (int k = 1; k <= w.size(); ++k) {
    InsertionStep step = insert_with_growth(left, w(k));
    for (const Square& s : step.added.cells()) {
      if (left.occupied(s) || !step.tableau.occupied(s)) {
        throw std::logic_error("insertion grew the shape by something other than a domino");
      }
    }
    left = std::move(step.tableau);
    recorded.push_back(step.added.relabeled(k));
  }
  return {std::move(left), DominoTableau(rank, std::move(recorded))};
}

ReverseStep reverse_step(const TableauPair& p) {
  if (p.right.size() == 0) throw DomainError("reverse_step on an empty pair");
  const int n = p.right.max_label();
  Domino vacated = p.right.domino(n);
  std::vector<Domino> cur = p.left.dominos();

  for (int idx = static_cast<int>(cur.size()) - 1; idx >= 0; --idx) {
    const Domino now = cur[idx];
    switch (now.overlap(vacated)) {
      case 0:
        break;
      case 2: {
        const bool entered = now.horizontal() ? now.first().row == 1 : now.first().col == 1;
        if (entered) {
          const int value = now.horizontal() ? now.label() : -now.label();
          cur.erase(cur.begin() + idx);
          return {{p.left.with_dominos(std::move(cur)), p.right.without_label(n)}, value};
        }
        Diagram below(p.left.core());
        for (int i = 0; i < idx; ++i) below.add(cur[i]);
        Domino before;
        if (now.horizontal()) {
          const int row = now.first().row - 1;
          before = horizontal_at(now.label(), row, below.row_length(row) - 1);
        } else {
          const int col = now.first().col - 1;
          before = vertical_at(now.label(), below.column_length(col) - 1, col);
        }
        cur[idx] = before;
        vacated = before;
        break;
      }
      default: {
        const Domino before = block_complement(now.label(), now, vacated, vacated);
        vacated = block_complement(now.label(), now, vacated, now);
        cur[idx] = before;
        break;
      }
    }
  }
  throw std::logic_error("reverse_step: no entry point found for the removed domino");
}

std::optional<std::string> validate_pair(const TableauPair& p) {
  if (p.left.rank() != p.right.rank()) return "ranks differ";
  if (auto v = validate(p.left)) return "left: " + v->detail;
  if (auto v = validate(p.right)) return "right: " + v->detail;
  if (p.left.size() != p.right.size()) return "different numbers of dominos";
  if (p.left.shape() != p.right.shape()) return "shapes differ";
  return std::nullopt;
}

SignedPermutation rs_inverse(const TableauPair& p) {
  if (auto problem = validate_pair(p)) throw DomainError("rs_inverse: " + *problem);
  std::vector<int> entries(p.right.size());
  TableauPair cur = p;
  for (int k = p.right.size(); k >= 1; --k) {
    ReverseStep step = reverse_step(cur);
    entries[k - 1] = step.value;
    cur = std::move(step.pair);
  }
  return SignedPermutation(std::move(entries));
}

}  // namespace domino
