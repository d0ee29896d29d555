#include "domino/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace domino {

Domino moved_domino(const DominoTableau& t, int k) {
  const Domino& d = t.domino(k);
  const bool first_fixed = square_kind(d.first(), t.rank()) == SquareKind::Fixed;
  const Square fixed = first_fixed ? d.first() : d.second();
  const Square free = first_fixed ? d.second() : d.first();
  const int i = fixed.row, j = fixed.col;

  // Free half below the fixed square or to its left.
  if (free == Square{i + 1, j} || free == Square{i, j - 1}) {
    return k < t.label_at(i - 1, j + 1) ? Domino(k, {i - 1, j}, fixed) : Domino(k, fixed, {i, j + 1});
  }
  // Free half above the fixed square or to its right.
  return k < t.label_at(i + 1, j - 1) ? Domino(k, {i, j - 1}, fixed) : Domino(k, fixed, {i + 1, j});
}

bool CycleSet::contains(int label) const {
  return std::binary_search(labels.begin(), labels.end(), label);
}

const char* to_string(CycleKind kind) {
  switch (kind) {
    case CycleKind::Closed: return "closed";
    case CycleKind::OpenCore: return "open-core";
    case CycleKind::OpenNonCore: return "open-noncore";
  }
  return "unknown";
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

bool intersects(const Domino& a, const Domino& b) { return a.overlap(b) > 0; }

}  // namespace

std::vector<CycleSet> cycles(const DominoTableau& t) {
  const std::vector<Domino>& ds = t.dominos();
  const int count = static_cast<int>(ds.size());
  std::vector<Domino> moved;
  moved.reserve(count);
  for (const Domino& d : ds) moved.push_back(moved_domino(t, d.label()));

  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a != b && intersects(ds[a], moved[b])) unite(parent, a, b);
    }
  }
  std::vector<CycleSet> out;
  std::vector<int> slot(count, -1);
  for (int a = 0; a < count; ++a) {
    const int root = find_root(parent, a);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].labels.push_back(ds[a].label());
  }
  return out;
}

CycleSet cycle(const DominoTableau& t, int k) {
  t.domino(k);
  for (CycleSet& c : cycles(t)) {
    if (c.contains(k)) return std::move(c);
  }
  throw std::logic_error("label missing from every cycle");
}

namespace {

void require_cycle(const DominoTableau& t, const CycleSet& c) {
  if (c.labels.empty() || !std::is_sorted(c.labels.begin(), c.labels.end()) ||
      cycle(t, c.labels.front()) != c) {
    throw DomainError("label set is not a cycle of the tableau");
  }
}

bool young_after(const std::set<Square>& cells) { return is_young_diagram(cells); }

Partition core_from_cells(const std::set<Square>& cells) {
  Partition rows;
  for (const Square& s : cells) {
    if (static_cast<int>(rows.size()) < s.row) rows.resize(s.row, 0);
    rows[s.row - 1] = std::max(rows[s.row - 1], s.col);
  }
  return rows;
}

}  // namespace

MoveResult move_through(const DominoTableau& t, const CycleSet& c) {
  require_cycle(t, c);

  std::vector<Domino> next;
  std::set<Square> before, after;
  for (const Domino& d : t.dominos()) {
    if (c.contains(d.label())) {
      const Domino m = moved_domino(t, d.label());
      next.push_back(m);
      before.insert(d.cells().begin(), d.cells().end());
      after.insert(m.cells().begin(), m.cells().end());
    } else {
      next.push_back(d);
    }
  }

  std::vector<Square> vacated, added;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(vacated));
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(added));

  std::set<Square> core;
  for (int i = 1; i <= static_cast<int>(t.core().size()); ++i) {
    for (int j = 1; j <= t.core()[i - 1]; ++j) core.insert({i, j});
  }

  CycleClass cls;
  Partition next_core = t.core();
  if (vacated.empty() && added.empty()) {
    cls.kind = CycleKind::Closed;
  } else {
    std::vector<Square> covered_core, outside;
    for (const Square& s : added) (core.count(s) ? covered_core : outside).push_back(s);
    if (!covered_core.empty()) {
      // The core gives up a square to the cycle.
      if (covered_core.size() != 1 || vacated.size() != 1 || !outside.empty()) {
        throw std::logic_error("core open cycle moved more than one square");
      }
      cls = {CycleKind::OpenCore, covered_core.front(), vacated.front()};
      core.erase(covered_core.front());
      next_core = core_from_cells(core);
    } else {
      if (vacated.size() != 1 || outside.size() != 1) {
        throw std::logic_error("open cycle changed more than one square");
      }
      std::set<Square> occupied = core;
      for (const Domino& d : next) occupied.insert(d.cells().begin(), d.cells().end());
      if (young_after(occupied)) {
        cls = {CycleKind::OpenNonCore, vacated.front(), outside.front()};
      } else {
        cls = {CycleKind::OpenCore, vacated.front(), outside.front()};
        core.insert(vacated.front());
        next_core = core_from_cells(core);
      }
    }
  }
  if (!is_young_diagram(core)) throw std::logic_error("moving through broke the core");
  return {DominoTableau(t.rank(), std::move(next_core), std::move(next)), cls};
}

CycleClass classify(const DominoTableau& t, const CycleSet& c) { return move_through(t, c).cycle_class; }

DominoTableau move_through_set(const DominoTableau& t, const std::vector<CycleSet>& set) {
  std::set<int> seen;
  for (const CycleSet& c : set) {
    require_cycle(t, c);
    for (int l : c.labels) {
      if (!seen.insert(l).second) throw DomainError("cycles overlap");
    }
  }
  DominoTableau cur = t;
  for (const CycleSet& c : set) {
    if (cycle(cur, c.labels.front()) != c) {
      throw std::logic_error("a cycle did not survive moving through another one");
    }
    cur = move_through(cur, c).tableau;
  }
  return cur;
}

DominoTableau move_through_labels(const DominoTableau& t, const std::vector<int>& labels) {
  std::set<int> wanted(labels.begin(), labels.end());
  std::vector<CycleSet> chosen;
  for (CycleSet& c : cycles(t)) {
    const auto hits = std::count_if(c.labels.begin(), c.labels.end(), [&](int l) { return wanted.count(l) > 0; });
    if (hits == 0) continue;
    if (hits != static_cast<long>(c.labels.size())) {
      throw DomainError("label set is not a union of cycles");
    }
    for (int l : c.labels) wanted.erase(l);
    chosen.push_back(std::move(c));
  }
  if (!wanted.empty()) throw DomainError("label set names dominos that are not in the tableau");
  return move_through_set(t, chosen);
}

bool is_boxed(const DominoTableau& t, const CycleSet& c) {
  return std::all_of(c.labels.begin(), c.labels.end(),
                     [&](int l) { return is_boxed(t.domino(l), t.rank()); });
}

std::vector<CycleSet> noncore_open_cycles(const DominoTableau& t) {
  std::vector<CycleSet> out;
  for (CycleSet& c : cycles(t)) {
    if (classify(t, c).kind == CycleKind::OpenNonCore) out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct CycleFacts {
  CycleSet cycle;
  CycleClass cls;
  std::set<Square> before;
  std::set<Square> after;
};

std::vector<CycleFacts> facts_of(const DominoTableau& t) {
  std::vector<CycleFacts> out;
  for (CycleSet& c : cycles(t)) {
    CycleFacts f;
    f.cls = classify(t, c);
    for (int l : c.labels) {
      const Domino& d = t.domino(l);
      const Domino m = moved_domino(t, l);
      f.before.insert(d.cells().begin(), d.cells().end());
      f.after.insert(m.cells().begin(), m.cells().end());
    }
    f.cycle = std::move(c);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> flatten(const std::vector<CycleSet>& cs) {
  std::vector<int> out;
  for (const CycleSet& c : cs) out.insert(out.end(), c.labels.begin(), c.labels.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExtendedCycleDetail extended_cycle_detail(const TableauPair& p, int k, Side side, LinkRule rule) {
  const DominoTableau& own = side == Side::Left ? p.left : p.right;
  const DominoTableau& other = side == Side::Left ? p.right : p.left;
  own.domino(k);

  const std::vector<CycleFacts> mine = facts_of(own);
  const std::vector<CycleFacts> theirs = facts_of(other);
  const int count = static_cast<int>(mine.size());
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);

  // For each open partner cycle d, the pairs (c1, c2) it links.
  std::vector<std::vector<std::pair<int, int>>> links(theirs.size());
  for (std::size_t di = 0; di < theirs.size(); ++di) {
    const CycleFacts& d = theirs[di];
    if (!d.cls.open()) continue;
    std::vector<int> tails, heads;
    for (int ci = 0; ci < count; ++ci) {
      const CycleFacts& c = mine[ci];
      const bool tail = rule == LinkRule::SquareOfCycle ? c.before.count(*d.cls.back) > 0
                                                         : (c.cls.open() && *c.cls.back == *d.cls.back);
      if (tail) tails.push_back(ci);
      if (c.after.count(*d.cls.front)) heads.push_back(ci);
    }
    for (int a : tails) {
      for (int b : heads) {
        links[di].push_back({a, b});
        unite(parent, a, b);
      }
    }
  }

  int start = -1;
  for (int ci = 0; ci < count; ++ci) {
    if (mine[ci].cycle.contains(k)) start = ci;
  }
  const int root = find_root(parent, start);

  ExtendedCycleDetail out;
  for (int ci = 0; ci < count; ++ci) {
    if (find_root(parent, ci) == root) out.own.push_back(mine[ci].cycle);
  }
  for (std::size_t di = 0; di < theirs.size(); ++di) {
    for (const auto& [a, b] : links[di]) {
      if (find_root(parent, a) == root || find_root(parent, b) == root) {
        out.partner.push_back(theirs[di].cycle);
        break;
      }
    }
  }
  return out;
}

ExtendedCyclePair extended_cycle(const TableauPair& p, int k, Side side, LinkRule rule) {
  const ExtendedCycleDetail detail = extended_cycle_detail(p, k, side, rule);
  if (side == Side::Left) return {flatten(detail.own), flatten(detail.partner)};
  return {flatten(detail.partner), flatten(detail.own)};
}

TableauPair move_through_pair(const TableauPair& p, const ExtendedCyclePair& b) {
  TableauPair out{move_through_labels(p.left, b.in_left), move_through_labels(p.right, b.in_right)};
  if (out.left.shape() != out.right.shape() || out.left.core() != out.right.core()) {
    throw DomainError("extended cycles do not correspond: result is not same-shape");
  }
  return out;
}

DominoTableau special_form(const DominoTableau& t) {
  DominoTableau cur = t;
  const int limit = (t.size() + 1) * (t.size() + 1);
  for (int step = 0; step <= limit; ++step) {
    bool moved = false;
    for (const CycleSet& c : cycles(cur)) {
      const MoveResult result = move_through(cur, c);
      if (result.cycle_class.kind == CycleKind::OpenNonCore && !is_boxed(cur, c)) {
        cur = result.tableau;
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
  throw std::logic_error("special_form did not converge");
}

bool is_somewhat_special(const DominoTableau& t) {
  for (const CycleSet& c : cycles(t)) {
    if (classify(t, c).kind == CycleKind::OpenNonCore && !is_boxed(t, c)) return false;
  }
  return true;
}

}  // namespace domino
