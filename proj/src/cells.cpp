#include "domino/cells.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "domino/cycles.hpp"

namespace domino {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

CellPartition canonical(CellKind kind, int n, int rank, std::vector<std::vector<SignedPermutation>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return {kind, n, rank, std::move(blocks)};
}

CellPartition from_roots(CellKind kind, const CellTable& table, UnionFind& uf) {
  std::map<std::size_t, std::vector<SignedPermutation>> groups;
  for (std::size_t i = 0; i < table.elements.size(); ++i) groups[uf.find(i)].push_back(table.elements[i]);
  std::vector<std::vector<SignedPermutation>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return canonical(kind, table.n, table.rank, std::move(blocks));
}

CellPartition group_by(CellKind kind, const CellTable& table, const std::vector<DominoTableau>& keys) {
  std::map<DominoTableau, std::vector<SignedPermutation>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(table.elements[i]);
  std::vector<std::vector<SignedPermutation>> blocks;
  for (auto& [key, members] : groups) blocks.push_back(std::move(members));
  return canonical(kind, table.n, table.rank, std::move(blocks));
}

std::vector<DominoTableau> lefts(const CellTable& t) {
  std::vector<DominoTableau> out;
  for (const TableauPair& p : t.pairs) out.push_back(p.left);
  return out;
}

std::vector<DominoTableau> rights(const CellTable& t) {
  std::vector<DominoTableau> out;
  for (const TableauPair& p : t.pairs) out.push_back(p.right);
  return out;
}

std::string describe(const DominoTableau& t) {
  std::ostringstream os;
  for (const Domino& d : t.dominos()) os << d.label() << ":" << to_string(d.first()) << to_string(d.second()) << " ";
  return os.str();
}

// First block of `a` not present in `b`, for witnesses.
std::string first_difference(const CellPartition& a, const CellPartition& b) {
  for (const auto& block : a.blocks) {
    if (!std::binary_search(b.blocks.begin(), b.blocks.end(), block)) {
      std::string s = "block {";
      for (std::size_t i = 0; i < block.size(); ++i) s += (i ? " " : "") + format_word(block[i]);
      return s + "} of " + std::string(to_string(a.kind)) + " missing from " + to_string(b.kind);
    }
  }
  return "partitions differ";
}

VerifyReport compare(const std::string& suite, const CellTable& t, const CellPartition& a, const CellPartition& b) {
  VerifyReport report{suite, t.n, t.rank};
  report.check(a.same_blocks(b), [&] {
    return first_difference(a, b) + " (" + std::to_string(a.blocks.size()) + " vs " +
           std::to_string(b.blocks.size()) + " blocks)";
  });
  return report;
}

bool reachable_by_noncore_cycles(const DominoTableau& from, const DominoTableau& to) {
  const std::vector<CycleSet> open = noncore_open_cycles(from);
  if (open.size() > 16) throw std::logic_error("too many non-core open cycles to search");
  for (unsigned mask = 0; mask < (1u << open.size()); ++mask) {
    std::vector<CycleSet> pick;
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (mask >> i & 1u) pick.push_back(open[i]);
    }
    if (move_through_set(from, pick) == to) return true;
  }
  return false;
}

std::set<Square> square_set(const DominoTableau& t) {
  const std::vector<Square> v = t.squares();
  return {v.begin(), v.end()};
}

std::set<Square> core_set(const DominoTableau& t) {
  std::set<Square> out;
  for (int i = 1; i <= static_cast<int>(t.core().size()); ++i) {
    for (int j = 1; j <= t.core()[i - 1]; ++j) out.insert({i, j});
  }
  return out;
}

std::set<Square> symmetric_difference(const std::set<Square>& a, const std::set<Square>& b) {
  std::set<Square> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool classification_holds(const DominoTableau& t, const MoveResult& m) {
  const CycleClass& cls = m.cycle_class;
  const std::set<Square> core_diff = symmetric_difference(core_set(t), core_set(m.tableau));
  const std::set<Square> shape_diff = symmetric_difference(square_set(t), square_set(m.tableau));
  switch (cls.kind) {
    case CycleKind::Closed:
      return core_diff.empty() && shape_diff.empty();
    case CycleKind::OpenNonCore:
      return core_diff.empty() && shape_diff == std::set<Square>{*cls.back, *cls.front};
    case CycleKind::OpenCore:
      return core_diff.size() == 1;
  }
  return false;
}

void check_cycles_of(VerifyReport& report, const DominoTableau& t, const SignedPermutation& w, const char* side) {
  const int r = t.rank();
  const std::string where = format_word(w) + " " + side;
  std::vector<CycleSet> noncore;
  for (const CycleSet& c : cycles(t)) {
    const MoveResult m = move_through(t, c);
    if (m.cycle_class.kind != CycleKind::OpenCore) noncore.push_back(c);

    bool involution = false;
    try {
      involution = move_through(m.tableau, c).tableau == t;
    } catch (const std::exception&) {
    }
    report.check(involution, [&] { return where + ": MT not an involution on cycle at " + std::to_string(c.labels[0]); });

    bool flips = true;
    for (int l : c.labels) flips = flips && is_boxed(t.domino(l), r) != is_boxed(m.tableau.domino(l), r);
    report.check(flips, [&] { return where + ": boxing does not flip on cycle at " + std::to_string(c.labels[0]); });

    report.check(classification_holds(t, m),
                 [&] { return where + ": shape change disagrees with class " + to_string(m.cycle_class.kind); });
  }

  for (std::size_t a = 0; a < noncore.size(); ++a) {
    for (std::size_t b = a + 1; b < noncore.size(); ++b) {
      bool same = false;
      try {
        same = move_through_set(t, {noncore[a], noncore[b]}) == move_through_set(t, {noncore[b], noncore[a]});
      } catch (const std::exception&) {
      }
      report.check(same, [&] { return where + ": moving through two cycles depends on order"; });
    }
  }
  if (noncore.size() > 2) {
    std::vector<CycleSet> reversed(noncore.rbegin(), noncore.rend());
    bool same = false;
    try {
      same = move_through_set(t, noncore) == move_through_set(t, reversed);
    } catch (const std::exception&) {
    }
    report.check(same, [&] { return where + ": moving through all cycles depends on order"; });
  }

  const DominoTableau s = special_form(t);
  report.check(all_corners_empty(s) && special_form(s) == s,
               [&] { return where + ": special form has a full corner or is not idempotent"; });
}

}  // namespace

std::size_t CellTable::index_of(const SignedPermutation& w) const {
  if (w.size() != n) throw DomainError("element of W_" + std::to_string(w.size()) + " looked up in W_" + std::to_string(n));
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::size_t index = 0;
  for (int i = 1; i <= n; ++i) {
    const auto it = std::find(remaining.begin(), remaining.end(), std::abs(w(i)));
    const std::size_t choice = 2 * static_cast<std::size_t>(it - remaining.begin()) + (w(i) < 0 ? 1 : 0);
    remaining.erase(it);
    index += choice * group_order(n - i);
  }
  return index;
}

CellTable build_table(int n, int rank, Kernel kernel, int jobs, int cap) {
  CellTable t;
  t.n = n;
  t.rank = rank;
  t.elements = enumerate_group(n, cap);
  const std::size_t count = t.elements.size();
  t.pairs.resize(count);
  t.special_left.resize(count);
  t.special_right.resize(count);

  auto fill = [&t](std::size_t i) {
    t.pairs[i] = rs_map(t.elements[i], t.rank);
    t.special_left[i] = special_form(t.pairs[i].left);
    t.special_right[i] = special_form(t.pairs[i].right);
  };

  if (kernel == Kernel::Serial) {
    for (std::size_t i = 0; i < count; ++i) fill(i);
    return t;
  }

  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    try {
      fill(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(domino_table_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

const char* to_string(CellKind kind) {
  switch (kind) {
    case CellKind::IrreducibleLeft: return "irreducible-left";
    case CellKind::ReducibleLeft: return "reducible-left";
    case CellKind::IrreducibleRight: return "irreducible-right";
    case CellKind::ReducibleRight: return "reducible-right";
    case CellKind::OperatorComponents: return "operator-components";
  }
  return "?";
}

CellPartition partition_irreducible(const CellTable& table, CellSide side) {
  return side == CellSide::Left ? group_by(CellKind::IrreducibleLeft, table, rights(table))
                                : group_by(CellKind::IrreducibleRight, table, lefts(table));
}

CellPartition partition_reducible(const CellTable& table, CellSide side) {
  return side == CellSide::Left ? group_by(CellKind::ReducibleLeft, table, table.special_right)
                                : group_by(CellKind::ReducibleRight, table, table.special_left);
}

CellPartition operator_components(const CellTable& table) {
  return operator_components(table, lambda_set(table.n, table.rank));
}

CellPartition operator_components(const CellTable& table, const std::vector<OperatorDescriptor>& ops) {
  UnionFind uf(table.elements.size());
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    for (const OperatorDescriptor& op : ops) {
      if (applicable(op, table.elements[i])) uf.unite(i, table.index_of(apply(op, table.elements[i])));
    }
  }
  return from_roots(CellKind::OperatorComponents, table, uf);
}

CellPartition join(const CellPartition& a, const CellPartition& b, CellKind kind) {
  std::unordered_map<SignedPermutation, std::size_t, SignedPermutationHash> index;
  std::vector<SignedPermutation> members;
  for (const auto& block : a.blocks) {
    for (const SignedPermutation& w : block) {
      index.emplace(w, members.size());
      members.push_back(w);
    }
  }
  UnionFind uf(members.size());
  for (const CellPartition* p : {&a, &b}) {
    for (const auto& block : p->blocks) {
      for (const SignedPermutation& w : block) {
        const auto it = index.find(w);
        if (it == index.end()) throw DomainError("join: partitions cover different sets");
        uf.unite(index.at(block.front()), it->second);
      }
    }
  }
  std::map<std::size_t, std::vector<SignedPermutation>> groups;
  for (std::size_t i = 0; i < members.size(); ++i) groups[uf.find(i)].push_back(members[i]);
  std::vector<std::vector<SignedPermutation>> blocks;
  for (auto& [root, block] : groups) blocks.push_back(std::move(block));
  return canonical(kind, a.n, a.rank, std::move(blocks));
}

std::vector<OperatorEdge> operator_edges(int n, int rank, int cap) {
  std::vector<OperatorEdge> out;
  CellTable index_only;
  index_only.n = n;
  const std::vector<SignedPermutation> elements = enumerate_group(n, cap);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const OperatorDescriptor& op : lambda_set(n, rank)) {
      if (!applicable(op, elements[i])) continue;
      SignedPermutation v = apply(op, elements[i]);
      if (index_only.index_of(v) > i) out.push_back({elements[i], std::move(v), op});
    }
  }
  return out;
}

void VerifyReport::check(bool ok, const std::function<std::string()>& witness) {
  ++checked;
  if (ok) return;
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness());
}

VerifyReport verify_stability(const CellTable& table) {
  VerifyReport report{"stability", table.n, table.rank};
  const int r = table.rank;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    const SignedPermutation& w = table.elements[i];
    for (const OperatorDescriptor& op : lambda_set(table.n, r)) {
      if (!applicable(op, w)) continue;
      const std::size_t j = table.index_of(apply(op, w));
      const auto tag = [&] { return to_string(op) + " on " + format_word(w); };
      report.check(table.special_left[i] == table.special_left[j], [&] { return tag() + ": S(T1) changes"; });

      const bool exact = op.kind == OperatorDescriptor::Kind::Knuth ||
                         (op.kind == OperatorDescriptor::Kind::InSwap && op.index <= r) ||
                         (op.kind == OperatorDescriptor::Kind::SignChange && op.index == r + 1);
      if (exact) {
        report.check(table.pairs[i].left == table.pairs[j].left, [&] { return tag() + ": T1 changes"; });
      } else {
        report.check(reachable_by_noncore_cycles(table.pairs[i].left, table.pairs[j].left),
                     [&] { return tag() + ": T1 not reached through non-core open cycles"; });
      }
    }
  }
  return report;
}

VerifyReport verify_generation(const CellTable& table) {
  return compare("generation", table, operator_components(table), partition_reducible(table, CellSide::Right));
}

VerifyReport verify_refinement(const CellTable& table, const CellTable& next) {
  if (next.n != table.n || next.rank != table.rank + 1) throw DomainError("refinement needs the rank r+1 table");
  const CellPartition joined = join(partition_irreducible(table, CellSide::Left),
                                    partition_irreducible(next, CellSide::Left), CellKind::ReducibleLeft);
  return compare("refinement", table, joined, partition_reducible(table, CellSide::Left));
}

VerifyReport verify_parabolic(const CellTable& big, const CellTable& small) {
  if (small.rank != big.rank || small.n > big.n) throw DomainError("parabolic needs W_m inside W_n at one rank");
  VerifyReport report{"parabolic", big.n, big.rank, small.n};
  // Cells sharing T1 are carried along by x w'; cells sharing T2 by the
  // inverse product w' x^{-1}. Both the exact and the special-form versions.
  struct Variant {
    CellPartition cells;
    bool left;
    bool reducible;
  };
  const std::vector<Variant> variants = {
      {partition_irreducible(small, CellSide::Right), false, false},
      {partition_reducible(small, CellSide::Right), false, true},
      {partition_irreducible(small, CellSide::Left), true, false},
      {partition_reducible(small, CellSide::Left), true, true},
  };
  const auto key = [&](const Variant& v, std::size_t i) -> const DominoTableau& {
    if (v.left) return v.reducible ? big.special_right[i] : big.pairs[i].right;
    return v.reducible ? big.special_left[i] : big.pairs[i].left;
  };
  for (const SignedPermutation& x : coset_representatives(big.n, small.n)) {
    const SignedPermutation x_inv = inverse(x);
    for (const Variant& v : variants) {
      const auto lift = [&](const SignedPermutation& w) {
        return big.index_of(v.left ? compose(embed(w, big.n), x_inv) : compose(x, embed(w, big.n)));
      };
      for (const auto& block : v.cells.blocks) {
        const std::size_t first = lift(block.front());
        for (const SignedPermutation& w : block) {
          report.check(key(v, first) == key(v, lift(w)), [&] {
            return "x=" + format_word(x) + ": " + format_word(block.front()) + " and " + format_word(w) +
                   " separate in W_n (" + to_string(v.cells.kind) + ")";
          });
        }
      }
    }
  }
  return report;
}

VerifyReport verify_bijectivity(const CellTable& table) {
  VerifyReport report{"bijectivity", table.n, table.rank};
  std::set<TableauPair> seen;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    const SignedPermutation& w = table.elements[i];
    bool round_trip = false;
    try {
      round_trip = rs_inverse(table.pairs[i]) == w;
    } catch (const std::exception&) {
    }
    report.check(round_trip, [&] { return format_word(w) + ": rs_inverse(rs_map(w)) != w"; });
    report.check(seen.insert(table.pairs[i]).second, [&] { return format_word(w) + ": pair repeated"; });
  }
  std::map<Partition, std::size_t> per_shape;
  for (const DominoTableau& t : enumerate_standard(table.rank, table.n)) ++per_shape[t.shape()];
  std::size_t pairs = 0;
  for (const auto& [shape, count] : per_shape) pairs += count * count;
  report.check(pairs == table.elements.size(), [&] {
    return std::to_string(pairs) + " same-shape pairs for " + std::to_string(table.elements.size()) + " elements";
  });
  return report;
}

VerifyReport verify_asymptotic(const CellTable& table, const CellTable& next) {
  if (table.rank < table.n - 1) throw DomainError("asymptotic suite needs rank >= n-1");
  if (next.n != table.n || next.rank != table.rank + 1) throw DomainError("asymptotic suite needs the rank r+1 table");
  VerifyReport report{"asymptotic", table.n, table.rank};
  for (CellSide side : {CellSide::Left, CellSide::Right}) {
    const CellPartition irr = partition_irreducible(table, side);
    const CellPartition red = partition_reducible(table, side);
    report.check(irr.same_blocks(red), [&] { return first_difference(irr, red); });
    const CellPartition later = partition_irreducible(next, side);
    report.check(irr.same_blocks(later), [&] { return "rank " + std::to_string(next.rank) + ": " + first_difference(irr, later); });
  }
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    for (const DominoTableau* t : {&table.pairs[i].left, &table.pairs[i].right}) {
      report.check(noncore_open_cycles(*t).empty(),
                   [&] { return format_word(table.elements[i]) + ": non-core open cycle in " + describe(*t); });
    }
  }
  return report;
}

VerifyReport verify_cycles(const CellTable& table) {
  VerifyReport report{"cycles", table.n, table.rank};
  const int r = table.rank;
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    const SignedPermutation& w = table.elements[i];
    const TableauPair& p = table.pairs[i];
    check_cycles_of(report, p.left, w, "T1");
    check_cycles_of(report, p.right, w, "T2");

    for (int k = 1; k <= table.n; ++k) {
      for (Side side : {Side::Left, Side::Right}) {
        bool ok = false;
        try {
          const TableauPair q = move_through_pair(p, extended_cycle(p, k, side));
          const ValidateOptions loose{.require_standard = true, .allow_core_change = true};
          ok = !validate(q.left, loose) && !validate(q.right, loose);
        } catch (const std::exception&) {
        }
        report.check(ok, [&] { return format_word(w) + ": extended cycle through " + std::to_string(k) + " breaks the pair"; });
      }
    }

    if (r + 2 <= table.n && in_applicable(w, r + 1)) {
      bool ok = true;
      std::string why;
      try {
        trace_in_swap(p, r + 1);
      } catch (const std::logic_error& e) {
        ok = false;
        why = e.what();
      }
      report.check(ok, [&] { return format_word(w) + ": " + why; });
    }
  }
  return report;
}

VerifyReport verify_operators(const CellTable& table) {
  VerifyReport report{"operators", table.n, table.rank};
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    const SignedPermutation& w = table.elements[i];
    for (const OperatorDescriptor& op : lambda_set(table.n, table.rank)) {
      if (!applicable(op, w)) continue;
      const std::size_t j = table.index_of(apply(op, w));
      bool ok = false;
      std::string why = "disagrees with the insertion oracle";
      try {
        const TableauPair there = apply_op_tableau(op, table.pairs[i]);
        ok = there == table.pairs[j] && apply_op_tableau(op, there) == table.pairs[i];
      } catch (const std::exception& e) {
        why = e.what();
      }
      report.check(ok, [&] { return to_string(op) + " on " + format_word(w) + ": " + why; });
    }
  }
  return report;
}

}  // namespace domino
