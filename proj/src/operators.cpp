#include "domino/operators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "domino/cycles.hpp"

namespace domino {

namespace {

Domino horizontal(int label, int row, int col) { return Domino(label, {row, col}, {row, col + 1}); }
Domino vertical(int label, int row, int col) { return Domino(label, {row, col}, {row + 1, col}); }

int min_row(const Domino& d) { return d.first().row; }
int max_row(const Domino& d) { return d.second().row; }

DominoTableau replace(const DominoTableau& t, const std::vector<Domino>& fresh) {
  std::vector<Domino> ds;
  for (const Domino& d : t.dominos()) {
    const bool swapped = std::any_of(fresh.begin(), fresh.end(),
                                     [&](const Domino& f) { return f.label() == d.label(); });
    if (!swapped) ds.push_back(d);
  }
  ds.insert(ds.end(), fresh.begin(), fresh.end());
  return t.with_dominos(std::move(ds));
}

DominoTableau swap_labels(const DominoTableau& t, int a, int b) {
  return replace(t, {t.domino(a).relabeled(b), t.domino(b).relabeled(a)});
}

std::string op_error(const OperatorDescriptor& op, const std::string& what) {
  return to_string(op) + ": " + what;
}

// --- Knuth -----------------------------------------------------------------

// The F_i(j) <-> F~_i(j) exchange, when one of the four configurations occurs.
std::optional<DominoTableau> knuth_configuration(const DominoTableau& t, int j) {
  const int k = j + 1, l = j + 2;
  const Domino& dj = t.domino(j);
  const Domino& dk = t.domino(k);
  const Domino& dl = t.domino(l);
  const int a = dj.first().row, b = dj.first().col;

  if (dj.vertical() && dk == horizontal(k, a, b + 1) && dl == horizontal(l, a + 1, b + 1)) {
    return replace(t, {horizontal(j, a, b), vertical(l, a, b + 2), horizontal(k, a + 1, b)});
  }
  if (dj.horizontal() && dl == vertical(l, a, b + 2) && dk == horizontal(k, a + 1, b)) {
    return replace(t, {vertical(j, a, b), horizontal(k, a, b + 1), horizontal(l, a + 1, b + 1)});
  }
  if (dj.horizontal() && dk == vertical(k, a + 1, b) && dl == vertical(l, a + 1, b + 1)) {
    return replace(t, {vertical(j, a, b), vertical(k, a, b + 1), horizontal(l, a + 2, b)});
  }
  if (dj.vertical() && dk == vertical(k, a, b + 1) && dl == horizontal(l, a + 2, b)) {
    return replace(t, {horizontal(j, a, b), vertical(k, a + 1, b), vertical(l, a + 1, b + 1)});
  }
  return std::nullopt;
}

DominoTableau knuth_right(const DominoTableau& t, int j) {
  const bool first = lies_below(t, j + 1, j);
  const bool second = lies_below(t, j + 2, j + 1);
  if (first == second) throw DomainError("knuth(" + std::to_string(j) + "): right tableau outside the domain");

  if (auto swapped = knuth_configuration(t, j)) return *swapped;

  std::vector<DominoTableau> found;
  for (int a : {j, j + 1}) {
    DominoTableau cand = swap_labels(t, a, a + 1);
    if (validate(cand)) continue;
    if (lies_below(cand, j + 1, j) != first && lies_below(cand, j + 2, j + 1) != second) {
      found.push_back(std::move(cand));
    }
  }
  if (found.size() != 1) {
    throw std::logic_error("knuth(" + std::to_string(j) + "): " + std::to_string(found.size()) +
                           " label swaps qualify, expected exactly one");
  }
  return found.front();
}

// --- InSwap ----------------------------------------------------------------

std::optional<InConfig> in_configuration(const DominoTableau& t, int k) {
  const Domino& dk = t.domino(k);
  const Domino& dl = t.domino(k + 1);
  const int a = dk.first().row, b = dk.first().col;
  if (dk.vertical() && dl == vertical(k + 1, a, b + 1)) return InConfig::E0;
  if (dk.horizontal() && dl == horizontal(k + 1, a + 1, b)) return InConfig::E1;
  if (dk.vertical() && dl == horizontal(k + 1, a, b + 1)) return InConfig::TildeE0;
  if (dk.horizontal() && dl == vertical(k + 1, a + 1, b)) return InConfig::TildeE1;
  return std::nullopt;
}

// E_i -> E_{1-i} within the same 2x2 block.
DominoTableau flip_e(const DominoTableau& t, int k) {
  const Domino& dk = t.domino(k);
  const int a = dk.first().row, b = dk.first().col;
  const std::optional<InConfig> c = in_configuration(t, k);
  if (c == InConfig::E0) return replace(t, {horizontal(k, a, b), horizontal(k + 1, a + 1, b)});
  if (c == InConfig::E1) return replace(t, {vertical(k, a, b), vertical(k + 1, a, b + 1)});
  throw std::logic_error("in: expected an E_0 or E_1 configuration");
}

void require_no_core_cycles(const TableauPair& p, const ExtendedCycleDetail& detail, int label) {
  for (const CycleSet& c : detail.own) {
    if (classify(p.right, c).kind == CycleKind::OpenCore) {
      throw std::logic_error("in: extended cycle through " + std::to_string(label) + " contains a core open cycle");
    }
  }
  for (const CycleSet& c : detail.partner) {
    if (classify(p.left, c).kind == CycleKind::OpenCore) {
      throw std::logic_error("in: extended cycle through " + std::to_string(label) + " contains a core open cycle");
    }
  }
}

// --- SignChange ------------------------------------------------------------

// Recording tableau of (e_1 (m), e_2 (m-1), ..., e_m 1) for the sign mask.
DominoTableau canonical_recording(int rank, int m, unsigned mask) {
  std::vector<int> word(m);
  for (int i = 0; i < m; ++i) word[i] = ((mask >> i) & 1u ? -1 : 1) * (m - i);
  return rs_map(SignedPermutation(std::move(word)), rank).right;
}

// T2(r+2) only depends on the signs of the first r+2 entries, which are
// decreasing in absolute value; flipping the first sign picks the other form.
DominoTableau sc_right(const DominoTableau& t) {
  const int r = t.rank(), m = r + 2;
  const DominoTableau head = subtableau(t, m);
  std::optional<DominoTableau> result;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (canonical_recording(r, m, mask) != head) continue;
    DominoTableau other = canonical_recording(r, m, mask ^ 1u);
    if (result && *result != other) throw std::logic_error("sc: ambiguous partner form of T2(r+2)");
    result = std::move(other);
  }
  if (!result) throw DomainError("sc: T2(r+2) is not the recording tableau of a decreasing word");
  return replace(t, result->dominos());
}

}  // namespace

std::string to_string(const OperatorDescriptor& op) {
  switch (op.kind) {
    case OperatorDescriptor::Kind::Knuth: return "knuth(" + std::to_string(op.index) + ")";
    case OperatorDescriptor::Kind::InSwap: return "in(" + std::to_string(op.index) + ")";
    case OperatorDescriptor::Kind::SignChange: return "sc(" + std::to_string(op.index) + ")";
  }
  return "?";
}

OperatorDescriptor parse_operator(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw DomainError("malformed operator '" + std::string(text) + "'");
  }
  const std::string_view name = text.substr(0, open);
  const std::string_view digits = text.substr(open + 1, text.size() - open - 2);
  int index = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
    throw DomainError("malformed operator index in '" + std::string(text) + "'");
  }
  if (index < 1) throw DomainError("operator index must be positive in '" + std::string(text) + "'");
  if (name == "knuth") return OperatorDescriptor::knuth(index);
  if (name == "in") return OperatorDescriptor::in_swap(index);
  if (name == "sc") return OperatorDescriptor::sign_change(index);
  throw DomainError("unknown operator '" + std::string(name) + "'");
}

void check_index(const OperatorDescriptor& op, int n) {
  const int i = op.index;
  bool ok = false;
  switch (op.kind) {
    case OperatorDescriptor::Kind::Knuth: ok = i >= 1 && i <= n - 2; break;
    case OperatorDescriptor::Kind::InSwap: ok = i >= 1 && i <= n - 1; break;
    case OperatorDescriptor::Kind::SignChange: ok = i >= 1 && i + 1 <= n; break;
  }
  if (!ok) throw DomainError(op_error(op, "index out of range for n=" + std::to_string(n)));
}

bool knuth_applicable(const SignedPermutation& w, int j) {
  check_index(OperatorDescriptor::knuth(j), w.size());
  const int a = w(j), b = w(j + 1), c = w(j + 2);
  return (b > a && b > c) || (b < a && b < c);
}

SignedPermutation apply_knuth(const SignedPermutation& w, int j) {
  if (!knuth_applicable(w, j)) throw DomainError("knuth(" + std::to_string(j) + ") not applicable");
  std::vector<int> e(w.entries().begin(), w.entries().end());
  auto first = e.begin() + (j - 1), last = first + 3;
  std::iter_swap(std::min_element(first, last), std::max_element(first, last));
  return SignedPermutation(std::move(e));
}

bool in_applicable(const SignedPermutation& w, int k) {
  check_index(OperatorDescriptor::in_swap(k), w.size());
  return (w(k) > 0) != (w(k + 1) > 0);
}

SignedPermutation apply_in(const SignedPermutation& w, int k) {
  if (!in_applicable(w, k)) throw DomainError("in(" + std::to_string(k) + ") not applicable");
  return right_mult_s(w, k);
}

bool sc_applicable(const SignedPermutation& w, int k) {
  check_index(OperatorDescriptor::sign_change(k), w.size());
  for (int i = 1; i <= k; ++i) {
    if (std::abs(w(i)) <= std::abs(w(i + 1))) return false;
  }
  return true;
}

SignedPermutation apply_sc(const SignedPermutation& w, int k) {
  if (!sc_applicable(w, k)) throw DomainError("sc(" + std::to_string(k) + ") not applicable");
  return right_mult_t(w, 1);
}

bool applicable(const OperatorDescriptor& op, const SignedPermutation& w) {
  switch (op.kind) {
    case OperatorDescriptor::Kind::Knuth: return knuth_applicable(w, op.index);
    case OperatorDescriptor::Kind::InSwap: return in_applicable(w, op.index);
    case OperatorDescriptor::Kind::SignChange: return sc_applicable(w, op.index);
  }
  return false;
}

SignedPermutation apply(const OperatorDescriptor& op, const SignedPermutation& w) {
  switch (op.kind) {
    case OperatorDescriptor::Kind::Knuth: return apply_knuth(w, op.index);
    case OperatorDescriptor::Kind::InSwap: return apply_in(w, op.index);
    case OperatorDescriptor::Kind::SignChange: return apply_sc(w, op.index);
  }
  throw std::logic_error("unreachable");
}

std::vector<OperatorDescriptor> lambda_set(int n, int rank) {
  std::vector<OperatorDescriptor> out;
  for (int j = 1; j <= n - 2; ++j) out.push_back(OperatorDescriptor::knuth(j));
  for (int i = 1; i <= std::min(rank + 1, n - 1); ++i) out.push_back(OperatorDescriptor::in_swap(i));
  if (rank + 2 <= n) out.push_back(OperatorDescriptor::sign_change(rank + 1));
  return out;
}

const char* to_string(InConfig c) {
  switch (c) {
    case InConfig::E0: return "E0";
    case InConfig::E1: return "E1";
    case InConfig::TildeE0: return "E~0";
    case InConfig::TildeE1: return "E~1";
  }
  return "?";
}

InSwapTrace trace_in_swap(const TableauPair& p, int k) {
  const int r = p.right.rank();
  if (k < 1 || k > r + 1) throw DomainError("in(" + std::to_string(k) + "): no tableau description above rank+1");
  InSwapTrace trace;
  if (k <= r || is_sparse(subtableau(p.right, r + 2))) {
    trace.result = {p.left, swap_labels(p.right, k, k + 1)};
    return trace;
  }
  trace.sparse = false;
  trace.config = in_configuration(p.right, k);
  if (!trace.config) throw std::logic_error("in: no E or E~ configuration at labels r+1, r+2");

  const bool flip_first = *trace.config == InConfig::E0 || *trace.config == InConfig::E1;
  const TableauPair staged = flip_first ? TableauPair{p.left, flip_e(p.right, k)} : p;
  trace.cycle = extended_cycle_detail(staged, k + 1, Side::Right);
  require_no_core_cycles(staged, trace.cycle, k + 1);
  TableauPair moved = move_through_pair(staged, extended_cycle(staged, k + 1, Side::Right));

  trace.staged = staged;
  trace.moved = moved;
  trace.result = flip_first ? moved : TableauPair{moved.left, flip_e(moved.right, k)};
  return trace;
}

bool lies_below(const DominoTableau& t, int k, int l) {
  return min_row(t.domino(k)) > max_row(t.domino(l));
}

TableauPair apply_op_tableau(const OperatorDescriptor& op, const TableauPair& p) {
  const int r = p.right.rank();
  const SignedPermutation w = rs_inverse(p);
  if (!applicable(op, w)) throw DomainError(op_error(op, "not applicable to " + format_word(w)));

  switch (op.kind) {
    case OperatorDescriptor::Kind::Knuth:
      return {p.left, knuth_right(p.right, op.index)};
    case OperatorDescriptor::Kind::InSwap:
      return trace_in_swap(p, op.index).result;
    case OperatorDescriptor::Kind::SignChange:
      if (op.index != r + 1) throw DomainError(op_error(op, "tableau description needs index rank+1"));
      return {p.left, sc_right(p.right)};
  }
  throw std::logic_error("unreachable");
}

}  // namespace domino
