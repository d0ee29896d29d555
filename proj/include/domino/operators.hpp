#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domino/cycles.hpp"
#include "domino/insertion.hpp"
#include "domino/signed_perm.hpp"

namespace domino {

/// One generator of Lambda^{r+1}.
///   Knuth(j):      the T_{ab}/T_{ba} pair acting on positions j, j+1, j+2;
///   InSwap(k):     swaps w(k) and w(k+1) when their signs differ;
///   SignChange(k): flips the sign of w(1) when |w(1)| > ... > |w(k+1)|.
struct OperatorDescriptor {
  enum class Kind { Knuth, InSwap, SignChange };
  Kind kind;
  int index;

  static OperatorDescriptor knuth(int j) { return {Kind::Knuth, j}; }
  static OperatorDescriptor in_swap(int k) { return {Kind::InSwap, k}; }
  static OperatorDescriptor sign_change(int k) { return {Kind::SignChange, k}; }

  auto operator<=>(const OperatorDescriptor&) const = default;
  bool operator==(const OperatorDescriptor&) const = default;
};

/// "knuth(2)", "in(3)", "sc(3)".
std::string to_string(const OperatorDescriptor& op);
/// Inverse of to_string. Throws DomainError on malformed text.
OperatorDescriptor parse_operator(std::string_view text);

/// Throws DomainError unless the index fits W_n.
void check_index(const OperatorDescriptor& op, int n);

bool knuth_applicable(const SignedPermutation& w, int j);
SignedPermutation apply_knuth(const SignedPermutation& w, int j);
bool in_applicable(const SignedPermutation& w, int k);
SignedPermutation apply_in(const SignedPermutation& w, int k);
bool sc_applicable(const SignedPermutation& w, int k);
SignedPermutation apply_sc(const SignedPermutation& w, int k);

/// Dispatch on the descriptor. `applicable` throws DomainError on a bad
/// index; `apply` also throws when w lies outside the domain.
bool applicable(const OperatorDescriptor& op, const SignedPermutation& w);
SignedPermutation apply(const OperatorDescriptor& op, const SignedPermutation& w);

/// Knuth(1..n-2), InSwap(1..min(r+1, n-1)), and SignChange(r+1) when r+2 <= n.
std::vector<OperatorDescriptor> lambda_set(int n, int rank);

/// k lies below l: every row of domino k is below every row of domino l.
bool lies_below(const DominoTableau& t, int k, int l);

/// Configurations of dominos k and k+1 in T2 for InSwap(r+1):
///   E0 two verticals side by side, E1 two horizontals stacked,
///   TildeE0 vertical k with horizontal k+1 against its top square,
///   TildeE1 horizontal k with vertical k+1 under its left square.
enum class InConfig { E0, E1, TildeE0, TildeE1 };

const char* to_string(InConfig c);

/// Every step of the tableau action of InSwap(k) on p. When `sparse` holds
/// (k <= r, or T2(r+2) has an empty square on the diagonal just outside the
/// core) only labels are swapped and the remaining fields stay empty.
/// Otherwise `cycle` is the extended cycle through r+2 on the right, taken
/// in `staged` (p itself for E~, p with E flipped for E), and `moved` is
/// `staged` after moving through it.
struct InSwapTrace {
  bool sparse = true;
  std::optional<InConfig> config;
  std::optional<TableauPair> staged;
  ExtendedCycleDetail cycle;
  std::optional<TableauPair> moved;
  TableauPair result;
};

/// Throws DomainError for k > r+1 and std::logic_error if the extended
/// cycle contains a core open cycle.
InSwapTrace trace_in_swap(const TableauPair& p, int k);

/// The action of op on G_r(w), computed on the tableaux themselves:
///   Knuth:      swap the F_i/F~_i configuration, or else the one label swap
///               (j,j+1) or (j+1,j+2) that flips both descents of T2;
///   InSwap(k):  swap labels k, k+1 in T2 when k <= r or T2(r+2) is sparse,
///               otherwise exchange E_0/E_1 and move through the extended
///               cycle through r+2 (before or after, per configuration);
///   SignChange: exchange T2(r+2) for the other form of the same shape.
/// Only InSwap(k <= r+1) and SignChange(r+1) have a tableau description.
/// Throws DomainError when rs_inverse(p) is outside the domain of op or op
/// has no tableau description at this rank; std::logic_error when an
/// internal assertion (uniqueness of the Knuth swap, no core cycles in the
/// InSwap extended cycle) fails.
TableauPair apply_op_tableau(const OperatorDescriptor& op, const TableauPair& p);

}  // namespace domino
