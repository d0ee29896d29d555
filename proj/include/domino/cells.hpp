#pragma once

#include <functional>
#include <string>
#include <vector>

#include "domino/insertion.hpp"
#include "domino/operators.hpp"
#include "domino/signed_perm.hpp"

namespace domino {

inline constexpr int kDefaultVerifyCap = 5;

enum class Kernel { Serial, Parallel };

/// G_r(w) and the special forms of both tableaux for every w in W_n, in
/// enumeration order.
struct CellTable {
  int n = 0;
  int rank = 0;
  std::vector<SignedPermutation> elements;
  std::vector<TableauPair> pairs;
  std::vector<DominoTableau> special_left;   // S(T1)
  std::vector<DominoTableau> special_right;  // S(T2)

  /// Index of w in `elements`. Throws DomainError if w has the wrong size.
  std::size_t index_of(const SignedPermutation& w) const;
};

/// `jobs` <= 0 leaves the thread count to OpenMP. The serial kernel is the
/// reference; both produce identical tables.
CellTable build_table(int n, int rank, Kernel kernel = Kernel::Parallel, int jobs = 0,
                      int cap = kDefaultVerifyCap);

enum class CellKind { IrreducibleLeft, ReducibleLeft, IrreducibleRight, ReducibleRight, OperatorComponents };
enum class CellSide { Left, Right };

const char* to_string(CellKind kind);

/// Blocks are sorted internally and ordered by their smallest member, so two
/// partitions of the same set are equal iff their blocks are.
struct CellPartition {
  CellKind kind;
  int n = 0;
  int rank = 0;
  std::vector<std::vector<SignedPermutation>> blocks;

  bool same_blocks(const CellPartition& other) const { return blocks == other.blocks; }
};

/// Left cells group by T2 (or S(T2)), right cells by T1 (or S(T1)).
CellPartition partition_irreducible(const CellTable& table, CellSide side);
CellPartition partition_reducible(const CellTable& table, CellSide side);
/// Components of the graph with edges w -- op(w), op in lambda_set(n, r).
CellPartition operator_components(const CellTable& table);
CellPartition operator_components(const CellTable& table, const std::vector<OperatorDescriptor>& ops);

/// Finest partition coarser than both (transitive closure of the union).
CellPartition join(const CellPartition& a, const CellPartition& b, CellKind kind);

struct OperatorEdge {
  SignedPermutation from;
  SignedPermutation to;
  OperatorDescriptor op;
};
/// One edge per in-domain (op, w) with w < op(w), in enumeration order.
std::vector<OperatorEdge> operator_edges(int n, int rank, int cap = kDefaultVerifyCap);

/// Outcome of one suite at one (n, r[, m]). Witnesses are capped.
struct VerifyReport {
  VerifyReport(std::string suite_name, int n_, int rank_, int m_ = -1)
      : suite(std::move(suite_name)), n(n_), rank(rank_), m(m_) {}

  std::string suite;
  int n = 0;
  int rank = 0;
  int m = -1;
  long checked = 0;
  long violations = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return violations == 0; }
  void check(bool ok, const std::function<std::string()>& witness);
};

/// S(T1) preserved by every operator; T1 exactly preserved by Knuth,
/// InSwap(k <= r) and SignChange(r+1); InSwap(r+1) moves T1 through a set of
/// non-core open cycles.
VerifyReport verify_stability(const CellTable& table);
/// Operator components equal the reducible right partition.
VerifyReport verify_generation(const CellTable& table);
/// The join of the same-T2 relations at ranks r and r+1 equals the
/// reducible left partition at rank r. `next` is the rank r+1 table.
VerifyReport verify_refinement(const CellTable& table, const CellTable& next);
/// For every x in X_m^n: x w' and x v' share T1 (or S(T1)) in W_n whenever
/// w', v' do in W_m, and w' x^{-1}, v' x^{-1} share T2 (or S(T2)) whenever
/// w', v' do. `small` is the W_m table at the same rank.
VerifyReport verify_parabolic(const CellTable& big, const CellTable& small);
/// rs_inverse o rs_map = id, and the number of same-shape pairs is |W_n|.
VerifyReport verify_bijectivity(const CellTable& table);
/// For r >= n-1: reducible equals irreducible on both sides, no non-core
/// open cycles. `next` is the rank r+1 table, whose partitions must agree.
VerifyReport verify_asymptotic(const CellTable& table, const CellTable& next);
/// Moving-through calculus over every tableau of every G_r(w).
VerifyReport verify_cycles(const CellTable& table);
/// apply_op_tableau agrees with rs_map o apply o rs_inverse.
VerifyReport verify_operators(const CellTable& table);

}  // namespace domino
