// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "domino/cells.hpp"
#include "support.hpp"

using namespace domino;

namespace {

std::map<std::pair<int, int>, CellTable> tables;

const CellTable& table(int n, int rank) {
  auto it = tables.find({n, rank});
  if (it == tables.end()) it = tables.emplace(std::make_pair(n, rank), build_table(n, rank)).first;
  return it->second;
}

// Runs `suite` over the grid and folds the reports.
std::string sweep(int max_n, int max_rank, const std::function<VerifyReport(int, int)>& suite, bool& ok) {
  long checked = 0, violations = 0;
  std::string first;
  for (int n = 0; n <= max_n; ++n) {
    for (int rank = 0; rank <= max_rank; ++rank) {
      const VerifyReport r = suite(n, rank);
      checked += r.checked;
      violations += r.violations;
      if (!r.passed() && first.empty()) {
        first = " first failure n=" + std::to_string(n) + " r=" + std::to_string(rank);
        if (!r.witnesses.empty()) first += ": " + r.witnesses.front();
      }
    }
  }
  ok = ok && violations == 0;
  return "checked=" + std::to_string(checked) + " violations=" + std::to_string(violations) + first;
}

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail = "") {
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what, detail.empty() ? "" : " | ",
              detail.c_str());
}

void worked_examples() {
  const SignedPermutation w = parse_word("4,-3,-2,1");
  const DominoTableau golden = test::running_example();
  const TableauPair p = rs_map(w, 2);
  {
    const TableauPair sc = apply_op_tableau(OperatorDescriptor::sign_change(3), p);
    const DominoTableau right = test::make(2, {{1, 3, 1, 4, 1}, {2, 2, 2, 3, 2}, {3, 1, 3, 2, 3}, {4, 1, 4, 2, 4}});
    const SignedPermutation v = apply(OperatorDescriptor::sign_change(3), w);
    const bool ok = p.left == golden && p.right == golden && sc.left == golden && sc.right == right &&
                    format_word(v) == "-4,-3,-2,1" && rs_map(v, 2) == sc;
    report(1, "rank-2 tableaux of 4,-3,-2,1 and its sign change", ok, format_word(v));
  }
  {
    const InSwapTrace trace = trace_in_swap(p, 3);
    const SignedPermutation v = apply(OperatorDescriptor::in_swap(3), w);
    const DominoTableau left = test::make(2, {{1, 1, 3, 1, 4}, {2, 3, 1, 4, 1}, {3, 2, 2, 3, 2}, {4, 2, 3, 3, 3}});
    const DominoTableau right = test::make(2, {{1, 1, 3, 1, 4}, {2, 3, 1, 4, 1}, {3, 2, 2, 2, 3}, {4, 3, 2, 3, 3}});
    const ExtendedCyclePair ext = extended_cycle(*trace.staged, 4, Side::Right);
    const bool ok = format_word(v) == "4,-3,1,-2" && !trace.sparse && trace.result == rs_map(v, 2) &&
                    trace.result.left == left && trace.result.right == right &&
                    ext.in_left == std::vector<int>{4} && ext.in_right == std::vector<int>{4};
    report(2, "InSwap(3) with the extended cycle through {4}", ok, format_word(v));
  }
}

}  // namespace

int main() {
  worked_examples();

  bool ok = true;
  std::string d = sweep(4, 5, [](int n, int r) { return verify_bijectivity(table(n, r)); }, ok);
  report(3, "bijectivity for n<=4, r<=5", ok, d);

  ok = true;
  d = sweep(4, 3, [](int n, int r) { return verify_stability(table(n, r)); }, ok);
  report(4, "stability of S(T1) and exact T1 preservation for n<=4, r<=3", ok, d);

  ok = true;
  d = sweep(4, 3, [](int n, int r) { return verify_generation(table(n, r)); }, ok);
  d += "; n=5 " + sweep(0, 2, [](int, int r) { return verify_generation(table(5, r)); }, ok);
  report(5, "operator components equal reducible right cells (n<=4 r<=3, n=5 r<=2)", ok, d);

  ok = true;
  d = sweep(4, 3, [](int n, int r) { return verify_refinement(table(n, r), table(n, r + 1)); }, ok);
  report(6, "join of ranks r and r+1 equals reducible left cells for n<=4, r<=3", ok, d);

  ok = true;
  d = sweep(4, 0, [](int n, int) {
    const int r = n == 0 ? 0 : n - 1;
    VerifyReport total = verify_asymptotic(table(n, r), table(n, r + 1));
    const VerifyReport beyond = verify_asymptotic(table(n, r + 1), table(n, r + 2));
    total.checked += beyond.checked;
    total.violations += beyond.violations;
    return total;
  }, ok);
  report(7, "asymptotic ranks r>=n-1 for n<=4", ok, d);

  ok = true;
  d = sweep(4, 4, [](int n, int r) { return verify_cycles(table(n, r)); }, ok);
  report(8, "moving-through properties for n<=4, r<=4", ok, d);

  ok = true;
  d = sweep(4, 3, [](int n, int r) { return verify_operators(table(n, r)); }, ok);
  report(9, "tableau actions agree with insertion for n<=4, r<=3", ok, d);

  ok = true;
  d = sweep(4, 3, [](int n, int r) {
    VerifyReport total("parabolic", n, r);
    for (int m = 0; m <= n; ++m) {
      const VerifyReport one = verify_parabolic(table(n, r), table(m, r));
      total.checked += one.checked;
      total.violations += one.violations;
      total.witnesses.insert(total.witnesses.end(), one.witnesses.begin(), one.witnesses.end());
    }
    return total;
  }, ok);
  report(10, "parabolic restriction for n<=4, m<=n, r<=3", ok, d);

  return failures == 0 ? 0 : 1;
}
