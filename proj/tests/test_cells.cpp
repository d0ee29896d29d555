#include <doctest.h>

#include <algorithm>
#include <map>

#include "domino/cells.hpp"

using namespace domino;

namespace {

std::vector<std::size_t> block_sizes(const CellPartition& p) {
  std::vector<std::size_t> sizes;
  for (const auto& b : p.blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool same_block(const CellPartition& p, const char* a, const char* b) {
  const SignedPermutation x = parse_word(a), y = parse_word(b);
  for (const auto& block : p.blocks) {
    const bool hx = std::binary_search(block.begin(), block.end(), x);
    const bool hy = std::binary_search(block.begin(), block.end(), y);
    if (hx || hy) return hx && hy;
  }
  return false;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
  for (int rank = 0; rank <= 2; ++rank) {
    const CellTable ref = build_table(4, rank, Kernel::Serial);
    for (int jobs : {1, 2, 3}) {
      const CellTable par = build_table(4, rank, Kernel::Parallel, jobs);
      CHECK(par.elements == ref.elements);
      CHECK(par.pairs == ref.pairs);
      CHECK(par.special_left == ref.special_left);
      CHECK(par.special_right == ref.special_right);
    }
  }
}

TEST_CASE("index_of follows enumeration order") {
  const CellTable t = build_table(3, 1);
  for (std::size_t i = 0; i < t.elements.size(); ++i) CHECK(t.index_of(t.elements[i]) == i);
  CHECK_THROWS_AS(t.index_of(parse_word("1,2")), DomainError);
}

TEST_CASE("block sizes match known cell structures") {
  // Rank 0 in B2: the left cells of the Kazhdan-Lusztig theory for equal parameters.
  CHECK(block_sizes(partition_reducible(build_table(2, 0), CellSide::Left)) == std::vector<std::size_t>{1, 1, 3, 3});
  // Large rank: one block per pair of same-shape tableaux, sized by the bipartition dimension.
  CHECK(block_sizes(partition_irreducible(build_table(2, 2), CellSide::Left)) ==
        std::vector<std::size_t>{1, 1, 1, 1, 2, 2});
  const std::vector<std::size_t> n3 = block_sizes(partition_irreducible(build_table(3, 3), CellSide::Right));
  CHECK(std::count(n3.begin(), n3.end(), 1u) == 4);
  CHECK(std::count(n3.begin(), n3.end(), 2u) == 4);
  CHECK(std::count(n3.begin(), n3.end(), 3u) == 12);
  CHECK(n3.size() == 20);
}

TEST_CASE("degenerate groups") {
  const CellTable zero = build_table(0, 0);
  CHECK(operator_components(zero).blocks.size() == 1);
  CHECK(partition_reducible(zero, CellSide::Left).blocks.size() == 1);
  const CellTable one = build_table(1, 0);
  CHECK(operator_components(one).blocks.size() == 2);
  CHECK(operator_components(build_table(1, 1)).blocks.size() == 2);
}

TEST_CASE("irreducible cells refine reducible ones") {
  for (int rank = 0; rank <= 3; ++rank) {
    const CellTable t = build_table(4, rank);
    for (CellSide side : {CellSide::Left, CellSide::Right}) {
      const CellPartition fine = partition_irreducible(t, side);
      const CellPartition coarse = partition_reducible(t, side);
      CHECK(join(fine, coarse, coarse.kind).same_blocks(coarse));
      CHECK(fine.blocks.size() >= coarse.blocks.size());
    }
  }
}

TEST_CASE("cells around the running example") {
  const CellTable t = build_table(4, 2);
  const CellPartition right = partition_reducible(t, CellSide::Right);
  CHECK(same_block(right, "4,-3,-2,1", "4,-3,1,-2"));
  CHECK(same_block(right, "4,-3,-2,1", "-4,-3,-2,1"));
  const CellPartition irr = partition_irreducible(t, CellSide::Right);
  CHECK_FALSE(same_block(irr, "4,-3,-2,1", "4,-3,1,-2"));
  CHECK(same_block(irr, "4,-3,-2,1", "-4,-3,-2,1"));
}

TEST_CASE("partitions cover the group exactly once") {
  const CellTable t = build_table(3, 1);
  for (const CellPartition& p : {partition_irreducible(t, CellSide::Left), partition_reducible(t, CellSide::Right),
                                 operator_components(t)}) {
    std::size_t total = 0;
    for (const auto& b : p.blocks) {
      CHECK(std::is_sorted(b.begin(), b.end()));
      total += b.size();
    }
    CHECK(total == group_order(3));
    CHECK(std::is_sorted(p.blocks.begin(), p.blocks.end(),
                         [](const auto& a, const auto& b) { return a.front() < b.front(); }));
  }
}

TEST_CASE("operator edges stay inside the group") {
  const CellTable t = build_table(3, 1);
  const std::vector<OperatorEdge> edges = operator_edges(3, 1);
  CHECK_FALSE(edges.empty());
  for (const OperatorEdge& e : edges) {
    CHECK(t.index_of(e.from) < t.index_of(e.to));
    CHECK(apply(e.op, e.from) == e.to);
  }
}

TEST_CASE("verification suites on small groups") {
  for (int n = 0; n <= 3; ++n) {
    std::map<int, CellTable> tables;
    for (int rank = 0; rank <= 4; ++rank) tables.emplace(rank, build_table(n, rank));
    for (int rank = 0; rank <= 3; ++rank) {
      const CellTable& t = tables.at(rank);
      const CellTable& next = tables.at(rank + 1);
      for (const VerifyReport& r : {verify_stability(t), verify_generation(t), verify_refinement(t, next),
                                    verify_bijectivity(t), verify_cycles(t)}) {
        CHECK_MESSAGE(r.passed(), r.suite, " n=", n, " r=", rank);
      }
      if (rank >= n - 1) CHECK(verify_asymptotic(t, next).passed());
      for (int m = 0; m <= n; ++m) CHECK(verify_parabolic(t, build_table(m, rank)).passed());
    }
  }
}

TEST_CASE("reports record witnesses up to the cap") {
  VerifyReport r("demo", 1, 0);
  for (int i = 0; i < 10; ++i) r.check(i % 2 == 0, [i] { return std::to_string(i); });
  CHECK(r.checked == 10);
  CHECK(r.violations == 5);
  CHECK(r.witnesses.size() <= static_cast<std::size_t>(kDefaultVerifyCap));
  CHECK_FALSE(r.passed());
}
