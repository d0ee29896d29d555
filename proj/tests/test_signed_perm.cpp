#include <doctest.h>

#include <set>

#include "domino/signed_perm.hpp"

using namespace domino;

namespace {

// Length in W_n for the generators t_1 (sign of the first entry) and the
// adjacent transpositions, counted directly from inversions:
//   #{i<j : w(i) > w(j)} + #{i<j : w(i) + w(j) < 0} + #{i : w(i) < 0}.
int length(const SignedPermutation& w) {
  int l = 0;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) < 0) ++l;
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) ++l;
      if (w(i) + w(j) < 0) ++l;
    }
  }
  return l;
}

}  // namespace

TEST_CASE("words parse and format") {
  CHECK(format_word(parse_word("4,-3,-2,1")) == "4,-3,-2,1");
  CHECK(format_word(parse_word(" ( 4, -3 ,+2,1 ) ")) == "4,-3,2,1");
  CHECK(parse_word("").size() == 0);
  CHECK(format_word(parse_word("")).empty());
  CHECK_THROWS_AS(parse_word("1,1"), DomainError);
  CHECK_THROWS_AS(parse_word("0"), DomainError);
  CHECK_THROWS_AS(parse_word("3"), DomainError);
  CHECK_THROWS_AS(parse_word("1,,2"), DomainError);
  CHECK_THROWS_AS(parse_word("x"), DomainError);
}

TEST_CASE("evaluation follows w(-i) = -w(i)") {
  const SignedPermutation w = parse_word("4,-3,-2,1");
  CHECK(w(2) == -3);
  CHECK(w(-2) == 3);
  CHECK(w.at(1) == 4);
  CHECK_THROWS_AS(w.at(5), DomainError);
}

TEST_CASE("enumeration order and group order") {
  std::vector<std::string> words;
  for (const SignedPermutation& w : enumerate_group(2)) words.push_back(format_word(w));
  CHECK(words == std::vector<std::string>{"1,2", "1,-2", "-1,2", "-1,-2", "2,1", "2,-1", "-2,1", "-2,-1"});
  for (int n = 0; n <= 5; ++n) {
    const std::vector<SignedPermutation> all = enumerate_group(n);
    CHECK(all.size() == group_order(n));
    CHECK(std::set<SignedPermutation>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(group_order(4) == 384);
  CHECK_THROWS_AS(enumerate_group(7), DomainError);
}

TEST_CASE("compose, inverse and the reflections") {
  for (const SignedPermutation& w : enumerate_group(4)) {
    CHECK(compose(w, inverse(w)) == SignedPermutation::identity(4));
    CHECK(right_mult_s(right_mult_s(w, 2), 2) == w);
    CHECK(right_mult_t(w, 3)(3) == -w(3));
  }
  CHECK(format_word(right_mult_s(parse_word("4,-3,-2,1"), 3)) == "4,-3,1,-2");
  CHECK(format_word(embed(parse_word("-2,1"), 4)) == "-2,1,3,4");
}

TEST_CASE("descent characterizations agree with the length function") {
  for (int n = 1; n <= 4; ++n) {
    for (const SignedPermutation& w : enumerate_group(n)) {
      for (int j = 1; j < n; ++j) {
        CHECK((length(right_mult_s(w, j)) < length(w)) == (w(j) > w(j + 1)));
      }
      for (int j = 1; j <= n; ++j) {
        CHECK((length(right_mult_t(w, j)) < length(w)) == (w(j) < 0));
      }
    }
  }
}

TEST_CASE("tau^k on the running example") {
  const SignedPermutation w = parse_word("4,-3,-2,1");
  // w(1)>w(2), w(2)<w(3), w(3)<w(4); negative entries in positions 2 and 3.
  const std::set<Root> expected{Root::simple(2), Root::prime(2), Root::prime(3)};
  CHECK(tau(w, 3) == expected);
  CHECK(tau(w, 2) == std::set<Root>{Root::simple(2), Root::prime(2)});
  CHECK(tau(w, 0) == std::set<Root>{Root::simple(2)});
  CHECK(roots(3, 2).size() == 4);
}

TEST_CASE("parabolic decomposition") {
  for (int n = 0; n <= 4; ++n) {
    for (int m = 1; m <= n; ++m) {
      CHECK(coset_representatives(n, m).size() * group_order(m) == group_order(n));
      for (const SignedPermutation& w : enumerate_group(n)) {
        const ParabolicFactors f = parabolic_decompose(w, m);
        CHECK(compose(f.coset, embed(f.factor, n)) == w);
        for (int i = 1; i < m; ++i) CHECK(f.coset(i) < f.coset(i + 1));
        CHECK(f.coset(1) > 0);
      }
    }
  }
  const ParabolicFactors f = parabolic_decompose(parse_word("4,-3,-2,1"), 2);
  CHECK(format_word(f.coset) == "3,4,-2,1");
  CHECK(format_word(f.factor) == "2,-1");
}
