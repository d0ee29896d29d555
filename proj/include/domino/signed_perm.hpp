#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domino {

/// Raised when an operation is asked to act outside its domain (bad index,
/// inapplicable operator, mismatched sizes).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of the hyperoctahedral group W_n in one-line notation.
///
/// Positions are 1-based in every public accessor: `at(1)` is w(1). The
/// absolute values of the entries always form a permutation of {1..n}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws DomainError unless |entries| is a permutation of {1..n}.
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// w(i) for 1 <= i <= n. Negative arguments follow w(-i) = -w(i).
  int operator()(int i) const;
  int at(int position) const;

  std::span<const int> entries() const { return entries_; }

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// (u o v)(i) = u(v(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);

/// w * s_j: swaps the entries in positions j and j+1.
SignedPermutation right_mult_s(const SignedPermutation& w, int j);
/// w * t_j: flips the sign of the entry in position j.
SignedPermutation right_mult_t(const SignedPermutation& w, int j);

/// Extends w in W_m to W_n by fixing m+1..n.
SignedPermutation embed(const SignedPermutation& w, int n);

/// A root of the modified simple system: Simple(i) is alpha_i (2 <= i <= n),
/// Prime(i) is alpha'_i (1 <= i <= n).
struct Root {
  enum class Kind { Simple, Prime };
  Kind kind;
  int index;

  static Root simple(int i) { return {Kind::Simple, i}; }
  static Root prime(int i) { return {Kind::Prime, i}; }

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;
};

std::string to_string(const Root& root);

/// The roots of Pi_n^k: Prime(1..min(n,k)) followed by Simple(2..n).
std::vector<Root> roots(int n, int k);

/// tau^k(w), using the descent characterizations
///   Simple(j+1) in tau  iff  w(j) > w(j+1),
///   Prime(j)    in tau  iff  j <= min(n,k) and w(j) < 0.
std::set<Root> tau(const SignedPermutation& w, int k);

struct ParabolicFactors {
  SignedPermutation coset;   // x in X_m^n
  SignedPermutation factor;  // w' in W_m
};

/// Unique factorization w = x * embed(w') with 0 < x(1) < ... < x(m).
ParabolicFactors parabolic_decompose(const SignedPermutation& w, int m);

/// All x in W_n with 0 < x(1) < ... < x(m), in enumeration order.
std::vector<SignedPermutation> coset_representatives(int n, int m);

inline constexpr int kDefaultGroupCap = 6;

/// All 2^n n! elements of W_n, ordered lexicographically on
/// (|w(1)|, sign w(1), |w(2)|, sign w(2), ...) with + before -.
/// Throws DomainError when n exceeds `cap`.
std::vector<SignedPermutation> enumerate_group(int n, int cap = kDefaultGroupCap);

/// Visits the elements in the same order without materializing them.
void for_each_element(int n, const std::function<void(const SignedPermutation&)>& visit,
                      int cap = kDefaultGroupCap);

std::size_t group_order(int n);

/// Comma-separated signed integers, e.g. "4,-3,-2,1". The empty string is
/// the identity of W_0. Whitespace around entries is tolerated on input.
SignedPermutation parse_word(std::string_view text);
std::string format_word(const SignedPermutation& w);

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& w) const noexcept;
};

}  // namespace domino
