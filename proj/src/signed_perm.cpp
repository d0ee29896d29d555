#include "domino/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace domino {

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) {
      throw DomainError("entries must be a signed permutation of 1.." + std::to_string(n));
    }
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return SignedPermutation(std::move(e));
}

int SignedPermutation::operator()(int i) const {
  if (i < 0) return -at(-i);
  return at(i);
}

int SignedPermutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw DomainError("position " + std::to_string(position) + " out of range");
  }
  return entries_[position - 1];
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw DomainError("compose: size mismatch");
  std::vector<int> e(u.size());
  for (int i = 1; i <= u.size(); ++i) e[i - 1] = u(v(i));
  return SignedPermutation(std::move(e));
}

SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> e(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    const int v = w(i);
    e[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(e));
}

SignedPermutation right_mult_s(const SignedPermutation& w, int j) {
  if (j < 1 || j >= w.size()) throw DomainError("right_mult_s: index out of range");
  std::vector<int> e(w.entries().begin(), w.entries().end());
  std::swap(e[j - 1], e[j]);
  return SignedPermutation(std::move(e));
}

SignedPermutation right_mult_t(const SignedPermutation& w, int j) {
  if (j < 1 || j > w.size()) throw DomainError("right_mult_t: index out of range");
  std::vector<int> e(w.entries().begin(), w.entries().end());
  e[j - 1] = -e[j - 1];
  return SignedPermutation(std::move(e));
}

SignedPermutation embed(const SignedPermutation& w, int n) {
  if (n < w.size()) throw DomainError("embed: target rank smaller than source");
  std::vector<int> e(w.entries().begin(), w.entries().end());
  for (int i = w.size() + 1; i <= n; ++i) e.push_back(i);
  return SignedPermutation(std::move(e));
}

std::string to_string(const Root& root) {
  return (root.kind == Root::Kind::Simple ? "alpha_" : "alpha'_") + std::to_string(root.index);
}

std::vector<Root> roots(int n, int k) {
  std::vector<Root> out;
  for (int i = 1; i <= std::min(n, k); ++i) out.push_back(Root::prime(i));
  for (int i = 2; i <= n; ++i) out.push_back(Root::simple(i));
  return out;
}

std::set<Root> tau(const SignedPermutation& w, int k) {
  std::set<Root> out;
  const int n = w.size();
  for (int j = 1; j < n; ++j) {
    if (w(j) > w(j + 1)) out.insert(Root::simple(j + 1));
  }
  for (int j = 1; j <= std::min(n, k); ++j) {
    if (w(j) < 0) out.insert(Root::prime(j));
  }
  return out;
}

ParabolicFactors parabolic_decompose(const SignedPermutation& w, int m) {
  const int n = w.size();
  if (m < 1 || m > n) throw DomainError("parabolic_decompose: m out of range");
  std::vector<int> heads;
  for (int i = 1; i <= m; ++i) heads.push_back(std::abs(w(i)));
  std::sort(heads.begin(), heads.end());

  std::vector<int> x(n);
  for (int i = 0; i < m; ++i) x[i] = heads[i];
  for (int i = m + 1; i <= n; ++i) x[i - 1] = w(i);

  std::vector<int> factor(m);
  for (int i = 1; i <= m; ++i) {
    const int pos = static_cast<int>(std::lower_bound(heads.begin(), heads.end(), std::abs(w(i))) -
                                     heads.begin()) + 1;
    factor[i - 1] = w(i) > 0 ? pos : -pos;
  }
  return {SignedPermutation(std::move(x)), SignedPermutation(std::move(factor))};
}

std::vector<SignedPermutation> coset_representatives(int n, int m) {
  std::vector<SignedPermutation> out;
  for_each_element(n, [&](const SignedPermutation& x) {
    bool ok = m == 0 || x(1) > 0;
    for (int i = 1; ok && i < m; ++i) ok = x(i) < x(i + 1);
    if (ok) out.push_back(x);
  });
  return out;
}

std::size_t group_order(int n) {
  std::size_t order = 1;
  for (int i = 1; i <= n; ++i) order *= 2 * static_cast<std::size_t>(i);
  return order;
}

namespace {

void enumerate_from(int n, std::vector<int>& prefix, std::vector<bool>& used,
                    const std::function<void(const SignedPermutation&)>& visit) {
  if (static_cast<int>(prefix.size()) == n) {
    visit(SignedPermutation(prefix));
    return;
  }
  for (int a = 1; a <= n; ++a) {
    if (used[a]) continue;
    used[a] = true;
    for (int sign : {1, -1}) {
      prefix.push_back(sign * a);
      enumerate_from(n, prefix, used, visit);
      prefix.pop_back();
    }
    used[a] = false;
  }
}

}  // namespace

void for_each_element(int n, const std::function<void(const SignedPermutation&)>& visit, int cap) {
  if (n < 0 || n > cap) {
    throw DomainError("group rank " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<int> prefix;
  std::vector<bool> used(n + 1, false);
  enumerate_from(n, prefix, used, visit);
}

std::vector<SignedPermutation> enumerate_group(int n, int cap) {
  std::vector<SignedPermutation> out;
  out.reserve(n <= cap ? group_order(n) : 0);
  for_each_element(n, [&](const SignedPermutation& w) { out.push_back(w); }, cap);
  return out;
}

SignedPermutation parse_word(std::string_view text) {
  std::vector<int> entries;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) return SignedPermutation();
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw DomainError("malformed word entry '" + std::string(token) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SignedPermutation(std::move(entries));
}

std::string format_word(const SignedPermutation& w) {
  std::ostringstream out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out << ',';
    out << w(i);
  }
  return out.str();
}

std::size_t SignedPermutationHash::operator()(const SignedPermutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.entries()) {
    h ^= static_cast<std::size_t>(v + 64);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace domino
