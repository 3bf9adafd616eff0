#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lcc {

/// Number of unordered pairs over n nodes.
constexpr std::size_t num_pairs(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// Row-major index of the unordered pair {i, j}, i != j, among C(n,2) pairs.
constexpr std::size_t pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  const auto ui = static_cast<std::size_t>(i);
  return ui * static_cast<std::size_t>(n) - ui * (ui + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

/// Exact binomial coefficient; 0 when k < 0 or k > n.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

/// Generalized binomial x(x-1)...(x-k+1)/k! for real x.
inline double binomial_real(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

/// Advances `c` (strictly increasing, values < n) to the next k-subset in
/// lexicographic order. Returns false after the last subset.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

/// Calls f(span) for every k-subset of `pool` in lexicographic order of
/// positions within the pool.
template <class F>
void for_each_subset(std::span<const int> pool, int k, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  std::vector<int> chosen(k);
  do {
    for (int i = 0; i < k; ++i) chosen[i] = pool[pos[i]];
    f(std::span<const int>(chosen));
  } while (next_combination(pos, n));
}

/// Calls f(span) for every k-subset of {0..n-1}.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for_each_subset(std::span<const int>(all), k, std::forward<F>(f));
}

}  // namespace lcc
