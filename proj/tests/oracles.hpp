#pragma once

// Brute-force references that share no code with the library: partitions
// are plain decreasing vectors, classes are checked straight from their
// definitions, and Glaisher merges are performed one at a time.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Parts = std::vector<std::int64_t>;

inline void all_partitions_rec(std::int64_t remaining, std::int64_t max_part, Parts &cur,
                               std::vector<Parts> &out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    all_partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Every partition of n as a decreasing vector, lexicographically descending.
inline std::vector<Parts> all_partitions(std::int64_t n) {
  std::vector<Parts> out;
  Parts cur;
  all_partitions_rec(n, n, cur, out);
  return out;
}

// p(n) from the textbook recursion p(n, k) = p(n, k-1) + p(n-k, k).
inline std::int64_t partition_number(std::int64_t n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (std::int64_t k = 1; k <= n; ++k)
    for (std::int64_t m = k; m <= n; ++m)
      p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  return p[static_cast<std::size_t>(n)];
}

inline std::int64_t mult(const Parts &parts, std::int64_t k) {
  return std::count(parts.begin(), parts.end(), k);
}

inline std::map<std::int64_t, std::int64_t> mults(const Parts &parts) {
  std::map<std::int64_t, std::int64_t> m;
  for (auto p : parts)
    ++m[p];
  return m;
}

inline bool any_divides(const std::vector<std::int64_t> &moduli, std::int64_t p) {
  for (auto r : moduli)
    if (p % r == 0)
      return true;
  return false;
}

// CP: no part divisible by any modulus.
inline bool in_cp(const Parts &parts, const std::vector<std::int64_t> &moduli) {
  for (auto p : parts)
    if (any_divides(moduli, p))
      return false;
  return true;
}

inline std::vector<std::int64_t> tail(const std::vector<std::int64_t> &moduli) {
  return {moduli.begin() + 1, moduli.end()};
}

// RP_{r_1} intersected with CP of the tail.
inline bool in_rp(const Parts &parts, const std::vector<std::int64_t> &moduli) {
  for (auto [k, m] : mults(parts))
    if (m >= moduli[0])
      return false;
  return in_cp(parts, tail(moduli));
}

// Exactly one part size reaches r_1, and CP of the tail.
inline bool in_irp(const Parts &parts, const std::vector<std::int64_t> &moduli) {
  int over = 0;
  for (auto [k, m] : mults(parts))
    if (m >= moduli[0])
      ++over;
  return over == 1 && in_cp(parts, tail(moduli));
}

inline std::vector<Parts> filter(std::int64_t n, const std::function<bool(const Parts &)> &keep) {
  std::vector<Parts> out;
  for (auto &p : all_partitions(n))
    if (keep(p))
      out.push_back(p);
  return out;
}

// Literal Glaisher process: merge the LARGEST eligible size each time, the
// opposite of the library's canonical order. Returns (end, count).
inline std::pair<Parts, std::int64_t> glaisher(Parts parts, std::int64_t r) {
  std::int64_t count = 0;
  for (;;) {
    std::int64_t pick = 0;
    for (auto [k, m] : mults(parts))
      if (m >= r)
        pick = k; // keeps the largest
    if (pick == 0)
      break;
    for (std::int64_t i = 0; i < r; ++i)
      parts.erase(std::find(parts.begin(), parts.end(), pick));
    parts.push_back(pick * r);
    std::sort(parts.rbegin(), parts.rend());
    ++count;
  }
  return {parts, count};
}

inline std::int64_t x_stat(const Parts &parts, std::int64_t r, std::int64_t j) {
  return std::count_if(parts.begin(), parts.end(), [&](auto p) { return p % r == j; });
}

inline std::int64_t y_stat(const Parts &parts, std::int64_t j) {
  std::int64_t out = 0;
  for (auto [k, m] : mults(parts))
    if (m >= j)
      ++out;
  return out;
}

inline std::int64_t total_length(const std::vector<Parts> &ps) {
  std::int64_t out = 0;
  for (auto &p : ps)
    out += static_cast<std::int64_t>(p.size());
  return out;
}

// Number of pairs (k, m), k, m >= 1, with m * a * k = d: the q^d coefficient
// of sum_k q^{ak} / (1 - q^{ak}).
inline std::int64_t tail_divisor_count(std::int64_t a, std::int64_t d) {
  if (d == 0 || d % a != 0)
    return 0;
  std::int64_t e = d / a, out = 0;
  for (std::int64_t k = 1; k <= e; ++k)
    if (e % k == 0)
      ++out;
  return out;
}

// Coefficients of prod_{k=1}^{N} (1 - q^{ak}) by naive polynomial products.
inline std::vector<std::int64_t> euler_product(std::int64_t a, std::size_t N) {
  std::vector<std::int64_t> acc(N + 1, 0);
  acc[0] = 1;
  for (std::size_t k = 1; a * static_cast<std::int64_t>(k) <= static_cast<std::int64_t>(N); ++k) {
    std::vector<std::int64_t> next(N + 1, 0);
    const auto shift = static_cast<std::size_t>(a) * k;
    for (std::size_t d = 0; d <= N; ++d) {
      next[d] += acc[d];
      if (d + shift <= N)
        next[d + shift] -= acc[d];
    }
    acc = next;
  }
  return acc;
}

} // namespace oracle
