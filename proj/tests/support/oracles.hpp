#pragma once

// Deliberately naive reference implementations. Nothing here shares code
// with the library kernels: plain int vectors, triple loops, brute force.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "stix/bit_matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

inline Dense dense(const stix::BoolMatrix& a) {
  const std::size_t n = a.order();
  Dense d(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = a.get(i, j) ? 1 : 0;
  return d;
}

// Entries clipped at `clip` after every product (exact while all entries stay below it).
inline Dense multiply(const Dense& x, const Dense& y, std::int64_t clip = INT64_MAX / 4) {
  const std::size_t n = x.size();
  Dense z(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] = std::min(clip, z[i][j] + x[i][k] * y[k][j]);
  return z;
}

inline bool zero_one(const Dense& d) {
  for (const auto& r : d)
    for (auto v : r)
      if (v > 1) return false;
  return true;
}

// Stable index from integer powers: powers are 0-1 until overflow, so a
// repeated 0-1 power proves the sequence never leaves {0,1}.
inline std::optional<std::int64_t> theta(const stix::BoolMatrix& a) {
  const Dense base = dense(a);
  std::set<Dense> seen{base};
  Dense p = base;
  for (std::int64_t k = 1;; ++k) {
    p = multiply(p, base, 2);
    if (!zero_one(p)) return k;
    if (!seen.insert(p).second) return std::nullopt;
  }
}

// Walks counted by depth-first enumeration, capped at `cap` per endpoint pair.
inline std::optional<int> theta_by_walks(const stix::BoolMatrix& a, int max_len) {
  const int n = static_cast<int>(a.order());
  for (int len = 2; len <= max_len; ++len) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> count(n, 0);
      std::vector<std::pair<int, int>> stack{{s, 0}};
      while (!stack.empty()) {
        auto [v, d] = stack.back();
        stack.pop_back();
        if (d == len) {
          ++count[v];
          continue;
        }
        for (int w = 0; w < n; ++w)
          if (a.get(v, w)) stack.emplace_back(w, d + 1);
      }
      for (int t = 0; t < n; ++t)
        if (count[t] >= 2) return len - 1;
    }
  }
  return std::nullopt;
}

inline std::int64_t coprime_max(std::int64_t n) {
  std::int64_t best = -1;
  for (std::int64_t p = 1; p < n; ++p)
    if (std::gcd(p, n - p) == 1) best = std::max(best, p * (n - p));
  return best;
}

// Isomorphism by trying every bijection; fine up to order 8.
inline bool isomorphic(const stix::BoolMatrix& a, const stix::BoolMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n || a.count_ones() != b.count_ones()) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a.get(i, j) == b.get(p[i], p[j]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// reach[i][j]: a walk of length >= 0 from i to j (Warshall).
inline std::vector<std::vector<bool>> reachability(const stix::BoolMatrix& a) {
  const std::size_t n = a.order();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(i, j)) r[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline bool strongly_connected(const stix::BoolMatrix& a) {
  const std::size_t n = a.order();
  if (n == 1) return a.get(0, 0);
  const auto r = reachability(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

}  // namespace oracle
