#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "stix/bit_matrix.hpp"

namespace stix {

// Per-case generator so parallel sweeps draw the same values regardless of scheduling.
inline std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t case_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  return std::mt19937_64(seq);
}

template <typename Rng>
BoolMatrix random_matrix(std::size_t n, double density, Rng& rng) {
  std::bernoulli_distribution bit(density);
  BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (bit(rng)) a.set(i, j);
  return a;
}

template <typename Rng>
Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  std::shuffle(map.begin(), map.end(), rng);
  return Permutation(std::move(map));
}

// Random Hamiltonian cycle plus every other arc (loops included) with
// probability 1/n; always strongly connected.
template <typename Rng>
BoolMatrix random_irreducible(std::size_t n, Rng& rng) {
  const Permutation order = random_permutation(n, rng);
  BoolMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(order(i), order((i + 1) % n));
  std::bernoulli_distribution extra(1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a.get(i, j) && extra(rng)) a.set(i, j);
  return a;
}

}  // namespace stix
