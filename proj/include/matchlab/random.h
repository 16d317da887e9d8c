#ifndef MATCHLAB_RANDOM_H_
#define MATCHLAB_RANDOM_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "matchlab/graph.h"

namespace matchlab {

using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial seed: trial_seed = mix(mix(seed) ^ trial_index), optionally
// salted by a stream id so that one trial can feed several independent RNGs.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial,
                                    std::uint64_t stream = 0) {
  return mix64(mix64(mix64(seed) ^ trial) ^ stream);
}

// Uniform index in [0, n); n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Permutation(std::move(order));
}

}  // namespace matchlab

#endif  // MATCHLAB_RANDOM_H_
