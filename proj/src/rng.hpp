#pragma once

// Portable random draws on top of std::mt19937_64, whose output sequence is
// fixed by the standard. The std distributions are implementation-defined,
// so they are avoided wherever reproducible output matters.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace nagasent::detail {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound > 0, by rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace nagasent::detail
