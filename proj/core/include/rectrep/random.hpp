#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rectrep {

// Uniform integer in [0, bound) by rejection sampling. Unlike
// std::uniform_int_distribution the sequence is the same on every standard
// library, which keeps seeded output reproducible across platforms.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

inline int draw_between(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[draw_below(rng, i)]);
  }
}

}  // namespace rectrep
