#pragma once

#include <cstdint>
#include <random>

namespace polarline {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] by rejection sampling. Unlike
// std::uniform_int_distribution the sequence is the same on every standard
// library, so seeds reproduce across platforms.
inline long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<long>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

}  // namespace polarline
