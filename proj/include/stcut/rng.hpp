#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace stcut {

// Deterministic helpers on top of std::mt19937_64. The standard pins the
// engine's output sequence but not the distributions', so mapping bits to
// values by hand keeps seeded streams identical across toolchains.

/// Uniform double in [0, 1) built from the top 53 bits of the engine output.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, range), rejection sampled (no modulo bias).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t reject_below = (0 - range) % range;  // 2^64 mod range
  for (;;) {
    const std::uint64_t u = rng();
    if (u >= reject_below) return u % range;
  }
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Uniform double in [lo, hi).
inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_double(rng);
}

}  // namespace stcut
