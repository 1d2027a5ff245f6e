#pragma once

#include <cstdint>
#include <random>

namespace flagval {

// Independent, reproducible stream for work item `index` of a run seeded
// with `seed`.
inline std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Uniform integer in [0, n) by plain reduction, identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace flagval
