#pragma once

// Deterministic 64-bit PRNG (splitmix64). Draws are reduced by plain modulo;
// the slight bias is irrelevant here and keeps every stream reproducible
// across platforms and standard libraries.

#include <cstdint>

namespace mg {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform-ish draw in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  // derive an independent stream for item `index`
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 s(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return s.next();
  }
};

}  // namespace mg
