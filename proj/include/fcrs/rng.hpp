#pragma once

#include <cstdint>

namespace fcrs {

/// Small deterministic generator (splitmix64). Good enough for redex choice
/// and test-word sampling; reproducible across platforms.
struct SplitMix64 {
  uint64_t state = 0x9e3779b97f4a7c15ull;

  SplitMix64() = default;
  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound must be nonzero.
  uint64_t below(uint64_t bound) { return next() % bound; }
};

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  SplitMix64 rng(a ^ (b * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  return rng.next();
}

}  // namespace fcrs
