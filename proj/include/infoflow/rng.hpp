#pragma once

#include <cstdint>

namespace infoflow {

// splitmix64: tiny, portable, and stable across platforms, which keeps
// seeded runs byte-identical everywhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Deterministic sub-seed for (stream, index) pairs, so sampling work can be
// partitioned without changing results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
  SplitMix64 a(master ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  std::uint64_t h = a.next();
  SplitMix64 b(h ^ (0xc2b2ae3d27d4eb4fULL * (index + 1)));
  return b.next();
}

// Uniform draw from the dyadic window [2^t, 2^(t+1)); the window width is a
// power of two, so t bits of the raw word give an exact uniform.
inline std::uint64_t sample_dyadic_window(SplitMix64& rng, unsigned t) {
  const std::uint64_t base = std::uint64_t(1) << t;
  return base + (rng.next() >> (64 - t));
}

}  // namespace infoflow
