#pragma once

#include <cstdint>

namespace dgs {

struct RngSeed {
  std::uint64_t seed = 0;
};

/// SplitMix64: portable, seedable 64-bit generator. Identical seed gives an
/// identical stream on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(RngSeed s) : state_(s.seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) without modulo bias (rejection sampling).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

/// Child stream for sample `index` under `master`: one SplitMix64 step over the
/// mixed pair, so parallel runs are seed-stable regardless of scheduling.
inline RngSeed child_seed(RngSeed master, std::uint64_t index) {
  SplitMix64 mixer(RngSeed{master.seed ^ (0x632be59bd9b4e019ULL * (index + 1))});
  return RngSeed{mixer.next()};
}

}  // namespace dgs
