#pragma once

#include <cstdint>

namespace losslab {

/// SplitMix64 (Steele/Lea/Vigna). One instance per logical stream; Monte
/// Carlo trials and image pixels each derive their own substream from a
/// master seed and a stream id, so results do not depend on evaluation
/// order or thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, exact.
  std::uint32_t next_below(std::uint32_t bound) {
    const std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<std::uint32_t>(x % bound);
  }

 private:
  std::uint64_t state_;
};

/// Independent substream for (master seed, stream id).
inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t stream_id) {
  SplitMix64 g(master_seed ^ (stream_id * 0x9e3779b97f4a7c15ull + 0x6a09e667f3bcc909ull));
  g.next();
  return g;
}

}  // namespace losslab
