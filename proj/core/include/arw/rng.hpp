#pragma once

#include <cstdint>
#include <utility>

namespace arw {

// splitmix64 (Steele/Lea/Flood), the standard 64-bit seed-expansion
// generator: a fixed-increment Weyl counter passed through an avalanching
// finalizer.  Consecutive seeds yield decorrelated streams, which is exactly
// how per-sample seeds seed_base + index are used here.  Hand-rolled rather
// than <random> so that draws are bit-identical across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]: 53 uniform bits, then flipped away from zero so that
  // log() below is always finite.
  double next_unit() {
    return 1.0 - static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// One Box-Muller step: two independent standard normals from two uniforms.
std::pair<double, double> gaussian_pair(SplitMix64& rng);

}  // namespace arw
