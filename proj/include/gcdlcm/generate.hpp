#pragma once

#include <cstddef>
#include <cstdint>

#include "gcdlcm/solver.hpp"

namespace gcdlcm {

/// SplitMix64 (Steele, Lea, Flood 2014). The constants are part of the
/// corpus format: changing them changes every generated instance.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kIncrement = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kMul1 = 0xbf58476d1ce4e5b9ULL;
  static constexpr std::uint64_t kMul2 = 0x94d049bb133111ebULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += kIncrement);
    z = (z ^ (z >> 30)) * kMul1;
    z = (z ^ (z >> 27)) * kMul2;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] by rejection sampling on the low residues.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::uint64_t state_;
};

/// Draws `count` values for A and then `b_count` values for B, each uniform
/// in [2, max_value], from SplitMix64(seed). Duplicates collapse, so |A|
/// may be smaller than `count`. Requires count >= 1 and max_value >= 2.
ProblemInstance generate_instance(std::uint64_t seed, std::size_t count,
                                  std::uint64_t max_value, Mode mode,
                                  std::size_t b_count = 0);

}  // namespace gcdlcm
