#pragma once

#include <cstdint>

#include "pierce/rational.hpp"

namespace pierce {

/// SplitMix64 (Steele, Lea, Flood 2014). Output k is a pure function of
/// seed + k·γ, so streams are reproducible from the seed alone.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  /// Uniform integer in [0, 2^bits).
  Integer uniform_bits(unsigned bits);

  /// Uniform integer in [lo, hi] for small ranges.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace pierce
