#pragma once

#include <cstdint>
#include <stdexcept>

#include "tguard/geometry.hpp"

namespace tguard {

/// SplitMix64 (Steele, Lea, Flood 2014). Pinned so generated corpora are
/// reproducible across platforms and languages:
///   state += 0x9e3779b97f4a7c15
///   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb; return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [1, max]: 1 + next() % max.
  constexpr std::int64_t in_one_to(std::int64_t max) noexcept {
    return 1 + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(max));
  }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::uint64_t seed = 1;
  std::int64_t steps = 1;  ///< vertical edges; n = 2 * steps
  std::int64_t max_run = 10;
  std::int64_t max_rise = 10;
};

class BoundsExceededError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Random terrain starting at (0, 0). For each of the `steps` vertical edges,
/// in order: magnitude = in_one_to(max_rise), then the sign bit
/// (next() >> 63: 1 = down), then, except after the last edge, the run
/// in_one_to(max_run) of the following horizontal edge.
Terrain random_terrain(const GenSpec& spec);

/// k drops of `drop` separated by runs of `run`, descending left to right;
/// starts at (0, k * drop), ends at y = 0.
Terrain descending_staircase(std::int64_t k, std::int64_t run, std::int64_t drop);

/// m rectangular valleys of the given width and depth cut into a flat rim at
/// height depth, separated by `gap` units of rim. Starts at (0, depth).
Terrain valley_comb(std::int64_t m, std::int64_t width, std::int64_t depth, std::int64_t gap);

}  // namespace tguard
