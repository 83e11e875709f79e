#include "tguard/generator.hpp"

#include <string>
#include <vector>

namespace tguard {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) {
    throw std::invalid_argument(std::string(what) + " must be >= 1");
  }
}

Coord checked(Coord v) {
  if (v > kCoordLimit || v < -kCoordLimit) {
    throw BoundsExceededError("generated coordinate " + std::to_string(v) + " exceeds 2^30");
  }
  return v;
}

}  // namespace

Terrain random_terrain(const GenSpec& spec) {
  require_positive(spec.steps, "steps");
  require_positive(spec.max_run, "max_run");
  require_positive(spec.max_rise, "max_rise");
  if (spec.max_run > kCoordLimit || spec.max_rise > kCoordLimit) {
    throw BoundsExceededError("max_run/max_rise exceed 2^30");
  }

  SplitMix64 rng(spec.seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(spec.steps) * 2);
  Coord x = 0;
  Coord y = 0;
  for (std::int64_t s = 0; s < spec.steps; ++s) {
    const Coord rise = rng.in_one_to(spec.max_rise);
    const bool down = (rng.next() >> 63) != 0;
    pts.push_back({x, y});
    y = checked(down ? y - rise : y + rise);
    pts.push_back({x, y});
    if (s + 1 < spec.steps) {
      x = checked(x + rng.in_one_to(spec.max_run));
    }
  }
  return validate(pts);
}

Terrain descending_staircase(std::int64_t k, std::int64_t run, std::int64_t drop) {
  require_positive(k, "k");
  require_positive(run, "run");
  require_positive(drop, "drop");
  std::vector<Point> pts;
  Coord y = checked(k * drop);
  for (std::int64_t s = 0; s < k; ++s) {
    const Coord x = checked(s * run);
    pts.push_back({x, y});
    y -= drop;
    pts.push_back({x, y});
  }
  return validate(pts);
}

Terrain valley_comb(std::int64_t m, std::int64_t width, std::int64_t depth, std::int64_t gap) {
  require_positive(m, "m");
  require_positive(width, "width");
  require_positive(depth, "depth");
  require_positive(gap, "gap");
  std::vector<Point> pts;
  const Coord rim = checked(depth);
  for (std::int64_t v = 0; v < m; ++v) {
    const Coord left = checked(v * (width + gap));
    const Coord right = checked(left + width);
    pts.push_back({left, rim});
    pts.push_back({left, 0});
    pts.push_back({right, 0});
    pts.push_back({right, rim});
  }
  return validate(pts);
}

}  // namespace tguard
