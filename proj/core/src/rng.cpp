#include "arw/rng.hpp"

#include <cmath>
#include <numbers>

namespace arw {

std::pair<double, double> gaussian_pair(SplitMix64& rng) {
  const double u1 = rng.next_unit();  // in (0, 1], so log(u1) is finite
  const double u2 = rng.next_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace arw
