#pragma once

#include <cmath>
#include <numbers>

namespace heis {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kPiOver3 = std::numbers::pi / 3.0;
inline constexpr double kTwoPiOver3 = 2.0 * std::numbers::pi / 3.0;

/// Principal representative of an angle in (-pi, pi].
inline double wrap_angle(double x) {
  double r = std::remainder(x, kTwoPi);  // in [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

/// Distance between two angles measured on the unit circle, in [0, pi].
inline double circle_distance(double x, double y) {
  return std::abs(wrap_angle(x - y));
}

}  // namespace heis
