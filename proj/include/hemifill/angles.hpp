#pragma once

#include <cmath>

namespace hemifill {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

// Angles within this distance of the 2*pi seam are snapped to 0.
inline constexpr double kSeamTol = 1e-12;

// Canonical representative in [0, 2*pi).
inline double wrap_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi - kSeamTol) r = 0.0;
  return r;
}

// Representative in [-pi, pi).
inline double wrap_signed(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < -kPi) r += kTwoPi;
  if (r >= kPi) r -= kTwoPi;
  return r;
}

// Arc-length distance on the unit circle, in [0, pi].
inline double circle_distance(double s, double t) {
  return std::fabs(wrap_signed(s - t));
}

}  // namespace hemifill
