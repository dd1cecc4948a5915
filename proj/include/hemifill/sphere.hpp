#pragma once

#include <array>

#include "hemifill/angles.hpp"

namespace hemifill {

// Point on the closed upper hemisphere of the unit sphere. The boundary
// circle sits at colatitude pi/2 and is parametrized by azimuth, so boundary
// points double as points of S^1.
struct SpherePoint {
  double azimuth = 0.0;     // in [0, 2*pi)
  double colatitude = 0.0;  // in [0, pi/2]

  SpherePoint() = default;
  SpherePoint(double az, double colat);

  // cos of the distance to the nearest boundary point; equals sin(colatitude).
  double k() const { return std::sin(colatitude); }

  // Azimuth of the nearest boundary point (the foot of the orthogonal
  // geodesic through this point). At the pole every choice ties; we return 0.
  double foot_azimuth() const { return azimuth; }

  bool on_boundary(double tol = 1e-9) const {
    return colatitude >= kHalfPi - tol;
  }

  std::array<double, 3> unit3() const;
};

// Great-circle distance, computed through atan2 so it stays accurate for
// nearby and near-antipodal points alike.
double sphere_distance(const SpherePoint& p, const SpherePoint& q);

// exp_p(eps v) for the unit tangent v at angle psi, measured from the
// colatitude direction towards the azimuth direction. Results are clamped to
// the closed upper hemisphere.
SpherePoint geodesic_step(const SpherePoint& p, double eps, double psi);

// Distance from an interior point with boundary parameter k to the boundary
// point at arc offset t from the foot, t -> arccos(k cos t), together with
// its first three derivatives in t:
//   d'   =  k sin t / sqrt(1 - k^2 cos^2 t)
//   d''  =  (k - k^3) cos t / (1 - k^2 cos^2 t)^(3/2)
//   d''' =  (k - k^3) (-1 - 2 k^2 cos^2 t) sin t / (1 - k^2 cos^2 t)^(5/2)
// Rejects k outside [0, 1 - 1e-9]: past that the point is treated as a
// boundary point and callers must take the Dirac branch instead.
struct BoundaryDistance {
  double value;
  double d1;
  double d2;
  double d3;
};
BoundaryDistance boundary_distance(double k, double t);

// Right-triangle angles for the orthogonal-foot construction. A geodesic
// leaves the boundary point C at angle gamma in (0, pi), gamma != pi/2; for
// a boundary arc a in (0, pi/2] its point A_a sits on the geodesic through
// the foot B_a = C + a orthogonal to the boundary. With
//   K(a)    = sqrt(sin^2 a + cot^2 gamma)
//   N(a, t) = sqrt(sin^2 a + cot^2 gamma sin^2(a - t))
// the leg c_a = d(A_a, B_a) and the angle gamma_{a,t} cut at the boundary
// point C + t by the geodesic towards A_a satisfy
//   cos c_a        = cot gamma / K(a)
//   cos gamma_{a,t} = sin(a - t) cot gamma / N(a, t)
// so sgn cos gamma_{a,t} = sgn (a - t) for |a - t| <= pi.
double foot_cos_c(double gamma, double a);
double foot_cos_gamma(double gamma, double a, double t);

// g(a, t) = cos gamma_{a,t} + t cos(c_a) / pi and its partial derivative
//   dg/da = cot gamma sin a (sin t / N^3 - t cos a / (pi K^3)).
// For gamma < pi/2, g(., t) is nondecreasing on [max(0, t - pi/2), pi/2]
// when t in [0, pi] and nonincreasing on (0, pi/2] when t in [-pi/2, 0].
double g_value(double gamma, double a, double t);
double g_partial_a(double gamma, double a, double t);

}  // namespace hemifill
