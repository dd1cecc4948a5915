#include "hemifill/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hemifill/errors.hpp"

namespace hemifill {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kBoundaryKCutoff = 1.0 - 1e-9;

void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < kPi)) {
    std::ostringstream msg;
    msg << "geodesic angle gamma = " << gamma << " outside (0, pi)";
    throw InputError(msg.str());
  }
  if (std::fabs(gamma - kHalfPi) < 1e-12) {
    throw DegeneracyError(
        "geodesic orthogonal to the boundary (gamma = pi/2) has no foot "
        "construction");
  }
}

void require_arc(double a) {
  if (!(a > 0.0 && a <= kHalfPi + 1e-12)) {
    std::ostringstream msg;
    msg << "foot arc a = " << a << " outside (0, pi/2]";
    throw InputError(msg.str());
  }
}

}  // namespace

SpherePoint::SpherePoint(double az, double colat) {
  if (!(colat >= -kPoleTol && colat <= kHalfPi + kPoleTol)) {
    std::ostringstream msg;
    msg << "colatitude " << colat << " outside [0, pi/2]";
    throw InputError(msg.str());
  }
  colatitude = std::clamp(colat, 0.0, kHalfPi);
  azimuth = colatitude < kPoleTol ? 0.0 : wrap_angle(az);
}

std::array<double, 3> SpherePoint::unit3() const {
  const double s = std::sin(colatitude);
  return {s * std::cos(azimuth), s * std::sin(azimuth), std::cos(colatitude)};
}

double sphere_distance(const SpherePoint& p, const SpherePoint& q) {
  const auto a = p.unit3();
  const auto b = q.unit3();
  const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  const double cx = a[1] * b[2] - a[2] * b[1];
  const double cy = a[2] * b[0] - a[0] * b[2];
  const double cz = a[0] * b[1] - a[1] * b[0];
  const double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
  return std::atan2(cross, dot);
}

SpherePoint geodesic_step(const SpherePoint& p, double eps, double psi) {
  const double az = p.azimuth, co = p.colatitude;
  const double sc = std::sin(co), cc = std::cos(co);
  const double p3[3] = {sc * std::cos(az), sc * std::sin(az), cc};
  const double e_co[3] = {cc * std::cos(az), cc * std::sin(az), -sc};
  const double e_az[3] = {-std::sin(az), std::cos(az), 0.0};
  const double cp = std::cos(psi), sp = std::sin(psi);
  double q3[3];
  for (int i = 0; i < 3; ++i) {
    q3[i] =
        std::cos(eps) * p3[i] + std::sin(eps) * (cp * e_co[i] + sp * e_az[i]);
  }
  const double colat = std::acos(std::clamp(q3[2], -1.0, 1.0));
  const double azim = std::atan2(q3[1], q3[0]);
  return SpherePoint(wrap_angle(azim), std::min(colat, kHalfPi));
}

BoundaryDistance boundary_distance(double k, double t) {
  if (!(k >= 0.0 && k <= kBoundaryKCutoff)) {
    std::ostringstream msg;
    msg << "boundary parameter k = " << k
        << " outside [0, 1 - 1e-9]; use the boundary Dirac branch";
    throw DegeneracyError(msg.str());
  }
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double q = 1.0 - k * k * c * c;  // >= 1 - k^2 > 0
  const double rq = std::sqrt(q);
  const double kk = k - k * k * k;
  BoundaryDistance out;
  out.value = std::acos(std::clamp(k * c, -1.0, 1.0));
  out.d1 = k * s / rq;
  out.d2 = kk * c / (q * rq);
  out.d3 = kk * (-1.0 - 2.0 * k * k * c * c) * s / (q * q * rq);
  return out;
}

double foot_cos_c(double gamma, double a) {
  require_gamma(gamma);
  require_arc(a);
  const double cot = std::cos(gamma) / std::sin(gamma);
  const double sa = std::sin(a);
  return cot / std::sqrt(sa * sa + cot * cot);
}

double foot_cos_gamma(double gamma, double a, double t) {
  require_gamma(gamma);
  require_arc(a);
  const double cot = std::cos(gamma) / std::sin(gamma);
  const double sa = std::sin(a);
  const double sat = std::sin(a - t);
  const double n = std::sqrt(sa * sa + cot * cot * sat * sat);
  return sat * cot / n;
}

double g_value(double gamma, double a, double t) {
  return foot_cos_gamma(gamma, a, t) + t * foot_cos_c(gamma, a) / kPi;
}

double g_partial_a(double gamma, double a, double t) {
  require_gamma(gamma);
  require_arc(a);
  const double cot = std::cos(gamma) / std::sin(gamma);
  const double sa = std::sin(a);
  const double ca = std::cos(a);
  const double sat = std::sin(a - t);
  const double n2 = sa * sa + cot * cot * sat * sat;
  const double k2 = sa * sa + cot * cot;
  const double n3 = n2 * std::sqrt(n2);
  const double k3 = k2 * std::sqrt(k2);
  return cot * sa * (std::sin(t) / n3 - t * ca / (kPi * k3));
}

}  // namespace hemifill
