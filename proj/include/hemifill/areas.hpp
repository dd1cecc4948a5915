#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hemifill/barycenter.hpp"
#include "hemifill/curve.hpp"
#include "hemifill/norms.hpp"
#include "hemifill/sphere.hpp"

namespace hemifill {

// Equidistant azimuthal chart of the closed hemisphere: |x| is the
// colatitude (so the disc radius is pi/2) and the polar angle of x is the
// azimuth. Lengths along rays from the pole are exact; the pullback metric
// is d rho^2 + sin^2(rho) d phi^2 in polar chart coordinates.
SpherePoint chart_to_sphere(Vec2 x);
Vec2 sphere_to_chart(const SpherePoint& p);

// Map from the chart disc into (R^dim, target), evaluated through the
// hemisphere so metric differentials can step along true geodesics.
struct MappedSurface {
  std::size_t dim = 0;
  NormedTarget target;
  std::function<void(const SpherePoint&, double*)> eval;
};

// The extension as a surface. Copies the map into the closure.
MappedSurface chart_surface(const HemisphereMap& map);

// The identity hemisphere in R^3; its Busemann area is the hemisphere area
// 2*pi, which pins the quadrature normalization.
MappedSurface hemisphere_identity_surface();

struct MetricDifferential {
  PlanarNorm norm = PlanarNorm::l2();  // unit ball of the differential
  bool degenerate = false;             // some direction collapsed
  double convexity_gap = 0.0;          // how far samples sat inside the hull
};

// Samples d(f(exp_p(h v)), f(p)) / h in `directions` tangent directions at
// steps h and h/2, extrapolates 2 s_{h/2} - s_h, averages opposite
// directions, and takes the polygon with vertices v / s. h shrinks near the
// chart edge so steps stay on the hemisphere.
MetricDifferential metric_differential(const MappedSurface& f,
                                       const SpherePoint& p, double h,
                                       std::size_t directions = 64);

// Integration domain in the chart: the annulus r0 <= rho <= r1 (a disc when
// r0 = 0). Midpoint cells in polar coordinates tile it exactly, and each
// cell's hemisphere area d phi (cos rho_i - cos rho_{i+1}) is closed form.
struct ChartDomain {
  double r0 = 0.0;
  double r1 = kHalfPi;

  static ChartDomain disc(double radius = kHalfPi) { return {0.0, radius}; }
  static ChartDomain annulus(double a, double b) { return {a, b}; }
};

struct AreaResult {
  double area = 0.0;
  std::size_t cells = 0;
  std::size_t degenerate_cells = 0;
  double max_convexity_gap = 0.0;
};

// Jacobian quadrature: sum of jacobian(md(f), kind) times the exact
// hemisphere area of each polar cell. Deterministic for either value of
// `parallel`. The multi-kind variant samples each cell's differential once
// and applies every functional to it.
std::vector<AreaResult> area_multi(const MappedSurface& f,
                                   const std::vector<JacobianKind>& kinds,
                                   ChartDomain domain, std::size_t radial,
                                   std::size_t angular, double h = 1e-2,
                                   bool parallel = true);
AreaResult area(const MappedSurface& f, JacobianKind kind, ChartDomain domain,
                std::size_t radial, std::size_t angular, double h = 1e-2,
                bool parallel = true);

struct FillReport {
  double length = 0.0;     // curve length in the target norm
  double lipschitz = 0.0;  // of the constant-speed reparametrization
  double bound = 0.0;      // length^2 / (2*pi)
  AreaResult area;
};

// Filling area certificate: reparametrizes the curve to constant speed,
// extends it over the hemisphere and integrates the chosen Jacobian. The
// report pairs the measured area with the bound length^2 / (2*pi).
FillReport filling_area_bound(const LipschitzCurve& curve, JacobianKind kind,
                              std::size_t grid_size, std::size_t radial,
                              std::size_t angular, bool parallel = true);

}  // namespace hemifill
