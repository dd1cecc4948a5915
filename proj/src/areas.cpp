#include "hemifill/areas.hpp"

#include <algorithm>
#include <cmath>

#include "hemifill/errors.hpp"
#include "hemifill/parallel.hpp"

namespace hemifill {

SpherePoint chart_to_sphere(Vec2 x) {
  const double rho = std::hypot(x.x, x.y);
  if (rho > kHalfPi + 1e-12) {
    throw InputError("chart point lies outside the disc of radius pi/2");
  }
  if (rho == 0.0) return SpherePoint(0.0, 0.0);
  return SpherePoint(wrap_angle(std::atan2(x.y, x.x)), std::min(rho, kHalfPi));
}

Vec2 sphere_to_chart(const SpherePoint& p) {
  return {p.colatitude * std::cos(p.azimuth),
          p.colatitude * std::sin(p.azimuth)};
}

MappedSurface chart_surface(const HemisphereMap& map) {
  MappedSurface s;
  s.dim = map.dim();
  s.target = map.curve().target();
  s.eval = [m = map](const SpherePoint& p, double* out) { m.eval(p, out); };
  return s;
}

MappedSurface hemisphere_identity_surface() {
  MappedSurface s;
  s.dim = 3;
  s.target = NormedTarget::l2(3);
  s.eval = [](const SpherePoint& p, double* out) {
    const auto u = p.unit3();
    out[0] = u[0];
    out[1] = u[1];
    out[2] = u[2];
  };
  return s;
}

MetricDifferential metric_differential(const MappedSurface& f,
                                       const SpherePoint& p, double h,
                                       std::size_t directions) {
  if (directions < 8 || directions % 2 != 0) {
    throw InputError("metric differential needs an even direction count >= 8");
  }
  if (!(h > 0.0)) throw InputError("metric differential step must be positive");
  const double edge = kHalfPi - p.colatitude;
  const double step = std::max(std::min(h, 0.45 * edge), 1e-5);

  std::vector<double> fp(f.dim), fq(f.dim);
  f.eval(p, fp.data());
  std::vector<double> raw(directions);
  for (std::size_t m = 0; m < directions; ++m) {
    const double psi =
        kTwoPi * static_cast<double>(m) / static_cast<double>(directions);
    double s[2];
    const double hs[2] = {step, 0.5 * step};
    for (int level = 0; level < 2; ++level) {
      const SpherePoint q = geodesic_step(p, hs[level], psi);
      f.eval(q, fq.data());
      s[level] = f.target.distance(fp.data(), fq.data()) / hs[level];
    }
    const double ext = 2.0 * s[1] - s[0];
    raw[m] = ext > 0.0 ? ext : s[1];
  }

  MetricDifferential out;
  const std::size_t half = directions / 2;
  std::vector<double> sym(directions);
  double smin = 0.0, smax = 0.0;
  for (std::size_t m = 0; m < directions; ++m) {
    sym[m] = 0.5 * (raw[m] + raw[(m + half) % directions]);
    smin = m == 0 ? sym[m] : std::min(smin, sym[m]);
    smax = std::max(smax, sym[m]);
  }
  if (smin < 1e-12 + 1e-9 * smax) {
    out.norm = PlanarNorm::polygon({});
    out.degenerate = true;
    return out;
  }
  std::vector<Vec2> pts(directions);
  for (std::size_t m = 0; m < directions; ++m) {
    const double psi =
        kTwoPi * static_cast<double>(m) / static_cast<double>(directions);
    pts[m] = {std::cos(psi) / sym[m], std::sin(psi) / sym[m]};
  }
  out.norm = PlanarNorm::polygon(pts);
  out.degenerate = out.norm.degenerate();
  if (!out.degenerate) {
    for (std::size_t m = 0; m < directions; ++m) {
      const double psi =
          kTwoPi * static_cast<double>(m) / static_cast<double>(directions);
      const double gauge = out.norm({std::cos(psi), std::sin(psi)});
      out.convexity_gap =
          std::max(out.convexity_gap, (sym[m] - gauge) / sym[m]);
    }
  }
  return out;
}

std::vector<AreaResult> area_multi(const MappedSurface& f,
                                   const std::vector<JacobianKind>& kinds,
                                   ChartDomain domain, std::size_t radial,
                                   std::size_t angular, double h,
                                   bool parallel) {
  if (!(domain.r0 >= 0.0 && domain.r0 < domain.r1 &&
        domain.r1 <= kHalfPi + 1e-12)) {
    throw InputError("chart domain needs 0 <= r0 < r1 <= pi/2");
  }
  if (radial == 0 || angular == 0) {
    throw InputError("quadrature needs at least one cell per axis");
  }
  if (kinds.empty()) throw InputError("no jacobian kinds requested");
  const double dr = (domain.r1 - domain.r0) / static_cast<double>(radial);
  const double dphi = kTwoPi / static_cast<double>(angular);
  const std::size_t cells = radial * angular;
  const std::size_t nk = kinds.size();
  std::vector<double> contrib(cells * nk);
  std::vector<double> gaps(cells);
  std::vector<char> degen(cells);
  par::run_indexed(cells, parallel, [&](std::size_t c) {
    const std::size_t i = c / angular;
    const std::size_t j = c % angular;
    const double rho = domain.r0 + (static_cast<double>(i) + 0.5) * dr;
    const double phi = (static_cast<double>(j) + 0.5) * dphi;
    const SpherePoint p(phi, rho);
    const MetricDifferential md = metric_differential(f, p, h);
    const double lo = domain.r0 + static_cast<double>(i) * dr;
    const double hi = domain.r0 + static_cast<double>(i + 1) * dr;
    const double cell_area =
        dphi * (std::cos(lo) - std::cos(std::min(hi, kHalfPi)));
    for (std::size_t k = 0; k < nk; ++k) {
      contrib[c * nk + k] = jacobian(md.norm, kinds[k]) * cell_area;
    }
    gaps[c] = md.convexity_gap;
    degen[c] = md.degenerate ? 1 : 0;
  });
  std::vector<AreaResult> out(nk);
  for (std::size_t k = 0; k < nk; ++k) out[k].cells = cells;
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t k = 0; k < nk; ++k) {
      out[k].area += contrib[c * nk + k];
      out[k].max_convexity_gap = std::max(out[k].max_convexity_gap, gaps[c]);
      out[k].degenerate_cells += degen[c];
    }
  }
  return out;
}

AreaResult area(const MappedSurface& f, JacobianKind kind, ChartDomain domain,
                std::size_t radial, std::size_t angular, double h,
                bool parallel) {
  return area_multi(f, {kind}, domain, radial, angular, h, parallel)[0];
}

FillReport filling_area_bound(const LipschitzCurve& curve, JacobianKind kind,
                              std::size_t grid_size, std::size_t radial,
                              std::size_t angular, bool parallel) {
  FillReport report;
  report.length = curve.length();
  const LipschitzCurve even = curve.constant_speed();
  report.lipschitz = even.lipschitz_bound();
  report.bound = report.length * report.length / kTwoPi;
  const HemisphereMap map(even, grid_size);
  report.area = area(chart_surface(map), kind, ChartDomain::disc(), radial,
                     angular, 1e-2, parallel);
  return report;
}

}  // namespace hemifill
