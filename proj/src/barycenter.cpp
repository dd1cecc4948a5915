#include "hemifill/barycenter.hpp"

#include <algorithm>
#include <cmath>

#include "hemifill/errors.hpp"
#include "hemifill/parallel.hpp"
#include "hemifill/rng.hpp"
#include "hemifill/sphere.hpp"

namespace hemifill {

std::vector<double> barycenter(const DiscreteCloud& cloud) {
  if (cloud.count() == 0) throw InputError("barycenter of an empty cloud");
  const double total = cloud.total_weight();
  if (!(total > 0.0)) throw InputError("barycenter needs positive total weight");
  std::vector<double> out(cloud.dim, 0.0);
  for (std::size_t i = 0; i < cloud.count(); ++i) {
    const double* p = cloud.point(i);
    for (std::size_t d = 0; d < cloud.dim; ++d) {
      out[d] += cloud.weights[i] * p[d];
    }
  }
  for (double& v : out) v /= total;
  return out;
}

std::vector<double> extend_measure(const LipschitzCurve& curve,
                                   const CircularMeasure& mu) {
  const std::size_t dim = curve.dim();
  std::vector<double> out(dim, 0.0), buf(dim);
  const std::size_t n = mu.grid_size();
  const double w = mu.cell_width();
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = mu.density()[j];
    if (rho == 0.0) continue;
    curve.integral(static_cast<double>(j) * w,
                   std::min(static_cast<double>(j + 1) * w, kTwoPi),
                   buf.data());
    for (std::size_t d = 0; d < dim; ++d) out[d] += rho * buf[d];
  }
  for (const Atom& a : mu.atoms()) {
    curve.eval(a.pos, buf.data());
    for (std::size_t d = 0; d < dim; ++d) out[d] += a.mass * buf[d];
  }
  return out;
}

CircularMeasure bicombing(const CircularMeasure& mu, const CircularMeasure& nu,
                          double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("bicombing time outside [0, 1]");
  return convex_combination(1.0 - t, mu, t, nu);
}

namespace {

constexpr double kBoundaryCutoff = 1.0 - 1e-9;

// Same antiderivative as the embedding: 0 left of -pi/2, d'(t) + k on the
// hump, 2k right of pi/2.
double antideriv(double k, double t) {
  if (t <= -kHalfPi) return 0.0;
  if (t >= kHalfPi) return 2.0 * k;
  return boundary_distance(k, t).d1 + k;
}

}  // namespace

HemisphereMap::HemisphereMap(LipschitzCurve curve, std::size_t grid_size)
    : curve_(std::move(curve)), n_(grid_size) {
  if (n_ < 8 || n_ % 2 != 0) {
    throw InputError("extension grids must be even and at least 8 cells");
  }
  const std::size_t dim = curve_.dim();
  cell_integrals_.assign(n_ * dim, 0.0);
  total_integral_.assign(dim, 0.0);
  const double w = kTwoPi / static_cast<double>(n_);
  std::vector<double> buf(dim);
  for (std::size_t j = 0; j < n_; ++j) {
    curve_.integral(static_cast<double>(j) * w,
                    std::min(static_cast<double>(j + 1) * w, kTwoPi),
                    buf.data());
    for (std::size_t d = 0; d < dim; ++d) {
      cell_integrals_[j * dim + d] = buf[d];
      total_integral_[d] += buf[d];
    }
  }
}

void HemisphereMap::eval(const SpherePoint& p, double* out) const {
  const std::size_t dim = curve_.dim();
  if (p.k() > kBoundaryCutoff) {
    curve_.eval(p.azimuth, out);
    return;
  }
  const double k = p.k();
  const double foot = p.foot_azimuth();
  const double w = kTwoPi / static_cast<double>(n_);
  const double scale = (1.0 - k) / kTwoPi;
  for (std::size_t d = 0; d < dim; ++d) out[d] = scale * total_integral_[d];
  // Only cells meeting [foot - pi/2, foot + pi/2] carry (d'')^+ mass.
  const long j0 =
      static_cast<long>(std::floor((foot - kHalfPi) / w));
  const long j1 = static_cast<long>(std::ceil((foot + kHalfPi) / w));
  const long nn = static_cast<long>(n_);
  double prev = antideriv(k, static_cast<double>(j0) * w - foot);
  for (long j = j0; j < j1; ++j) {
    const double next = antideriv(k, static_cast<double>(j + 1) * w - foot);
    const double mass = 0.5 * (next - prev);
    prev = next;
    if (mass <= 0.0) continue;
    const long jj = ((j % nn) + nn) % nn;
    const double rho = mass / w;
    const double* cell = cell_integrals_.data() + static_cast<std::size_t>(jj) * dim;
    for (std::size_t d = 0; d < dim; ++d) out[d] += rho * cell[d];
  }
}

std::vector<double> HemisphereMap::operator()(const SpherePoint& p) const {
  std::vector<double> out(dim());
  eval(p, out.data());
  return out;
}

LipschitzReport certify_lipschitz(const HemisphereMap& map, std::size_t pairs,
                                  std::uint64_t seed, bool parallel,
                                  double min_separation) {
  if (pairs == 0) throw InputError("certify_lipschitz needs pairs >= 1");
  if (!(min_separation > 0.0 && min_separation <= 0.1)) {
    throw InputError("min_separation must lie in (0, 0.1]");
  }
  const std::size_t dim = map.dim();
  std::vector<double> ratios(pairs, 0.0);
  std::vector<LipschitzPair> recs(pairs);
  par::run_indexed(pairs, parallel, [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    SpherePoint p, q;
    const std::uint64_t family = rng.below(20);
    if (family < 12) {
      p = sample_cap_point(rng, kHalfPi - 0.05);
      q = sample_cap_point(rng, kHalfPi - 0.05);
    } else if (family < 14) {
      p = SpherePoint(rng.angle(), kHalfPi);
      q = SpherePoint(rng.angle(), kHalfPi);
    } else if (family < 17) {
      p = sample_cap_point(rng, kHalfPi - 0.05);
      q = SpherePoint(rng.angle(), kHalfPi);
    } else {
      p = sample_cap_point(rng, kHalfPi - 0.1);
      const double eps = min_separation *
                         std::pow(0.1 / min_separation, rng.uniform01());
      q = geodesic_step(p, eps, rng.angle());
    }
    const double ds = sphere_distance(p, q);
    if (ds <= 0.0) return;
    std::vector<double> fp(dim), fq(dim);
    map.eval(p, fp.data());
    map.eval(q, fq.data());
    const double di = map.curve().target().distance(fp.data(), fq.data());
    ratios[i] = di / ds;
    recs[i] = {p, q, ds, di};
  });
  LipschitzReport report;
  report.pairs = pairs;
  report.curve_bound = map.curve().lipschitz_bound();
  for (std::size_t i = 0; i < pairs; ++i) {
    if (i == 0 || ratios[i] > report.max_ratio) {
      report.max_ratio = ratios[i];
      report.worst = recs[i];
    }
  }
  return report;
}

}  // namespace hemifill
