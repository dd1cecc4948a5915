#include "hemifill/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "hemifill/errors.hpp"
#include "hemifill/parallel.hpp"
#include "hemifill/rng.hpp"
#include "hemifill/transport.hpp"

namespace hemifill {

namespace {

constexpr double kBoundaryCutoff = 1.0 - 1e-9;

double antideriv(double k, double t) {
  if (t <= -kHalfPi) return 0.0;
  if (t >= kHalfPi) return 2.0 * k;
  return boundary_distance(k, t).d1 + k;
}

// Antiderivative extended to offsets in [-2*pi, 2*pi], one full period adding
// the total positive-part mass 2k.
double antideriv_ext(double k, double x) {
  if (x < -kPi) return antideriv(k, x + kTwoPi) - 2.0 * k;
  if (x > kPi) return antideriv(k, x - kTwoPi) + 2.0 * k;
  return antideriv(k, x);
}

void require_grid(std::size_t n) {
  if (n < 8 || n % 2 != 0) {
    throw InputError("embedding grids must be even and at least 8 cells");
  }
}

// Cumulative positive-part antiderivative at the cell boundaries, with the
// period closed exactly so the cell masses add up to k with no drift.
std::vector<double> cell_cumulative(double k, double foot, std::size_t n) {
  const double w = kTwoPi / static_cast<double>(n);
  std::vector<double> cum(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    cum[j] = antideriv_ext(k, static_cast<double>(j) * w - foot);
  }
  cum[n] = cum[0] + 2.0 * k;
  return cum;
}

}  // namespace

double positive_part_mass(double k, double lo, double hi) {
  if (!(lo >= -kPi - kSeamTol && hi <= kPi + kSeamTol && lo <= hi)) {
    throw InputError("positive_part_mass needs -pi <= lo <= hi <= pi");
  }
  return 0.5 * (antideriv(k, hi) - antideriv(k, lo));
}

CircularMeasure phi_family(const SpherePoint& p, const CircularMeasure& nu) {
  if (p.k() > kBoundaryCutoff) {
    throw DegeneracyError("boundary points take the Dirac branch of iota");
  }
  require_grid(nu.grid_size());
  if (!is_antipodally_invariant(nu, 1e-9)) {
    throw InputError("phi_family needs an antipodally invariant measure");
  }
  const double k = p.k();
  const double foot = p.foot_azimuth();
  const std::size_t n = nu.grid_size();
  const double w = kTwoPi / static_cast<double>(n);
  const std::vector<double> cum = cell_cumulative(k, foot, n);
  std::vector<double> density(n);
  for (std::size_t j = 0; j < n; ++j) {
    density[j] = 0.5 * (cum[j + 1] - cum[j]) / w + (1.0 - k) * nu.density()[j];
  }
  std::vector<Atom> atoms = nu.atoms();
  for (auto& a : atoms) a.mass *= 1.0 - k;
  return CircularMeasure(n, std::move(density), std::move(atoms));
}

EmbeddedPoint iota(const SpherePoint& p, std::size_t grid_size) {
  require_grid(grid_size);
  if (p.k() > kBoundaryCutoff) {
    return {p, CircularMeasure::dirac(p.azimuth), true};
  }
  return {p, phi_family(p, CircularMeasure::uniform(grid_size)), false};
}

double half_circle_mass_error(const EmbeddedPoint& e) {
  if (e.boundary) {
    throw DegeneracyError("half-circle identity applies to interior points");
  }
  const double k = e.source.k();
  const double foot = e.source.foot_azimuth();
  const std::size_t n = e.measure.grid_size();
  const double w = kTwoPi / static_cast<double>(n);
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double q = static_cast<double>(j) * w;
    const double got = interval_mass(e.measure, q, kPi);
    const double want =
        0.5 - 0.5 * boundary_distance(k, wrap_signed(q - foot)).d1;
    worst = std::max(worst, std::fabs(got - want));
  }
  return worst;
}

std::vector<double> dirac_distance_errors(const EmbeddedPoint& e,
                                          std::size_t samples) {
  std::vector<double> errs(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double q =
        kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    const double got = w1_circle(e.measure, CircularMeasure::dirac(q)).distance;
    const double want = sphere_distance(e.source, SpherePoint(q, kHalfPi));
    errs[j] = std::fabs(got - want);
  }
  return errs;
}

CircularMeasure embedding_residue(const EmbeddedPoint& e) {
  if (e.boundary) {
    throw DegeneracyError("boundary images carry no residue");
  }
  const double k = e.source.k();
  const double foot = e.source.foot_azimuth();
  const std::size_t n = e.measure.grid_size();
  const double w = kTwoPi / static_cast<double>(n);
  const std::vector<double> cum = cell_cumulative(k, foot, n);
  std::vector<double> density(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double part = 0.5 * (cum[j + 1] - cum[j]) / w;
    density[j] = (e.measure.density()[j] - part) / (1.0 - k);
  }
  std::vector<Atom> atoms = e.measure.atoms();
  for (auto& a : atoms) a.mass /= 1.0 - k;
  return CircularMeasure(n, std::move(density), std::move(atoms));
}

SpherePoint sample_cap_point(Rng& rng, double max_colatitude) {
  const double az = rng.angle();
  const double u = rng.uniform01();
  const double c = std::acos(1.0 - u * (1.0 - std::cos(max_colatitude)));
  return SpherePoint(az, std::min(c, max_colatitude));
}

IsometryReport verify_isometry(std::size_t pairs, std::size_t grid_size,
                               std::uint64_t seed, bool parallel) {
  require_grid(grid_size);
  if (pairs == 0) throw InputError("verify_isometry needs pairs >= 1");
  std::vector<double> errs(pairs);
  std::vector<IsometryPair> recs(pairs);
  par::run_indexed(pairs, parallel, [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    const SpherePoint p = sample_cap_point(rng, kHalfPi - 0.05);
    const SpherePoint q = rng.below(10) == 0
                              ? SpherePoint(rng.angle(), kHalfPi)
                              : sample_cap_point(rng, kHalfPi - 0.05);
    const EmbeddedPoint ep = iota(p, grid_size);
    const EmbeddedPoint eq = iota(q, grid_size);
    const double ds = sphere_distance(p, q);
    const double dw = w1_circle(ep.measure, eq.measure).distance;
    errs[i] = std::fabs(dw - ds);
    recs[i] = {p, q, ds, dw};
  });
  IsometryReport report;
  report.pairs = pairs;
  double sum = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    sum += errs[i];
    if (i == 0 || errs[i] > report.max_error) {
      report.max_error = errs[i];
      report.worst = recs[i];
    }
  }
  report.mean_error = sum / static_cast<double>(pairs);
  return report;
}

}  // namespace hemifill
