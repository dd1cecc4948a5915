#include "hemifill/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "hemifill/areas.hpp"
#include "hemifill/barycenter.hpp"
#include "hemifill/curve.hpp"
#include "hemifill/embedding.hpp"
#include "hemifill/measure.hpp"
#include "hemifill/norms.hpp"
#include "hemifill/parallel.hpp"
#include "hemifill/rng.hpp"
#include "hemifill/sphere.hpp"
#include "hemifill/transport.hpp"

namespace hemifill {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

CheckResult bounded(const std::string& name, double got, double limit) {
  return {name, got <= limit, fmt(got) + " <= " + fmt(limit)};
}

CheckResult near(const std::string& name, double got, double want,
                 double tol) {
  return {name, std::fabs(got - want) <= tol,
          fmt(got) + " vs " + fmt(want) + " (tol " + fmt(tol) + ")"};
}

CircularMeasure random_atom_measure(Rng& rng, std::uint64_t max_atoms) {
  const std::size_t count = 1 + static_cast<std::size_t>(rng.below(max_atoms));
  std::vector<Atom> atoms(count);
  double total = 0.0;
  for (auto& a : atoms) {
    a.pos = rng.angle();
    a.mass = rng.uniform(0.1, 1.0);
    total += a.mass;
  }
  for (auto& a : atoms) a.mass /= total;
  return CircularMeasure::atoms_only(std::move(atoms));
}

LipschitzCurve unit_circle_curve(NormedTarget target) {
  return LipschitzCurve::fourier(
      std::move(target),
      {{{0.0, 0.0}, {1.0, 0.0}}, {{0.0, 0.0}, {0.0, 1.0}}});
}

LipschitzCurve random_harmonic_curve(NormedTarget target, std::uint64_t seed,
                                     std::size_t harmonics) {
  Rng rng(seed);
  std::vector<std::vector<FourierCoeff>> coeffs(target.dim);
  for (auto& row : coeffs) {
    row.push_back({rng.uniform(-0.5, 0.5), 0.0});
    for (std::size_t k = 1; k <= harmonics; ++k) {
      const double damp = 1.0 / static_cast<double>(k * k);
      row.push_back({rng.uniform(-0.6, 0.6) * damp,
                     rng.uniform(-0.6, 0.6) * damp});
    }
  }
  return LipschitzCurve::fourier(std::move(target), std::move(coeffs));
}

LipschitzCurve kuratowski_circle_curve(std::size_t anchors,
                                       std::size_t samples) {
  std::vector<std::vector<double>> values(samples,
                                          std::vector<double>(anchors));
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = kTwoPi * static_cast<double>(i) /
                     static_cast<double>(samples);
    for (std::size_t j = 0; j < anchors; ++j) {
      const double anchor =
          kTwoPi * static_cast<double>(j) / static_cast<double>(anchors);
      values[i][j] = circle_distance(t, anchor);
    }
  }
  return LipschitzCurve::samples(NormedTarget::linf(anchors),
                                 std::move(values));
}

}  // namespace

std::vector<CheckResult> check_transport_agreement(std::uint64_t seed,
                                                   bool parallel) {
  const auto start = Clock::now();
  constexpr std::size_t kPairs = 500;
  std::vector<double> cut_err(kPairs), cdf_err(kPairs);
  par::run_indexed(kPairs, parallel, [&](std::size_t i) {
    Rng rng(mix_seed(seed, i));
    const CircularMeasure mu = random_atom_measure(rng, 64);
    const CircularMeasure nu = random_atom_measure(rng, 64);
    const double lp = lp_oracle(mu, nu).cost;
    cut_err[i] = std::fabs(w1_circle(mu, nu).distance - lp);
    cdf_err[i] = std::fabs(w1_cdf_shift(mu, nu) - lp);
  });
  const double worst_cut = *std::max_element(cut_err.begin(), cut_err.end());
  const double worst_cdf = *std::max_element(cdf_err.begin(), cdf_err.end());
  return {
      bounded("transport: balanced cut vs LP, 500 atom pairs", worst_cut,
              1e-9),
      bounded("transport: cdf shift vs LP, 500 atom pairs", worst_cdf, 1e-9),
      bounded("transport: runtime seconds", seconds_since(start), 60.0),
  };
}

std::vector<CheckResult> check_dirac_pairs(std::uint64_t seed) {
  constexpr std::size_t kPairs = 1000;
  double worst = 0.0;
  for (std::size_t i = 0; i < kPairs; ++i) {
    Rng rng(mix_seed(seed, 1000000 + i));
    const double x = rng.angle();
    const double y = rng.angle();
    const double got =
        w1_circle(CircularMeasure::dirac(x), CircularMeasure::dirac(y))
            .distance;
    worst = std::max(worst, std::fabs(got - circle_distance(x, y)));
  }
  return {bounded("transport: Dirac pair distances, 1000 pairs", worst,
                  1e-12)};
}

std::vector<CheckResult> check_embedding_identities(std::uint64_t seed,
                                                    bool parallel) {
  constexpr std::size_t kPoints = 50;
  constexpr std::size_t kGrid = 2048;
  const double colat_cap = std::asin(0.95);
  std::vector<double> half_err(kPoints), dirac_err(kPoints), resid_err(kPoints);
  par::run_indexed(kPoints, parallel, [&](std::size_t i) {
    Rng rng(mix_seed(seed, 2000000 + i));
    const SpherePoint p = sample_cap_point(rng, colat_cap);
    const EmbeddedPoint e = iota(p, kGrid);
    half_err[i] = half_circle_mass_error(e);
    const std::vector<double> de = dirac_distance_errors(e, 64);
    dirac_err[i] = *std::max_element(de.begin(), de.end());
    const CircularMeasure resid = embedding_residue(e);
    double worst_cell = 0.0;
    for (std::size_t c = 0; c < kGrid / 2; ++c) {
      worst_cell = std::max(
          worst_cell, std::fabs(resid.cell_mass(c) -
                                resid.cell_mass(c + kGrid / 2)));
    }
    resid_err[i] = worst_cell;
  });
  return {
      bounded("embedding: half-circle mass identity, 50 points x 2048 cuts",
              *std::max_element(half_err.begin(), half_err.end()), 1e-9),
      bounded("embedding: Dirac distances, 50 points x 64 boundary targets",
              *std::max_element(dirac_err.begin(), dirac_err.end()), 2e-3),
      bounded("embedding: residue antipodal invariance",
              *std::max_element(resid_err.begin(), resid_err.end()), 1e-9),
  };
}

std::vector<CheckResult> check_isometry_convergence(std::uint64_t seed,
                                                    bool parallel) {
  const auto start = Clock::now();
  constexpr std::size_t kPairs = 200;
  const IsometryReport r256 = verify_isometry(kPairs, 256, seed, parallel);
  const IsometryReport r1024 = verify_isometry(kPairs, 1024, seed, parallel);
  const IsometryReport r2048 = verify_isometry(kPairs, 2048, seed, parallel);
  const IsometryReport r4096 = verify_isometry(kPairs, 4096, seed, parallel);
  std::vector<CheckResult> out;
  out.push_back(bounded("isometry: max error at grid 256", r256.max_error,
                        2e-2));
  out.push_back(bounded("isometry: max error at grid 2048", r2048.max_error,
                        5e-3));
  const bool falling = r256.max_error > r1024.max_error &&
                       r1024.max_error > r4096.max_error;
  out.push_back({"isometry: error falls along grids 256 > 1024 > 4096",
                 falling,
                 fmt(r256.max_error) + " > " + fmt(r1024.max_error) + " > " +
                     fmt(r4096.max_error)});
  out.push_back(bounded("isometry: runtime seconds", seconds_since(start),
                        300.0));
  return out;
}

std::vector<CheckResult> check_lipschitz_extension(std::uint64_t seed,
                                                   bool parallel) {
  constexpr std::size_t kGrid = 2048;
  constexpr std::size_t kPairs = 5000;
  std::vector<CheckResult> out;
  const LipschitzCurve circle = unit_circle_curve(NormedTarget::l2(2));
  const LipschitzCurve wavy =
      random_harmonic_curve(NormedTarget::linf(2), mix_seed(seed, 777), 5);
  const struct {
    const LipschitzCurve* curve;
    const char* name;
  } cases[] = {{&circle, "unit circle into euclidean plane"},
               {&wavy, "five-harmonic curve into sup-norm plane"}};
  for (const auto& c : cases) {
    const HemisphereMap map(*c.curve, kGrid);
    const LipschitzReport rep =
        certify_lipschitz(map, kPairs, seed, parallel, 1e-3);
    const double limit = rep.curve_bound * (1.0 + 5e-3);
    out.push_back(bounded(
        std::string("extension: distortion of ") + c.name + ", 5000 pairs",
        rep.max_ratio, limit));
  }
  return out;
}

std::vector<CheckResult> check_g_monotonicity(bool parallel) {
  constexpr std::size_t kGamma = 20, kT = 100, kA = 100;
  std::vector<std::size_t> violations(kGamma * kT, 0);
  par::run_indexed(kGamma * kT, parallel, [&](std::size_t row) {
    const std::size_t jg = row / kT;
    const std::size_t jt = row % kT;
    const double gamma = static_cast<double>(jg + 1) * kHalfPi / 21.0;
    const double t = -kHalfPi + (static_cast<double>(jt) + 0.5) *
                                    (1.5 * kPi / static_cast<double>(kT));
    const double a_lo = std::max(0.0, t - kHalfPi);
    std::size_t bad = 0;
    for (std::size_t ja = 0; ja < kA; ++ja) {
      const double a = a_lo + (static_cast<double>(ja) + 0.5) *
                                  (kHalfPi - a_lo) / static_cast<double>(kA);
      const double d = g_partial_a(gamma, a, t);
      if (t >= 0.0 ? d < -1e-12 : d > 1e-12) ++bad;
    }
    violations[row] = bad;
  });
  std::size_t total = 0;
  for (std::size_t v : violations) total += v;
  std::ostringstream detail;
  detail << total << " sign violations over " << kGamma * kT * kA
         << " samples";
  return {{"lemma: dg/da keeps its sign on the sweep grid", total == 0,
           detail.str()}};
}

std::vector<CheckResult> check_jacobian_bounds(std::uint64_t seed,
                                               bool parallel) {
  constexpr std::size_t kBodies = 10000;
  struct Slot {
    double hb = 0.0, bi = 0.0, hi = 0.0;
    bool ok = false;
  };
  std::vector<Slot> slots(kBodies);
  par::run_indexed(kBodies, parallel, [&](std::size_t i) {
    Rng rng(mix_seed(seed, 3000000 + i));
    const std::size_t m = 2 + static_cast<std::size_t>(rng.below(7));
    std::vector<Vec2> pts(m);
    for (auto& p : pts) {
      const double r = rng.uniform(0.3, 3.0);
      const double t = rng.angle();
      p = {r * std::cos(t), r * std::sin(t)};
    }
    const PlanarNorm body = PlanarNorm::polygon(pts);
    if (body.degenerate()) return;
    const double jb = jacobian_busemann(body);
    const double jht = jacobian_holmes_thompson(body);
    const double jir = jacobian_inscribed(body);
    slots[i] = {jht / jb, jb / jir, jht / jir, true};
  });
  double min_hb = 0.0, min_bi = 0.0, min_hi = 0.0;
  std::size_t used = 0;
  for (const Slot& s : slots) {
    if (!s.ok) continue;
    if (used == 0) {
      min_hb = s.hb;
      min_bi = s.bi;
      min_hi = s.hi;
    } else {
      min_hb = std::min(min_hb, s.hb);
      min_bi = std::min(min_bi, s.bi);
      min_hi = std::min(min_hi, s.hi);
    }
    ++used;
  }
  const double q_hb = 8.0 / (kPi * kPi);
  const double q_bi = kPi / 4.0;
  const double q_hi = 2.0 / kPi;
  auto window = [&](const std::string& name, double got, double q) {
    CheckResult r;
    r.name = name;
    r.pass = got >= q - 1e-3 && got <= q + 2e-2;
    r.detail = fmt(got) + " in [" + fmt(q - 1e-3) + ", " + fmt(q + 2e-2) + "]";
    return r;
  };
  const PlanarNorm square =
      PlanarNorm::polygon({{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}});
  const double sq_bi = jacobian_busemann(square) / jacobian_inscribed(square);
  const double sq_hi =
      jacobian_holmes_thompson(square) / jacobian_inscribed(square);
  std::vector<CheckResult> out;
  out.push_back(window("jacobian: min ht/b over 10000 random bodies", min_hb,
                       q_hb));
  out.push_back(window("jacobian: min b/ir over 10000 random bodies", min_bi,
                       q_bi));
  out.push_back(window("jacobian: min ht/ir over 10000 random bodies", min_hi,
                       q_hi));
  out.push_back(near("jacobian: square body b/ir", sq_bi, q_bi, 1e-9));
  out.push_back(near("jacobian: square body ht/ir", sq_hi, q_hi, 1e-9));
  std::ostringstream usage;
  usage << used << " of " << kBodies << " bodies usable";
  out.push_back({"jacobian: sweep coverage", used >= kBodies - 10,
                 usage.str()});
  return out;
}

std::vector<CheckResult> check_filling_areas(bool parallel) {
  const auto start = Clock::now();
  constexpr std::size_t kGrid = 1024;
  constexpr std::size_t kRadial = 64;
  constexpr std::size_t kAngular = 128;
  const std::vector<JacobianKind> kinds = {JacobianKind::Busemann,
                                           JacobianKind::HolmesThompson,
                                           JacobianKind::InscribedRiemannian};
  const char* kind_names[] = {"busemann", "holmes-thompson", "inscribed"};

  std::vector<std::pair<std::string, LipschitzCurve>> curves;
  curves.emplace_back("unit circle, euclidean plane",
                      unit_circle_curve(NormedTarget::l2(2)));
  curves.emplace_back("unit circle, sup-norm plane",
                      unit_circle_curve(NormedTarget::linf(2)));
  curves.emplace_back(
      "2:1 ellipse, euclidean plane",
      LipschitzCurve::fourier(NormedTarget::l2(2), {{{0.0, 0.0}, {2.0, 0.0}},
                                                    {{0.0, 0.0}, {0.0, 1.0}}}));
  curves.emplace_back(
      "five-harmonic curve, sup-norm plane",
      random_harmonic_curve(NormedTarget::linf(2), 0x5eed0f17ULL, 5));
  curves.emplace_back("kuratowski circle, sup-norm R^8",
                      kuratowski_circle_curve(8, 4096));

  std::vector<CheckResult> out;
  for (const auto& [name, curve] : curves) {
    const double length = curve.length();
    const double bound = length * length / kTwoPi;
    const LipschitzCurve even = curve.constant_speed();
    const HemisphereMap map(even, kGrid);
    const std::vector<AreaResult> areas = area_multi(
        chart_surface(map), kinds, ChartDomain::disc(), kRadial, kAngular,
        1e-2, parallel);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      out.push_back(bounded(
          "filling: " + name + ", " + kind_names[k] + " area vs bound " +
              fmt(bound),
          areas[k].area, bound * (1.0 + 2e-2)));
    }
  }
  const AreaResult identity =
      area(hemisphere_identity_surface(), JacobianKind::Busemann,
           ChartDomain::disc(), kRadial, kAngular, 1e-2, parallel);
  out.push_back(near("filling: hemisphere identity area", identity.area,
                     kTwoPi, 0.01 * kTwoPi));
  out.push_back(bounded("filling: runtime seconds", seconds_since(start),
                        600.0));
  return out;
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed, bool parallel) {
  std::vector<CheckResult> all;
  auto add = [&all](std::vector<CheckResult> part) {
    for (auto& r : part) all.push_back(std::move(r));
  };
  add(check_transport_agreement(seed, parallel));
  add(check_dirac_pairs(seed));
  add(check_embedding_identities(seed, parallel));
  add(check_isometry_convergence(seed, parallel));
  add(check_lipschitz_extension(seed, parallel));
  add(check_g_monotonicity(parallel));
  add(check_jacobian_bounds(seed, parallel));
  add(check_filling_areas(parallel));
  return all;
}

}  // namespace hemifill
