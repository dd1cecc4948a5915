#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "hemifill/angles.hpp"
#include "hemifill/errors.hpp"
#include "hemifill/measure.hpp"
#include "hemifill/quadrature.hpp"
#include "hemifill/rng.hpp"

using namespace hemifill;

namespace {

// Oracle: interval mass by brute force, summing cell overlaps and atoms one
// by one on the unrolled line [start, start + len).
double slow_interval_mass(const CircularMeasure& mu, double start,
                          double len) {
  const double w = mu.cell_width();
  double total = 0.0;
  for (std::size_t k = 0; k < mu.grid_size(); ++k) {
    for (int rep = -1; rep <= 1; ++rep) {
      const double lo = w * static_cast<double>(k) + kTwoPi * rep;
      const double hi = lo + w;
      const double cl = std::max(lo, start);
      const double ch = std::min(hi, start + len);
      if (ch > cl) total += mu.density()[k] * (ch - cl);
    }
  }
  for (const Atom& a : mu.atoms()) {
    for (int rep = -1; rep <= 1; ++rep) {
      const double p = a.pos + kTwoPi * rep;
      if (p >= start && p < start + len) total += a.mass;
    }
  }
  return total;
}

CircularMeasure random_mixed(Rng& rng, std::size_t n, std::size_t atom_count) {
  std::vector<double> density(n);
  double dens_total = 0.0;
  for (auto& d : density) {
    d = rng.uniform(0.0, 1.0);
    dens_total += d * kTwoPi / static_cast<double>(n);
  }
  std::vector<Atom> atoms(atom_count);
  double atom_total = 0.0;
  for (auto& a : atoms) {
    a.pos = rng.angle();
    a.mass = rng.uniform(0.1, 1.0);
    atom_total += a.mass;
  }
  const double share = atom_count == 0 ? 0.0 : 0.3;
  for (auto& d : density) d *= (1.0 - share) / dens_total;
  for (auto& a : atoms) a.mass *= share / atom_total;
  return CircularMeasure(n, std::move(density), std::move(atoms));
}

}  // namespace

TEST_CASE("construction validates the total mass and the atom range") {
  CHECK_THROWS_AS(CircularMeasure(8, std::vector<double>(8, 1.0), {}),
                  InputError);
  CHECK_THROWS_AS(CircularMeasure::atoms_only({{0.5, 0.5}}), InputError);
  CHECK_THROWS_AS(CircularMeasure::atoms_only({{0.5, -0.2}, {1.0, 1.2}}),
                  InputError);
  CHECK_NOTHROW(CircularMeasure::atoms_only({{0.5, 0.5}, {1.5, 0.5}}));
  CHECK_THROWS_AS(CircularMeasure(0, {}, {{0.5, 1.0}}), InputError);
  // Positions outside [0, 2*pi) wrap rather than fail.
  const CircularMeasure wrapped = CircularMeasure::dirac(-0.5);
  CHECK(wrapped.atoms()[0].pos == doctest::Approx(kTwoPi - 0.5));
}

TEST_CASE("atoms are stored sorted by position") {
  const CircularMeasure mu =
      CircularMeasure::atoms_only({{4.0, 0.25}, {1.0, 0.5}, {4.0, 0.25}});
  REQUIRE(mu.atoms().size() >= 2);
  for (std::size_t i = 1; i < mu.atoms().size(); ++i) {
    CHECK(mu.atoms()[i - 1].pos <= mu.atoms()[i].pos);
  }
  CHECK(mu.total_mass() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cdfs are exact prefix masses") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const CircularMeasure mu = random_mixed(rng, 16, 3);
    for (int i = 0; i <= 32; ++i) {
      const double x = kTwoPi * i / 32.0;
      const double want = slow_interval_mass(mu, 0.0, x);
      CHECK(mu.density_cdf(x) + mu.atom_cdf(x) ==
            doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("interval mass agrees with the brute force oracle and is additive") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const CircularMeasure mu = random_mixed(rng, 12, 4);
    const double start = rng.angle();
    const double len = rng.uniform(0.0, kTwoPi);
    CHECK(interval_mass(mu, start, len) ==
          doctest::Approx(slow_interval_mass(mu, start, len))
              .epsilon(1e-12));
    const double split = rng.uniform(0.0, len);
    CHECK(interval_mass(mu, start, len) ==
          doctest::Approx(interval_mass(mu, start, split) +
                          interval_mass(mu, start + split, len - split))
              .epsilon(1e-12));
    CHECK(interval_mass(mu, start, kTwoPi) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("interval mass endpoint conventions") {
  const CircularMeasure mu = CircularMeasure::dirac(1.0);
  CHECK(interval_mass(mu, 1.0, 0.5) == doctest::Approx(1.0));   // closed left
  CHECK(interval_mass(mu, 0.5, 0.5) == doctest::Approx(0.0));   // open right
  CHECK(interval_mass(mu, 0.5, 0.6) == doctest::Approx(1.0));
}

TEST_CASE("rotation shifts every cell and atom") {
  Rng rng(23);
  const CircularMeasure mu = random_mixed(rng, 16, 3);
  const double shift = 3.0 * kTwoPi / 16.0;  // whole cells, exact
  const CircularMeasure nu = rotate(mu, shift);
  for (std::size_t k = 0; k < 16; ++k) {
    CHECK(nu.density()[(k + 3) % 16] == doctest::Approx(mu.density()[k]));
  }
  for (std::size_t i = 0; i < mu.atoms().size(); ++i) {
    const double moved = wrap_angle(mu.atoms()[i].pos + shift);
    bool found = false;
    for (const Atom& a : nu.atoms()) {
      if (std::fabs(a.pos - moved) < 1e-12 &&
          std::fabs(a.mass - mu.atoms()[i].mass) < 1e-12)
        found = true;
    }
    CHECK(found);
  }
  // A non-cell-aligned rotation re-bins conservatively: every target cell
  // holds exactly the mass of its pulled-back source interval.
  const CircularMeasure rho = rotate(mu, 0.37);
  const double w = rho.cell_width();
  for (std::size_t k = 0; k < 16; ++k) {
    const double cell = interval_mass(rho, static_cast<double>(k) * w, w);
    const double source =
        interval_mass(mu, static_cast<double>(k) * w - 0.37, w);
    CHECK(cell == doctest::Approx(source).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("antipodal pushforward and invariance") {
  Rng rng(24);
  const CircularMeasure mu = random_mixed(rng, 16, 2);
  const CircularMeasure pushed = antipodal_pushforward(mu);
  CHECK(pushed.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(is_antipodally_invariant(mu, 1e-9));
  const CircularMeasure sym = convex_combination(0.5, mu, 0.5, pushed);
  CHECK(is_antipodally_invariant(sym, 1e-9));
  CHECK(is_antipodally_invariant(CircularMeasure::uniform(8), 1e-12));
}

TEST_CASE("antipodally invariant measures see every point at mean distance") {
  // For an antipodally invariant probability measure the average circle
  // distance to any base point is pi/2: opposite points contribute pi total.
  Rng rng(25);
  const CircularMeasure raw = random_mixed(rng, 32, 4);
  const CircularMeasure nu =
      convex_combination(0.5, raw, 0.5, antipodal_pushforward(raw));
  for (int i = 0; i < 8; ++i) {
    const double base = rng.angle();
    const double avg = integrate_against(
        nu, [base](double x) { return circle_distance(base, x); }, 1e-10);
    CHECK(avg == doctest::Approx(kHalfPi).epsilon(1e-8));
  }
}

TEST_CASE("integrate_against matches quadrature plus atom sums") {
  Rng rng(26);
  const CircularMeasure mu = random_mixed(rng, 8, 2);
  auto phi = [](double x) { return std::cos(x) + 0.5 * std::sin(3.0 * x); };
  double want = 0.0;
  const double w = mu.cell_width();
  for (std::size_t k = 0; k < 8; ++k) {
    const double d = mu.density()[k];
    want += d * adaptive_simpson(phi, w * k, w * (k + 1), 1e-12);
  }
  for (const Atom& a : mu.atoms()) want += a.mass * phi(a.pos);
  CHECK(integrate_against(mu, phi, 1e-11) ==
        doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("convex combinations mix masses linearly") {
  Rng rng(27);
  const CircularMeasure mu = random_mixed(rng, 16, 2);
  const CircularMeasure nu = random_mixed(rng, 16, 3);
  const CircularMeasure mix = convex_combination(0.25, mu, 0.75, nu);
  CHECK(mix.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  const double s = rng.angle();
  CHECK(interval_mass(mix, s, 1.1) ==
        doctest::Approx(0.25 * interval_mass(mu, s, 1.1) +
                        0.75 * interval_mass(nu, s, 1.1))
            .epsilon(1e-12));
  CHECK_THROWS_AS(convex_combination(0.5, mu, 0.6, nu), InputError);
  CHECK_THROWS_AS(
      convex_combination(0.5, mu, 0.5, CircularMeasure::uniform(8)),
      InputError);
}

TEST_CASE("pushforward conserves mass and maps atoms exactly") {
  Rng rng(28);
  const CircularMeasure mu = random_mixed(rng, 16, 3);
  auto f = [](double theta) {
    return std::vector<double>{std::cos(theta), std::sin(theta),
                               std::cos(2.0 * theta)};
  };
  const DiscreteCloud cloud = pushforward(mu, f, 3, 4);
  CHECK(cloud.dim == 3);
  CHECK(cloud.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
  // Atom images appear with their exact masses.
  for (const Atom& a : mu.atoms()) {
    bool found = false;
    for (std::size_t i = 0; i < cloud.count(); ++i) {
      const double* p = cloud.point(i);
      if (std::fabs(p[0] - std::cos(a.pos)) < 1e-12 &&
          std::fabs(p[1] - std::sin(a.pos)) < 1e-12 &&
          std::fabs(cloud.weights[i] - a.mass) < 1e-12)
        found = true;
    }
    CHECK(found);
  }
  const CircularMeasure circle =
      pushforward_circle(mu, [](double t) { return wrap_angle(2.0 * t); }, 4);
  CHECK(circle.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("from_cell_masses divides by the cell width") {
  const CircularMeasure mu =
      CircularMeasure::from_cell_masses({0.25, 0.25, 0.25, 0.25}, {});
  CHECK(mu.grid_size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(mu.cell_mass(k) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(mu.density()[k] == doctest::Approx(0.25 / mu.cell_width()));
  }
}
