#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "hemifill/angles.hpp"
#include "hemifill/errors.hpp"
#include "hemifill/measure.hpp"
#include "hemifill/rng.hpp"
#include "hemifill/transport.hpp"

using namespace hemifill;

namespace {

CircularMeasure random_atoms(Rng& rng, std::size_t count) {
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

CircularMeasure random_density(Rng& rng, std::size_t n) {
  std::vector<double> cells(n);
  double total = 0.0;
  for (auto& c : cells) {
    c = rng.uniform(0.05, 1.0);
    total += c;
  }
  for (auto& c : cells) c /= total;
  return CircularMeasure::from_cell_masses(std::move(cells), {});
}

// 1-Lipschitz function on the circle: a minimum of distance cones. Used to
// probe the Kantorovich-Rubinstein dual side independently of the solver's
// own potential.
struct ConeMin {
  std::vector<double> centers, offsets;

  double operator()(double x) const {
    double best = circle_distance(x, centers[0]) + offsets[0];
    for (std::size_t i = 1; i < centers.size(); ++i) {
      best = std::min(best, circle_distance(x, centers[i]) + offsets[i]);
    }
    return best;
  }
};

double atom_integral(const CircularMeasure& mu,
                     const std::function<double(double)>& f) {
  double acc = 0.0;
  for (const Atom& a : mu.atoms()) acc += a.mass * f(a.pos);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hand-enumerated instances pin the solvers before any property sweeps run.
// ---------------------------------------------------------------------------

TEST_CASE("hand picked transport instances") {
  // Two Diracs: mass travels the shorter arc.
  CHECK(w1_circle(CircularMeasure::dirac(0.0), CircularMeasure::dirac(1.0))
            .distance == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(w1_circle(CircularMeasure::dirac(0.5), CircularMeasure::dirac(5.5))
            .distance ==
        doctest::Approx(kTwoPi - 5.0).epsilon(1e-13));

  // One source split to two opposite sinks: each half moves a quarter turn.
  const CircularMeasure split = CircularMeasure::atoms_only(
      {{kHalfPi, 0.5}, {3.0 * kHalfPi, 0.5}});
  CHECK(w1_circle(CircularMeasure::dirac(0.0), split).distance ==
        doctest::Approx(kHalfPi).epsilon(1e-13));

  // Uniform to a Dirac: every coupling costs the mean cone distance pi/2.
  CHECK(w1_circle(CircularMeasure::uniform(64), CircularMeasure::dirac(0.0))
            .distance == doctest::Approx(kHalfPi).epsilon(1e-12));

  // Identical measures.
  Rng rng(31);
  const CircularMeasure mu = random_atoms(rng, 7);
  CHECK(w1_circle(mu, mu).distance == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("dense LP solver on a hand checkable instance") {
  // Supplies (2, 1), demands (1, 2), costs [[0, 2], [3, 1]]: the cheap plan
  // ships 1 from the first source to each sink and 1 from the second to the
  // second sink, at cost 0 + 2 + 1 = 3.
  const LpSolution s =
      transport_lp({0.0, 2.0, 3.0, 1.0}, {2.0, 1.0}, {1.0, 2.0});
  CHECK(s.cost == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.flow(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.flow(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.flow(1, 1) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(transport_lp({1.0}, {1.0}, {2.0}), InputError);
  CHECK_THROWS_AS(transport_lp({-1.0}, {1.0}, {1.0}), InputError);
  CHECK_THROWS_AS(transport_lp({1.0, 2.0}, {1.0}, {0.5}), InputError);
}

TEST_CASE("lp oracle marginals cover the inputs") {
  Rng rng(32);
  const CircularMeasure mu = random_atoms(rng, 9);
  const CircularMeasure nu = random_atoms(rng, 5);
  const LpSolution s = lp_oracle(mu, nu);
  std::vector<double> row(9, 0.0), col(5, 0.0);
  for (std::size_t i = 0; i < s.rows; ++i) {
    for (std::size_t j = 0; j < s.cols; ++j) {
      row[i] += s.flow(i, j);
      col[j] += s.flow(i, j);
    }
  }
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(row[i] == doctest::Approx(mu.atoms()[i].mass).epsilon(1e-12));
  }
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(col[j] == doctest::Approx(nu.atoms()[j].mass).epsilon(1e-12));
  }
  CHECK_THROWS_AS(lp_oracle(CircularMeasure::uniform(8), nu), InputError);
}

// ---------------------------------------------------------------------------
// Property sweeps.
// ---------------------------------------------------------------------------

TEST_CASE("three solver routes agree on random atomic pairs") {
  Rng rng(33);
  for (int trial = 0; trial < 120; ++trial) {
    const CircularMeasure mu = random_atoms(rng, 1 + rng.below(12));
    const CircularMeasure nu = random_atoms(rng, 1 + rng.below(12));
    const double lp = lp_oracle(mu, nu).cost;
    CHECK(w1_circle(mu, nu).distance == doctest::Approx(lp).epsilon(1e-9));
    CHECK(w1_cdf_shift(mu, nu) == doctest::Approx(lp).epsilon(1e-9));
  }
}

TEST_CASE("cut and cdf routes agree on density and mixed pairs") {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const CircularMeasure mu = random_density(rng, 8 + 4 * rng.below(5));
    const CircularMeasure nu =
        trial % 2 == 0 ? random_density(rng, mu.grid_size())
                       : random_atoms(rng, 1 + rng.below(10));
    const double via_cut = w1_circle(mu, nu).distance;
    const double via_cdf = w1_cdf_shift(mu, nu);
    CHECK(via_cut == doctest::Approx(via_cdf).epsilon(1e-10));
  }
}

TEST_CASE("metric axioms on random triples") {
  Rng rng(35);
  for (int trial = 0; trial < 80; ++trial) {
    const CircularMeasure a = random_atoms(rng, 1 + rng.below(8));
    const CircularMeasure b = random_atoms(rng, 1 + rng.below(8));
    const CircularMeasure c = random_atoms(rng, 1 + rng.below(8));
    const double ab = w1_circle(a, b).distance;
    const double ba = w1_circle(b, a).distance;
    const double bc = w1_circle(b, c).distance;
    const double ac = w1_circle(a, c).distance;
    CHECK(ab >= 0.0);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-11));
    CHECK(ac <= ab + bc + 1e-11);
    CHECK(ab <= kPi + 1e-12);  // diameter of P_1(S^1) is the circle diameter
  }
}

TEST_CASE("dual potential certifies the optimum") {
  Rng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const CircularMeasure mu = random_atoms(rng, 2 + rng.below(10));
    const CircularMeasure nu = random_atoms(rng, 2 + rng.below(10));
    const TransportResult r = w1_circle(mu, nu);

    // The returned potential is 1-Lipschitz and attains the distance.
    const double attained = atom_integral(mu, std::cref(r.potential)) -
                            atom_integral(nu, std::cref(r.potential));
    CHECK(attained == doctest::Approx(r.distance).epsilon(1e-10));
    for (int i = 0; i < 64; ++i) {
      const double x = rng.angle();
      const double y = rng.angle();
      CHECK(std::fabs(r.potential(x) - r.potential(y)) <=
            circle_distance(x, y) + 1e-10);
    }

    // No random 1-Lipschitz competitor beats it.
    for (int probe = 0; probe < 50; ++probe) {
      ConeMin f;
      const std::size_t terms = 1 + rng.below(4);
      for (std::size_t j = 0; j < terms; ++j) {
        f.centers.push_back(rng.angle());
        f.offsets.push_back(rng.uniform(0.0, 2.0));
      }
      const double value = atom_integral(mu, f) - atom_integral(nu, f);
      CHECK(value <= r.distance + 1e-10);
    }
  }
}

TEST_CASE("balanced cut validates and every candidate certifies") {
  // Fourfold symmetric pair: several cut points balance simultaneously.
  const CircularMeasure mu =
      CircularMeasure::atoms_only({{0.0, 0.5}, {kPi, 0.5}});
  const CircularMeasure nu = CircularMeasure::atoms_only(
      {{kHalfPi, 0.5}, {3.0 * kHalfPi, 0.5}});
  const TransportResult r = w1_circle(mu, nu);
  CHECK(r.distance == doctest::Approx(kHalfPi).epsilon(1e-12));
  CHECK(validate_balanced_cut(mu, nu, r.cut, 1e-9));
  CHECK(r.cut.m_length() == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(r.cut.n_length() == doctest::Approx(kPi).epsilon(1e-9));

  // Rebuild the partition potential from the arcs alone and integrate; the
  // duality identity must reproduce the distance.
  auto slope_at = [&](double x) {
    for (const auto& [a, b] : r.cut.m_arcs) {
      if ((x >= a && x < b) || (x + kTwoPi >= a && x + kTwoPi < b)) return 1;
    }
    return -1;
  };
  std::vector<double> nodes = {0.0};
  for (const auto& [a, b] : r.cut.m_arcs) {
    nodes.push_back(wrap_angle(a));
    nodes.push_back(wrap_angle(b));
  }
  std::sort(nodes.begin(), nodes.end());
  auto potential = [&](double x) {
    double value = 0.0, at = 0.0;
    for (double node : nodes) {
      if (node >= x) break;
      value += slope_at(0.5 * (at + node)) * (node - at);
      at = node;
    }
    return value + slope_at(0.5 * (at + x)) * (x - at);
  };
  const double rebuilt =
      atom_integral(mu, potential) - atom_integral(nu, potential);
  CHECK(rebuilt == doctest::Approx(r.distance).epsilon(1e-10));

  // All candidate cut coordinates sit at the median level, so pairing any
  // of them with the partition keeps the certificate valid, and the solver
  // tie-breaks to the smallest one.
  const std::vector<double> cuts = balanced_cut_candidates(mu, nu);
  CHECK(cuts.size() >= 2);
  for (double c : cuts) {
    BalancedCut probe = r.cut;
    probe.cut = c;
    CHECK(validate_balanced_cut(mu, nu, probe, 1e-9));
    CHECK(r.cut.cut <= c + 1e-12);
  }
}

TEST_CASE("candidates on random instances all validate") {
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const CircularMeasure mu = random_atoms(rng, 2 + rng.below(8));
    const CircularMeasure nu = random_atoms(rng, 2 + rng.below(8));
    const TransportResult r = w1_circle(mu, nu);
    for (double c : balanced_cut_candidates(mu, nu)) {
      BalancedCut probe = r.cut;
      probe.cut = c;
      CHECK(validate_balanced_cut(mu, nu, probe, 1e-9));
    }
  }
}

TEST_CASE("perturbed cuts fail validation") {
  Rng rng(40);
  const CircularMeasure mu = random_atoms(rng, 6);
  const CircularMeasure nu = random_atoms(rng, 6);
  const TransportResult r = w1_circle(mu, nu);
  // Shrinking an arc breaks the equal-length requirement.
  BalancedCut bad = r.cut;
  REQUIRE(!bad.m_arcs.empty());
  bad.m_arcs[0].second -= 0.3;
  CHECK_FALSE(validate_balanced_cut(mu, nu, bad, 1e-9));
}

TEST_CASE("dirac distance formula shortcut") {
  Rng rng(38);
  for (int trial = 0; trial < 40; ++trial) {
    const CircularMeasure mu = random_atoms(rng, 1 + rng.below(10));
    const double q = rng.angle();
    const double direct = dirac_distance_formula(q, mu);
    const double solved = w1_circle(mu, CircularMeasure::dirac(q)).distance;
    CHECK(direct == doctest::Approx(solved).epsilon(1e-10));
  }
}

TEST_CASE("translation equivariance of the distance") {
  Rng rng(39);
  const CircularMeasure mu = random_atoms(rng, 8);
  const CircularMeasure nu = random_atoms(rng, 5);
  const double base = w1_circle(mu, nu).distance;
  for (double shift : {0.37, 1.0, kPi, 4.2}) {
    CHECK(w1_circle(rotate(mu, shift), rotate(nu, shift)).distance ==
          doctest::Approx(base).epsilon(1e-11));
  }
}
