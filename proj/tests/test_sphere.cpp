#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <functional>

#include "hemifill/angles.hpp"
#include "hemifill/errors.hpp"
#include "hemifill/rng.hpp"
#include "hemifill/sphere.hpp"

using namespace hemifill;

namespace {

// ---------------------------------------------------------------------------
// Oracles. Everything below recomputes the spherical quantities from scratch
// in R^3, without the closed forms under test: points are unit vectors, the
// boundary is the equator z = 0, distances come from dot products and angles
// from tangent vectors. The closed forms must agree with these.
// ---------------------------------------------------------------------------

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 normalize(Vec3 v) {
  const double n = std::sqrt(dot3(v, v));
  return {v[0] / n, v[1] / n, v[2] / n};
}

double arc(const Vec3& u, const Vec3& v) {
  return std::acos(std::clamp(dot3(u, v), -1.0, 1.0));
}

// Unit tangent at p pointing along the geodesic towards q.
Vec3 tangent_towards(const Vec3& p, const Vec3& q) {
  const double c = dot3(p, q);
  return normalize({q[0] - c * p[0], q[1] - c * p[1], q[2] - c * p[2]});
}

Vec3 equator_point(double t) { return {std::cos(t), std::sin(t), 0.0}; }

// The apex point A_a: on the geodesic leaving C = (1, 0, 0) into the upper
// hemisphere at angle gamma to the equator, positioned so that its nearest
// equator point (its foot) sits at arc length a from C. The hypotenuse s of
// the right triangle C, foot, apex satisfies tan(a) = tan(s) cos(gamma).
Vec3 apex(double gamma, double a) {
  const double s = std::atan2(std::tan(a), std::cos(gamma));
  const Vec3 u = {0.0, std::cos(gamma), std::sin(gamma)};
  return {std::cos(s) + 0.0, std::sin(s) * u[1], std::sin(s) * u[2]};
}

// Signed cosine of the angle at C_t between the geodesic towards the apex
// and the positive equator direction.
double oracle_cos_gamma(double gamma, double a, double t) {
  const Vec3 ct = equator_point(t);
  const Vec3 w = tangent_towards(ct, apex(gamma, a));
  const Vec3 b = {-std::sin(t), std::cos(t), 0.0};
  return dot3(w, b);
}

double central1(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double central2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace

TEST_CASE("boundary distance derivatives match central differences") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double k = rng.uniform(0.05, 0.95);
    const double t = rng.uniform(-kPi + 0.1, kPi - 0.1);
    auto f = [k](double x) { return std::acos(k * std::cos(x)); };
    const BoundaryDistance d = boundary_distance(k, t);
    CHECK(d.value == doctest::Approx(f(t)).epsilon(1e-14));
    CHECK(d.d1 == doctest::Approx(central1(f, t, 1e-5)).epsilon(1e-6));
    CHECK(d.d2 == doctest::Approx(central2(f, t, 1e-4)).epsilon(1e-5));
    auto f2 = [k](double x) { return boundary_distance(k, x).d2; };
    CHECK(d.d3 == doctest::Approx(central1(f2, t, 1e-5)).epsilon(1e-6));
  }
}

TEST_CASE("boundary distance sign structure") {
  for (double k : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    CHECK(boundary_distance(k, 0.0).value == doctest::Approx(std::acos(k)));
    CHECK(boundary_distance(k, kPi).value ==
          doctest::Approx(kPi - std::acos(k)));
    for (int i = 1; i < 40; ++i) {
      const double t = -kPi + kTwoPi * i / 40.0;
      const BoundaryDistance d = boundary_distance(k, t);
      // d is even, increasing on [0, pi]; curvature flips sign at +-pi/2.
      CHECK(d.value == doctest::Approx(boundary_distance(k, -t).value));
      if (t > 0.01 && t < kPi - 0.01) CHECK(d.d1 > 0.0);
      if (std::fabs(t) < kHalfPi - 0.01) CHECK(d.d2 > 0.0);
      if (std::fabs(t) > kHalfPi + 0.01) CHECK(d.d2 < 0.0);
    }
  }
}

TEST_CASE("boundary distance rejects the Dirac regime") {
  CHECK_THROWS_AS(boundary_distance(1.0, 0.3), DegeneracyError);
  CHECK_THROWS_AS(boundary_distance(1.0 - 1e-12, 0.3), DegeneracyError);
  CHECK_THROWS_AS(boundary_distance(-0.1, 0.3), DegeneracyError);
  CHECK_NOTHROW(boundary_distance(0.0, 0.3));
}

TEST_CASE("sphere distance against the 3d dot product") {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const SpherePoint p(rng.angle(), rng.uniform(0.0, kHalfPi));
    const SpherePoint q(rng.angle(), rng.uniform(0.0, kHalfPi));
    const auto up = p.unit3();
    const auto uq = q.unit3();
    const double want = arc({up[0], up[1], up[2]}, {uq[0], uq[1], uq[2]});
    CHECK(sphere_distance(p, q) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(sphere_distance(SpherePoint(0.0, 0.0), SpherePoint(1.0, 0.0)) ==
        doctest::Approx(0.0));
  CHECK(sphere_distance(SpherePoint(0.0, kHalfPi), SpherePoint(kPi, kHalfPi)) ==
        doctest::Approx(kPi));
}

TEST_CASE("foot angle closed forms against the 3d construction") {
  Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const double gamma = rng.uniform(0.05, kHalfPi - 0.05);
    const double a = rng.uniform(0.05, kHalfPi - 0.05);
    const double t = rng.uniform(-kHalfPi + 0.02, kPi - 0.02);

    const Vec3 apex_pt = apex(gamma, a);
    const Vec3 foot = equator_point(a);
    CHECK(foot_cos_c(gamma, a) ==
          doctest::Approx(std::cos(arc(apex_pt, foot))).epsilon(1e-10));
    CHECK(foot_cos_gamma(gamma, a, t) ==
          doctest::Approx(oracle_cos_gamma(gamma, a, t)).epsilon(1e-10));
    CHECK(g_value(gamma, a, t) ==
          doctest::Approx(oracle_cos_gamma(gamma, a, t) +
                          t * std::cos(arc(apex_pt, foot)) / kPi)
              .epsilon(1e-10));

    // Napier's rule on the right triangle and the first variation formula:
    // the t derivative of the distance to the apex is -cos(gamma_{a,t}).
    const double c_a = arc(apex_pt, foot);
    CHECK(1.0 / std::tan(gamma) ==
          doctest::Approx(std::sin(a) / std::tan(c_a)).epsilon(1e-9));
    auto dist_t = [&](double s) { return arc(apex_pt, equator_point(s)); };
    CHECK(central1(dist_t, t, 1e-6) ==
          doctest::Approx(-foot_cos_gamma(gamma, a, t)).epsilon(1e-6));
  }
}

TEST_CASE("foot angle special values") {
  // At a = pi/2 the hypotenuse meets the apex of the geodesic: c_a = gamma.
  CHECK(foot_cos_c(0.7, kHalfPi) == doctest::Approx(std::cos(0.7)));
  // At t = 0 the angle at C is the launch angle itself.
  CHECK(foot_cos_gamma(0.7, 0.4, 0.0) == doctest::Approx(std::cos(0.7)));
  CHECK(g_value(0.7, 0.4, 0.0) == doctest::Approx(std::cos(0.7)));
  // A quarter turn behind the foot the triangle degenerates to c_a itself.
  CHECK(foot_cos_gamma(0.7, 0.4, 0.4 - kHalfPi) ==
        doctest::Approx(foot_cos_c(0.7, 0.4)));
  // Antisymmetry of the angle about the foot.
  CHECK(foot_cos_gamma(0.7, 0.4, 0.4 + 0.3) ==
        doctest::Approx(-foot_cos_gamma(0.7, 0.4, 0.4 - 0.3)));
}

TEST_CASE("g partial derivative against central differences") {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const double gamma = rng.uniform(0.05, kHalfPi - 0.05);
    const double a = rng.uniform(0.05, kHalfPi - 0.05);
    const double t = rng.uniform(-kHalfPi + 0.02, kPi - 0.02);
    auto g_a = [&](double x) { return g_value(gamma, a + x, t); };
    CHECK(g_partial_a(gamma, a, t) ==
          doctest::Approx(central1(g_a, 0.0, 1e-6))
              .epsilon(1e-6)
              .scale(1.0));
  }
}

TEST_CASE("gamma at the orthogonal launch angle degenerates") {
  CHECK_THROWS_AS(foot_cos_c(kHalfPi, 0.4), DegeneracyError);
  CHECK_THROWS_AS(g_value(kHalfPi, 0.4, 0.1), DegeneracyError);
  CHECK_THROWS_AS(foot_cos_c(0.0, 0.4), InputError);
  CHECK_THROWS_AS(foot_cos_c(kPi, 0.4), InputError);
}

TEST_CASE("sphere point construction") {
  const SpherePoint pole(1.7, 0.0);
  CHECK(pole.azimuth == 0.0);  // azimuth is canonicalized at the pole
  CHECK(pole.k() == 0.0);
  CHECK_FALSE(pole.on_boundary());

  const SpherePoint edge(2.1, kHalfPi);
  CHECK(edge.on_boundary());
  CHECK(edge.k() == doctest::Approx(1.0));
  CHECK(edge.foot_azimuth() == doctest::Approx(2.1));

  CHECK_THROWS_AS(SpherePoint(0.0, -0.2), InputError);
  CHECK_THROWS_AS(SpherePoint(0.0, kHalfPi + 0.2), InputError);
}

TEST_CASE("geodesic step moves the right distance in the right direction") {
  Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const SpherePoint p(rng.angle(), rng.uniform(0.1, kHalfPi - 0.1));
    const double eps = rng.uniform(1e-4, 0.05);
    const double psi = rng.angle();
    const SpherePoint q = geodesic_step(p, eps, psi);
    CHECK(sphere_distance(p, q) == doctest::Approx(eps).epsilon(1e-9));
  }
  // psi = 0 walks straight towards the boundary along the meridian.
  const SpherePoint p(1.0, 0.5);
  const SpherePoint down = geodesic_step(p, 0.2, 0.0);
  CHECK(down.azimuth == doctest::Approx(1.0));
  CHECK(down.colatitude == doctest::Approx(0.7));
  const SpherePoint up = geodesic_step(p, 0.2, kPi);
  CHECK(up.colatitude == doctest::Approx(0.3));
  // Steps past the boundary clamp onto it.
  const SpherePoint clamped = geodesic_step(SpherePoint(1.0, kHalfPi - 0.01),
                                            0.1, 0.0);
  CHECK(clamped.on_boundary());
}
