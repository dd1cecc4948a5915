#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "hemifill/angles.hpp"
#include "hemifill/curve.hpp"
#include "hemifill/errors.hpp"
#include "hemifill/norms.hpp"
#include "hemifill/quadrature.hpp"
#include "hemifill/rng.hpp"

using namespace hemifill;

namespace {

LipschitzCurve unit_circle(NormedTarget target) {
  return LipschitzCurve::fourier(
      std::move(target),
      {{{0.0, 0.0}, {1.0, 0.0}}, {{0.0, 0.0}, {0.0, 1.0}}});
}

// Oracle: arc length by dense polygonal approximation in the target norm.
double polyline_length(const LipschitzCurve& c, std::size_t segments) {
  std::vector<double> prev = c(0.0);
  double total = 0.0;
  for (std::size_t i = 1; i <= segments; ++i) {
    const std::vector<double> next =
        c(kTwoPi * static_cast<double>(i) / static_cast<double>(segments));
    total += c.target().distance(prev.data(), next.data());
    prev = next;
  }
  return total;
}

}  // namespace

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(LipschitzCurve::fourier(NormedTarget::l2(2), {{{1.0, 0.0}}}),
                  InputError);  // one coefficient row for a 2d target
  CHECK_THROWS_AS(
      LipschitzCurve::samples(NormedTarget::l2(2), {{1.0, 0.0}}),
      InputError);  // a single node cannot close a loop
  CHECK_THROWS_AS(
      LipschitzCurve::samples(NormedTarget::l2(2), {{1.0}, {0.0}}),
      InputError);  // wrong width
}

TEST_CASE("fourier evaluation is the plain trigonometric sum") {
  const LipschitzCurve c = LipschitzCurve::fourier(
      NormedTarget::l2(2),
      {{{0.5, 0.0}, {1.0, 0.0}, {0.0, 0.25}}, {{0.0, 0.0}, {0.0, 1.0}}});
  for (double t : {0.0, 0.7, 2.0, 5.5}) {
    const std::vector<double> v = c(t);
    CHECK(v[0] == doctest::Approx(0.5 + std::cos(t) + 0.25 * std::sin(2.0 * t))
                      .epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(std::sin(t)).epsilon(1e-14));
  }
}

TEST_CASE("sample curves interpolate linearly and wrap") {
  const LipschitzCurve c = LipschitzCurve::samples(
      NormedTarget::l2(2), {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}});
  const std::vector<double> at_node = c(kHalfPi);
  CHECK(at_node[0] == doctest::Approx(0.0));
  CHECK(at_node[1] == doctest::Approx(1.0));
  const std::vector<double> mid = c(kHalfPi / 2.0);
  CHECK(mid[0] == doctest::Approx(0.5));
  CHECK(mid[1] == doctest::Approx(0.5));
  // last segment wraps back to the first node
  const std::vector<double> wrap = c(2.0 * kPi - kHalfPi / 2.0);
  CHECK(wrap[0] == doctest::Approx(0.5));
  CHECK(wrap[1] == doctest::Approx(-0.5));
}

TEST_CASE("lengths of the circle in different norms") {
  CHECK(unit_circle(NormedTarget::l2(2)).length() ==
        doctest::Approx(kTwoPi).epsilon(1e-10));
  // In sup norm the speed is max(|sin|, |cos|); integrating gives 4 sqrt(2).
  CHECK(unit_circle(NormedTarget::linf(2)).length() ==
        doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-8));
  // In l1 the speed is |sin| + |cos|, total 8.
  CHECK(unit_circle(NormedTarget::l1(2)).length() ==
        doctest::Approx(8.0).epsilon(1e-8));
}

TEST_CASE("length against the polyline oracle") {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<FourierCoeff>> coeffs(2);
    for (auto& row : coeffs) {
      row.push_back({rng.uniform(-0.5, 0.5), 0.0});
      for (int k = 1; k <= 4; ++k) {
        row.push_back({rng.uniform(-0.4, 0.4) / k, rng.uniform(-0.4, 0.4) / k});
      }
    }
    const LipschitzCurve c =
        LipschitzCurve::fourier(NormedTarget::linf(2), coeffs);
    CHECK(c.length() ==
          doctest::Approx(polyline_length(c, 20000)).epsilon(1e-5));
  }
}

TEST_CASE("sample curve length is the exact segment sum") {
  const LipschitzCurve c = LipschitzCurve::samples(
      NormedTarget::l2(2), {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}});
  CHECK(c.length() == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK(c.lipschitz_bound() ==
        doctest::Approx(std::sqrt(2.0) / kHalfPi).epsilon(1e-13));
}

TEST_CASE("integral matches adaptive quadrature per coordinate") {
  Rng rng(52);
  const LipschitzCurve c = LipschitzCurve::fourier(
      NormedTarget::l2(2),
      {{{0.3, 0.0}, {1.0, -0.2}, {0.1, 0.4}}, {{-0.5, 0.0}, {0.3, 1.0}}});
  for (int trial = 0; trial < 20; ++trial) {
    const double a = rng.uniform(0.0, kTwoPi);
    const double b = rng.uniform(a, kTwoPi);
    std::vector<double> got(2);
    c.integral(a, b, got.data());
    for (int coord = 0; coord < 2; ++coord) {
      const double want = adaptive_simpson(
          [&](double t) { return c(t)[coord]; }, a, b, 1e-12);
      CHECK(got[coord] == doctest::Approx(want).epsilon(1e-10));
    }
  }
  std::vector<double> full(2);
  c.integral(0.0, kTwoPi, full.data());
  CHECK(full[0] == doctest::Approx(0.3 * kTwoPi).epsilon(1e-12));
  CHECK(full[1] == doctest::Approx(-0.5 * kTwoPi).epsilon(1e-12));
  CHECK_THROWS_AS(c.integral(1.0, 0.5, full.data()), InputError);
}

TEST_CASE("sample curve integral is the exact trapezoid") {
  const LipschitzCurve c = LipschitzCurve::samples(
      NormedTarget::l2(1), {{0.0}, {1.0}, {0.0}, {1.0}});
  std::vector<double> got(1);
  c.integral(0.0, kTwoPi, got.data());
  CHECK(got[0] == doctest::Approx(kPi).epsilon(1e-13));
  c.integral(0.0, kHalfPi, got.data());
  CHECK(got[0] == doctest::Approx(kHalfPi * 0.5).epsilon(1e-13));
}

TEST_CASE("lipschitz bound dominates sampled difference quotients") {
  Rng rng(53);
  std::vector<std::vector<FourierCoeff>> coeffs(2);
  for (auto& row : coeffs) {
    row.push_back({rng.uniform(-0.5, 0.5), 0.0});
    for (int k = 1; k <= 5; ++k) {
      row.push_back({rng.uniform(-0.3, 0.3) / k, rng.uniform(-0.3, 0.3) / k});
    }
  }
  const LipschitzCurve c =
      LipschitzCurve::fourier(NormedTarget::linf(2), coeffs);
  const double bound = c.lipschitz_bound();
  for (int trial = 0; trial < 300; ++trial) {
    const double s = rng.angle();
    const double t = rng.angle();
    if (circle_distance(s, t) < 1e-6) continue;
    const std::vector<double> u = c(s);
    const std::vector<double> v = c(t);
    const double ratio =
        c.target().distance(u.data(), v.data()) / circle_distance(s, t);
    CHECK(ratio <= bound * (1.0 + 1e-6));
  }
}

TEST_CASE("constant speed reparametrization") {
  // The unit circle is already constant speed; the reparametrization must
  // return it unchanged rather than resampling.
  const LipschitzCurve circle = unit_circle(NormedTarget::l2(2));
  const LipschitzCurve same = circle.constant_speed();
  CHECK(same.form() == CurveForm::Fourier);
  for (double t : {0.0, 1.0, 3.0}) {
    CHECK(same(t)[0] == doctest::Approx(circle(t)[0]).epsilon(1e-14));
  }

  // An uneven ellipse picks up constant speed after reparametrization.
  const LipschitzCurve ellipse = LipschitzCurve::fourier(
      NormedTarget::l2(2),
      {{{0.0, 0.0}, {2.0, 0.0}}, {{0.0, 0.0}, {0.0, 1.0}}});
  const LipschitzCurve even = ellipse.constant_speed();
  const double len = ellipse.length();
  CHECK(even.length() == doctest::Approx(len).epsilon(1e-6));
  CHECK(even.lipschitz_bound() == doctest::Approx(len / kTwoPi).epsilon(1e-4));
  // endpoints and trace are preserved
  CHECK(even(0.0)[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(even(0.0)[1] == doctest::Approx(0.0).scale(1.0));
  for (double t : {0.5, 1.5, 4.0}) {
    const std::vector<double> p = even(t);
    const double on_ellipse =
        p[0] * p[0] / 4.0 + p[1] * p[1];  // implicit equation
    CHECK(on_ellipse == doctest::Approx(1.0).epsilon(1e-6));
  }
}
