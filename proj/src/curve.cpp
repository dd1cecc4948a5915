#include "hemifill/curve.hpp"

#include <algorithm>
#include <cmath>

#include "hemifill/angles.hpp"
#include "hemifill/errors.hpp"
#include "hemifill/quadrature.hpp"

namespace hemifill {

LipschitzCurve LipschitzCurve::fourier(
    NormedTarget target, std::vector<std::vector<FourierCoeff>> coeffs) {
  if (coeffs.size() != target.dim || target.dim == 0) {
    throw InputError("fourier curve needs one coefficient row per coordinate");
  }
  for (const auto& row : coeffs) {
    if (row.empty()) throw InputError("fourier coordinate has no terms");
    for (const auto& c : row) {
      if (!std::isfinite(c.a) || !std::isfinite(c.b)) {
        throw InputError("fourier coefficient is not finite");
      }
    }
  }
  LipschitzCurve out(std::move(target), CurveForm::Fourier);
  out.coeffs_ = std::move(coeffs);
  return out;
}

LipschitzCurve LipschitzCurve::samples(
    NormedTarget target, std::vector<std::vector<double>> values) {
  if (values.size() < 2) throw InputError("sampled curve needs 2+ nodes");
  for (const auto& v : values) {
    if (v.size() != target.dim) {
      throw InputError("sampled curve point has the wrong dimension");
    }
    for (double x : v) {
      if (!std::isfinite(x)) throw InputError("sample point is not finite");
    }
  }
  LipschitzCurve out(std::move(target), CurveForm::Samples);
  out.samples_ = std::move(values);
  return out;
}

void LipschitzCurve::eval(double theta, double* out) const {
  const double t = wrap_angle(theta);
  if (form_ == CurveForm::Fourier) {
    for (std::size_t d = 0; d < dim(); ++d) {
      const auto& row = coeffs_[d];
      double acc = row[0].a;
      for (std::size_t k = 1; k < row.size(); ++k) {
        const double kk = static_cast<double>(k);
        acc += row[k].a * std::cos(kk * t) + row[k].b * std::sin(kk * t);
      }
      out[d] = acc;
    }
    return;
  }
  const std::size_t n = samples_.size();
  const double step = kTwoPi / static_cast<double>(n);
  const double u = t / step;
  std::size_t i = std::min(static_cast<std::size_t>(u), n - 1);
  const double frac = u - static_cast<double>(i);
  const auto& p = samples_[i];
  const auto& q = samples_[(i + 1) % n];
  for (std::size_t d = 0; d < dim(); ++d) {
    out[d] = p[d] + frac * (q[d] - p[d]);
  }
}

std::vector<double> LipschitzCurve::operator()(double theta) const {
  std::vector<double> out(dim());
  eval(theta, out.data());
  return out;
}

void LipschitzCurve::derivative(double theta, double* out) const {
  for (std::size_t d = 0; d < dim(); ++d) {
    const auto& row = coeffs_[d];
    double acc = 0.0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const double kk = static_cast<double>(k);
      acc += kk * (row[k].b * std::cos(kk * theta) -
                   row[k].a * std::sin(kk * theta));
    }
    out[d] = acc;
  }
}

double LipschitzCurve::speed(double theta) const {
  std::vector<double> d(dim());
  derivative(theta, d.data());
  return target_.norm(d.data());
}

void LipschitzCurve::integral(double a, double b, double* out) const {
  if (!(0.0 <= a && a <= b && b <= kTwoPi + kSeamTol)) {
    throw InputError("curve integral needs 0 <= a <= b <= 2*pi");
  }
  if (form_ == CurveForm::Fourier) {
    for (std::size_t d = 0; d < dim(); ++d) {
      const auto& row = coeffs_[d];
      double acc = row[0].a * (b - a);
      for (std::size_t k = 1; k < row.size(); ++k) {
        const double kk = static_cast<double>(k);
        acc += row[k].a * (std::sin(kk * b) - std::sin(kk * a)) / kk;
        acc -= row[k].b * (std::cos(kk * b) - std::cos(kk * a)) / kk;
      }
      out[d] = acc;
    }
    return;
  }
  const std::size_t n = samples_.size();
  const double step = kTwoPi / static_cast<double>(n);
  std::fill(out, out + dim(), 0.0);
  // Trapezoid pieces are exact for a piecewise-linear curve.
  const std::size_t first = std::min(static_cast<std::size_t>(a / step), n - 1);
  std::vector<double> lo(dim()), hi(dim());
  for (std::size_t i = first; static_cast<double>(i) * step < b; ++i) {
    const double sa = std::max(a, static_cast<double>(i) * step);
    const double sb = std::min(b, static_cast<double>(i + 1) * step);
    if (sb <= sa) continue;
    eval(sa, lo.data());
    eval(sb, hi.data());
    for (std::size_t d = 0; d < dim(); ++d) {
      out[d] += 0.5 * (lo[d] + hi[d]) * (sb - sa);
    }
  }
}

double LipschitzCurve::lipschitz_bound(std::size_t samples) const {
  if (form_ == CurveForm::Fourier) {
    double best = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
      const double t = kTwoPi * static_cast<double>(i) /
                       static_cast<double>(samples);
      best = std::max(best, speed(t));
    }
    return best;
  }
  const std::size_t n = samples_.size();
  const double step = kTwoPi / static_cast<double>(n);
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double len = target_.distance(samples_[i].data(),
                                        samples_[(i + 1) % n].data());
    best = std::max(best, len / step);
  }
  return best;
}

double LipschitzCurve::length(double tol) const {
  if (form_ == CurveForm::Fourier) {
    return adaptive_simpson([this](double t) { return speed(t); }, 0.0, kTwoPi,
                            tol);
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    acc += target_.distance(samples_[i].data(),
                            samples_[(i + 1) % samples_.size()].data());
  }
  return acc;
}

LipschitzCurve LipschitzCurve::constant_speed(std::size_t samples) const {
  if (samples < 8) throw InputError("constant-speed resampling needs 8+ nodes");
  // Cumulative arc length on a fine grid; per-panel Simpson for the Fourier
  // form, exact segment lengths for the sample form.
  std::size_t panels;
  std::vector<double> node, cum;
  if (form_ == CurveForm::Fourier) {
    panels = std::max<std::size_t>(4 * samples, 16384);
    node.resize(panels + 1);
    cum.resize(panels + 1);
    cum[0] = 0.0;
    const double h = kTwoPi / static_cast<double>(panels);
    double left = speed(0.0);
    for (std::size_t i = 0; i < panels; ++i) {
      node[i] = static_cast<double>(i) * h;
      const double mid = speed(node[i] + 0.5 * h);
      const double right = speed(node[i] + h);
      cum[i + 1] = cum[i] + h / 6.0 * (left + 4.0 * mid + right);
      left = right;
    }
    node[panels] = kTwoPi;
  } else {
    panels = samples_.size();
    node.resize(panels + 1);
    cum.resize(panels + 1);
    cum[0] = 0.0;
    const double h = kTwoPi / static_cast<double>(panels);
    for (std::size_t i = 0; i < panels; ++i) {
      node[i] = static_cast<double>(i) * h;
      cum[i + 1] = cum[i] + target_.distance(
                                samples_[i].data(),
                                samples_[(i + 1) % panels].data());
    }
    node[panels] = kTwoPi;
  }
  const double total = cum[panels];
  if (!(total > 0.0)) throw DegeneracyError("curve has zero length");
  double lo = cum[1] - cum[0], hi = lo;
  for (std::size_t i = 1; i < panels; ++i) {
    lo = std::min(lo, cum[i + 1] - cum[i]);
    hi = std::max(hi, cum[i + 1] - cum[i]);
  }
  if (hi - lo <= 1e-9 * total / static_cast<double>(panels)) {
    return *this;
  }

  std::vector<std::vector<double>> values(samples,
                                          std::vector<double>(dim()));
  std::size_t seg = 0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double s =
        total * static_cast<double>(j) / static_cast<double>(samples);
    while (seg + 1 < panels && cum[seg + 1] < s) ++seg;
    const double span = cum[seg + 1] - cum[seg];
    const double frac = span > 0.0 ? (s - cum[seg]) / span : 0.0;
    const double theta =
        node[seg] + std::clamp(frac, 0.0, 1.0) * (node[seg + 1] - node[seg]);
    eval(theta, values[j].data());
  }
  return LipschitzCurve::samples(target_, std::move(values));
}

}  // namespace hemifill
