#pragma once

#include <cstddef>
#include <vector>

#include "hemifill/norms.hpp"

namespace hemifill {

struct FourierCoeff {
  double a = 0.0;  // cos weight
  double b = 0.0;  // sin weight
};

enum class CurveForm { Fourier, Samples };

// Closed Lipschitz curve eta : S^1 -> (R^dim, |.|), stored either as a
// trigonometric polynomial per coordinate (harmonic 0 is the constant term)
// or as uniformly spaced samples interpolated linearly with wraparound.
class LipschitzCurve {
 public:
  static LipschitzCurve fourier(NormedTarget target,
                                std::vector<std::vector<FourierCoeff>> coeffs);
  // values[i] is the point at angle 2*pi*i/values.size(); at least 2 needed.
  static LipschitzCurve samples(NormedTarget target,
                                std::vector<std::vector<double>> values);

  const NormedTarget& target() const { return target_; }
  std::size_t dim() const { return target_.dim; }
  CurveForm form() const { return form_; }

  void eval(double theta, double* out) const;
  std::vector<double> operator()(double theta) const;

  // Componentwise exact integral of eta over [a, b], 0 <= a <= b <= 2*pi.
  void integral(double a, double b, double* out) const;

  // Largest speed in the target norm: sampled for the Fourier form, the
  // exact maximum segment ratio for the sample form.
  double lipschitz_bound(std::size_t samples = 8192) const;

  // Curve length in the target norm.
  double length(double tol = 1e-10) const;

  // Arc-length reparametrization resampled at `samples` nodes. Returns the
  // curve unchanged when its speed is already constant within 1e-9.
  LipschitzCurve constant_speed(std::size_t samples = 8192) const;

  const std::vector<std::vector<FourierCoeff>>& coeffs() const {
    return coeffs_;
  }
  const std::vector<std::vector<double>>& sample_values() const {
    return samples_;
  }

 private:
  LipschitzCurve(NormedTarget target, CurveForm form)
      : target_(std::move(target)), form_(form) {}

  void derivative(double theta, double* out) const;  // Fourier only
  double speed(double theta) const;

  NormedTarget target_;
  CurveForm form_;
  std::vector<std::vector<FourierCoeff>> coeffs_;  // [dim][harmonic]
  std::vector<std::vector<double>> samples_;       // [node][dim]
};

}  // namespace hemifill
