#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hemifill/curve.hpp"
#include "hemifill/embedding.hpp"
#include "hemifill/measure.hpp"

namespace hemifill {

// Weighted mean of a cloud; the barycenter map P_1(X) -> X is 1-Lipschitz
// for any normed target, which is what makes the extension below work.
std::vector<double> barycenter(const DiscreteCloud& cloud);

// Vector integral of the curve against mu: atoms evaluate the curve exactly,
// density cells use the exact per-cell curve integrals.
std::vector<double> extend_measure(const LipschitzCurve& curve,
                                   const CircularMeasure& mu);

// The linear geodesic bicombing on measures, (1 - t) mu + t nu.
CircularMeasure bicombing(const CircularMeasure& mu, const CircularMeasure& nu,
                          double t);

// Lipschitz extension F = barycenter . eta_* . iota of a closed curve eta
// from the boundary circle to the closed hemisphere. Boundary points
// evaluate eta directly; interior points integrate eta against iota(P) using
// per-cell curve integrals precomputed once, so a single evaluation costs
// O(grid) with no measure allocation.
class HemisphereMap {
 public:
  HemisphereMap(LipschitzCurve curve, std::size_t grid_size);

  std::size_t dim() const { return curve_.dim(); }
  std::size_t grid_size() const { return n_; }
  const LipschitzCurve& curve() const { return curve_; }

  void eval(const SpherePoint& p, double* out) const;
  std::vector<double> operator()(const SpherePoint& p) const;

 private:
  LipschitzCurve curve_;
  std::size_t n_;
  std::vector<double> cell_integrals_;  // n x dim, integral of eta per cell
  std::vector<double> total_integral_;  // integral of eta over S^1
};

struct LipschitzPair {
  SpherePoint p, q;
  double sphere = 0.0;   // d(p, q) on the hemisphere
  double image = 0.0;    // |F(p) - F(q)| in the target norm
};

struct LipschitzReport {
  std::size_t pairs = 0;
  double curve_bound = 0.0;  // Lipschitz bound of the boundary curve
  double max_ratio = 0.0;    // largest image / sphere ratio seen
  LipschitzPair worst;
};

// Samples pair families (interior-interior, boundary-boundary, mixed, and
// near-diagonal pairs with separations down to min_separation) and reports
// the largest distortion ratio of the extension. Deterministic for a fixed
// seed independent of the parallel switch.
LipschitzReport certify_lipschitz(const HemisphereMap& map, std::size_t pairs,
                                  std::uint64_t seed, bool parallel,
                                  double min_separation = 1e-3);

}  // namespace hemifill
