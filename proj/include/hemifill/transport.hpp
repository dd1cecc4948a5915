#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hemifill/measure.hpp"

namespace hemifill {

// 1-Lipschitz piecewise-linear potential on S^1 with slopes +-1. Arc i runs
// from nodes[i] to nodes[i+1] (the last one wraps to nodes[0] + 2*pi).
class DualPotential {
 public:
  DualPotential() = default;
  DualPotential(std::vector<double> nodes, std::vector<double> values,
                std::vector<int> slopes);

  double operator()(double theta) const;
  // Exact integral over [a, b], a <= b <= a + 2*pi.
  double integral(double a, double b) const;

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<int>& slopes() const { return slopes_; }

 private:
  std::size_t locate(double theta) const;
  std::vector<double> nodes_;   // sorted, nodes_[0] == 0
  std::vector<double> values_;  // potential at each node
  std::vector<int> slopes_;     // +-1 on each arc
};

// Balanced cut: a point C and an arc partition S^1 = M u N with
// H^1(M) = H^1(N) = pi such that the cumulative defect
// mu([C, R)) - nu([C, R)) is <= 0 on M and >= 0 on N. `level` is the
// median level of the defect profile measured from angle 0.
struct BalancedCut {
  double cut = 0.0;
  double level = 0.0;
  std::vector<std::pair<double, double>> m_arcs;
  std::vector<std::pair<double, double>> n_arcs;

  double m_length() const;
  double n_length() const;
};

struct TransportResult {
  double distance = 0.0;
  BalancedCut cut;
  DualPotential potential;
};

// W1 on the circle by balanced-cut construction: locates the median level of
// the defect profile, builds the cut, the partition and the +-1-slope
// potential f, and returns the distance as the integral of f against mu - nu.
TransportResult w1_circle(const CircularMeasure& mu, const CircularMeasure& nu);

// Independent route: min over c of the integral of |F_mu - F_nu - c|, the
// shift found exactly as a weighted median of the CDF difference profile.
double w1_cdf_shift(const CircularMeasure& mu, const CircularMeasure& nu);

// Re-checks the defect inequalities of a cut at every cell boundary and atom
// of both measures.
bool validate_balanced_cut(const CircularMeasure& mu, const CircularMeasure& nu,
                           const BalancedCut& cut, double tol);

// Every candidate cut coordinate at the median level, smallest first.
std::vector<double> balanced_cut_candidates(const CircularMeasure& mu,
                                            const CircularMeasure& nu);

// Dense transportation LP solved exactly by successive shortest paths.
// cost is row-major rows x cols; supplies and demands must balance.
struct LpSolution {
  double cost = 0.0;
  std::size_t rows = 0, cols = 0;
  std::vector<double> coupling;  // row-major flow matrix

  double flow(std::size_t i, std::size_t j) const {
    return coupling[i * cols + j];
  }
};
LpSolution transport_lp(const std::vector<double>& cost,
                        const std::vector<double>& supply,
                        const std::vector<double>& demand);

// LP route for atoms-only measures (<= 256 atoms each) with arc-length cost.
LpSolution lp_oracle(const CircularMeasure& mu, const CircularMeasure& nu);

// Distance from a Dirac measure: the integral of d(x, .) against mu.
double dirac_distance_formula(double x, const CircularMeasure& mu);

}  // namespace hemifill
