#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hemifill/angles.hpp"

namespace hemifill {

struct Atom {
  double pos;   // in [0, 2*pi)
  double mass;  // > 0
};

// Borel probability measure on S^1: a piecewise-constant density on N equal
// cells [2*pi*k/N, 2*pi*(k+1)/N) plus a finite list of atoms. Atoms are kept
// exact and never smeared onto the grid. Total mass must be 1 within 1e-12.
class CircularMeasure {
 public:
  CircularMeasure(std::size_t grid_size, std::vector<double> density,
                  std::vector<Atom> atoms);

  static CircularMeasure uniform(std::size_t grid_size);
  static CircularMeasure dirac(double pos);
  static CircularMeasure atoms_only(std::vector<Atom> atoms);
  // Cell masses instead of densities; atoms may be empty.
  static CircularMeasure from_cell_masses(std::vector<double> cell_masses,
                                          std::vector<Atom> atoms);

  std::size_t grid_size() const { return n_; }
  double cell_width() const { return kTwoPi / static_cast<double>(n_); }
  const std::vector<double>& density() const { return density_; }
  const std::vector<Atom>& atoms() const { return atoms_; }  // sorted by pos

  double cell_mass(std::size_t k) const;
  double total_mass() const;

  // Mass of the density part over [0, x), x in [0, 2*pi]. Piecewise linear
  // and exact for the stored density.
  double density_cdf(double x) const;
  // Atom mass over [0, x).
  double atom_cdf(double x) const;

 private:
  std::size_t n_;
  std::vector<double> density_;
  std::vector<Atom> atoms_;
  std::vector<double> prefix_;  // prefix_[k] = density mass of cells [0, k)
};

// Mass of the half-open arc [start, start + arc_len), arc_len in [0, 2*pi].
double interval_mass(const CircularMeasure& mu, double start, double arc_len);

// a*mu + b*nu with a + b = 1, a, b >= 0. Grids must agree.
CircularMeasure convex_combination(double a, const CircularMeasure& mu,
                                   double b, const CircularMeasure& nu);

// Image under rotation by angle. Exact cell shift when angle is a multiple
// of the cell width; conservative re-binning otherwise.
CircularMeasure rotate(const CircularMeasure& mu, double angle);

// Image under the antipodal map t -> t + pi.
CircularMeasure antipodal_pushforward(const CircularMeasure& mu);

// Compares the mass of every grid cell with the mass of its antipodal cell.
// Detection is at grid resolution: atoms are counted inside their cells.
bool is_antipodally_invariant(const CircularMeasure& mu, double tol);

// Integral of phi against mu. Atoms are summed exactly; density cells go
// through adaptive quadrature with the given total tolerance.
double integrate_against(const CircularMeasure& mu,
                         const std::function<double(double)>& phi,
                         double tol = 1e-10);

// Finite weighted point set in R^dim, stored row-major.
struct DiscreteCloud {
  std::size_t dim = 0;
  std::vector<double> points;   // size = dim * count
  std::vector<double> weights;  // size = count

  std::size_t count() const { return weights.size(); }
  const double* point(std::size_t i) const { return points.data() + i * dim; }
  double total_weight() const;
};

// Image measure under f : S^1 -> R^dim. The density part is sampled at the
// midpoints of `subsamples` equal subcells per cell; atoms map exactly.
// Total mass is preserved to 1e-12.
DiscreteCloud pushforward(const CircularMeasure& mu,
                          const std::function<std::vector<double>(double)>& f,
                          std::size_t dim, int subsamples);

// Same sampling scheme for circle-valued maps, keeping the result a measure
// on S^1 (atoms only).
CircularMeasure pushforward_circle(const CircularMeasure& mu,
                                   const std::function<double(double)>& f,
                                   int subsamples);

}  // namespace hemifill
