#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hemifill/measure.hpp"
#include "hemifill/sphere.hpp"

namespace hemifill {

// Image of a hemisphere point in the Wasserstein space over S^1. Boundary
// points map to Dirac masses at their azimuth; an interior point with foot
// azimuth phi and boundary parameter k = sin(colatitude) maps to the measure
// with density
//   h(theta) = (1/2) max(d''(theta - phi), 0) + (1 - k) / (2*pi),
// discretized by integrating exactly over each grid cell.
struct EmbeddedPoint {
  SpherePoint source;
  CircularMeasure measure;
  bool boundary = false;
};

// grid_size must be even (so that half circles align with whole cells) and
// at least 8. Points with k > 1 - 1e-9 take the Dirac branch.
EmbeddedPoint iota(const SpherePoint& p, std::size_t grid_size);

// The interpolating family: (1/2)(d_P'')^+ . H^1 + (1 - k) nu for an
// antipodally invariant probability measure nu on the same grid. iota is the
// nu = uniform member.
CircularMeasure phi_family(const SpherePoint& p, const CircularMeasure& nu);

// Mass of (1/2)(d'')^+ over the offset interval [lo, hi] within [-pi, pi],
// computed from the closed antiderivative
//   C(t) = 0 for t <= -pi/2,  d'(t) + k for |t| <= pi/2,  2k for t >= pi/2.
double positive_part_mass(double k, double lo, double hi);

// Largest deviation of mu([Q, Q + pi)) from 1/2 - d'(Q - phi)/2 over all
// grid boundaries Q. Exact up to roundoff for even grids.
double half_circle_mass_error(const EmbeddedPoint& e);

// |W1(iota(P), delta_Q) - d_sphere(P, Q)| at `samples` equally spaced
// boundary points Q, through the balanced-cut transport solver.
std::vector<double> dirac_distance_errors(const EmbeddedPoint& e,
                                          std::size_t samples);

// Recovers nu from a phi_family measure by stripping the (d'')^+ part and
// rescaling by 1/(1 - k). For iota this must come back uniform.
CircularMeasure embedding_residue(const EmbeddedPoint& e);

// Area-uniform sample of the open cap colatitude <= max_colatitude.
class Rng;
SpherePoint sample_cap_point(Rng& rng, double max_colatitude);

struct IsometryPair {
  SpherePoint p, q;
  double sphere = 0.0;
  double wasserstein = 0.0;
};

struct IsometryReport {
  std::size_t pairs = 0;
  double max_error = 0.0;
  double mean_error = 0.0;
  IsometryPair worst;
};

// Samples point pairs (interior area-uniform away from the boundary, one in
// ten against a boundary point), embeds both on the given grid and compares
// W1 with the great-circle distance. Deterministic for a fixed seed
// independent of the parallel switch.
IsometryReport verify_isometry(std::size_t pairs, std::size_t grid_size,
                               std::uint64_t seed, bool parallel);

}  // namespace hemifill
