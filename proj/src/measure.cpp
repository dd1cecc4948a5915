#include "hemifill/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hemifill/errors.hpp"
#include "hemifill/quadrature.hpp"

namespace hemifill {

namespace {

constexpr double kMassTol = 1e-12;

std::vector<Atom> canonicalize_atoms(std::vector<Atom> atoms) {
  for (auto& a : atoms) {
    if (!(a.mass > 0.0)) {
      std::ostringstream msg;
      msg << "atom mass " << a.mass << " must be positive";
      throw InputError(msg.str());
    }
    if (!std::isfinite(a.pos)) throw InputError("atom position not finite");
    a.pos = wrap_angle(a.pos);
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.pos < b.pos; });
  return atoms;
}

}  // namespace

CircularMeasure::CircularMeasure(std::size_t grid_size,
                                 std::vector<double> density,
                                 std::vector<Atom> atoms)
    : n_(grid_size),
      density_(std::move(density)),
      atoms_(canonicalize_atoms(std::move(atoms))) {
  if (n_ == 0) throw InputError("grid_size must be positive");
  if (density_.size() != n_) {
    std::ostringstream msg;
    msg << "density has " << density_.size() << " cells, expected " << n_;
    throw InputError(msg.str());
  }
  for (auto& d : density_) {
    if (!std::isfinite(d)) throw InputError("density value not finite");
    if (d < 0.0) {
      if (d < -kMassTol) {
        std::ostringstream msg;
        msg << "negative density value " << d;
        throw InputError(msg.str());
      }
      d = 0.0;
    }
  }
  prefix_.resize(n_ + 1);
  prefix_[0] = 0.0;
  const double w = cell_width();
  for (std::size_t k = 0; k < n_; ++k) prefix_[k + 1] = prefix_[k] + density_[k] * w;
  const double total = total_mass();
  if (std::fabs(total - 1.0) > kMassTol) {
    std::ostringstream msg;
    msg << "total mass " << total << " differs from 1 by more than 1e-12";
    throw InputError(msg.str());
  }
}

CircularMeasure CircularMeasure::uniform(std::size_t grid_size) {
  return CircularMeasure(grid_size,
                         std::vector<double>(grid_size, 1.0 / kTwoPi), {});
}

CircularMeasure CircularMeasure::dirac(double pos) {
  return atoms_only({{pos, 1.0}});
}

CircularMeasure CircularMeasure::atoms_only(std::vector<Atom> atoms) {
  return CircularMeasure(1, std::vector<double>{0.0}, std::move(atoms));
}

CircularMeasure CircularMeasure::from_cell_masses(
    std::vector<double> cell_masses, std::vector<Atom> atoms) {
  const std::size_t n = cell_masses.size();
  if (n == 0) throw InputError("cell mass list is empty");
  const double w = kTwoPi / static_cast<double>(n);
  for (auto& m : cell_masses) m /= w;
  return CircularMeasure(n, std::move(cell_masses), std::move(atoms));
}

double CircularMeasure::cell_mass(std::size_t k) const {
  return prefix_[k + 1] - prefix_[k];
}

double CircularMeasure::total_mass() const {
  double atom_total = 0.0;
  for (const auto& a : atoms_) atom_total += a.mass;
  return prefix_[n_] + atom_total;
}

double CircularMeasure::density_cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= kTwoPi) return prefix_[n_];
  const double w = cell_width();
  const std::size_t k =
      std::min(static_cast<std::size_t>(x / w), n_ - 1);
  return prefix_[k] + density_[k] * (x - static_cast<double>(k) * w);
}

double CircularMeasure::atom_cdf(double x) const {
  double acc = 0.0;
  for (const auto& a : atoms_) {
    if (a.pos >= x) break;
    acc += a.mass;
  }
  return acc;
}

double interval_mass(const CircularMeasure& mu, double start, double arc_len) {
  if (!(arc_len >= 0.0 && arc_len <= kTwoPi + kSeamTol)) {
    std::ostringstream msg;
    msg << "arc length " << arc_len << " outside [0, 2*pi]";
    throw InputError(msg.str());
  }
  if (arc_len >= kTwoPi - kSeamTol) return mu.total_mass();
  const double s = wrap_angle(start);
  const double e = s + arc_len;
  auto piece = [&mu](double a, double b) {
    return mu.density_cdf(b) - mu.density_cdf(a) + mu.atom_cdf(b) -
           mu.atom_cdf(a);
  };
  if (e <= kTwoPi) return piece(s, e);
  return piece(s, kTwoPi) + piece(0.0, e - kTwoPi);
}

CircularMeasure convex_combination(double a, const CircularMeasure& mu,
                                   double b, const CircularMeasure& nu) {
  if (mu.grid_size() != nu.grid_size()) {
    throw InputError("convex combination needs a common grid");
  }
  if (a < 0.0 || b < 0.0 || std::fabs(a + b - 1.0) > kMassTol) {
    throw InputError("convex combination weights must be >= 0 and sum to 1");
  }
  std::vector<double> density(mu.grid_size());
  for (std::size_t k = 0; k < density.size(); ++k) {
    density[k] = a * mu.density()[k] + b * nu.density()[k];
  }
  std::vector<Atom> atoms;
  for (const auto& at : mu.atoms()) atoms.push_back({at.pos, a * at.mass});
  for (const auto& at : nu.atoms()) atoms.push_back({at.pos, b * at.mass});
  std::erase_if(atoms, [](const Atom& at) { return at.mass <= 0.0; });
  return CircularMeasure(mu.grid_size(), std::move(density), std::move(atoms));
}

CircularMeasure rotate(const CircularMeasure& mu, double angle) {
  const std::size_t n = mu.grid_size();
  const double w = mu.cell_width();
  std::vector<Atom> atoms;
  atoms.reserve(mu.atoms().size());
  for (const auto& a : mu.atoms()) atoms.push_back({wrap_angle(a.pos + angle), a.mass});

  const double shift_cells = wrap_angle(angle) / w;
  const double rounded = std::round(shift_cells);
  std::vector<double> density(n);
  if (std::fabs(shift_cells - rounded) * w < 1e-12) {
    // Grid-aligned rotation: an exact cyclic shift of the cells.
    const std::size_t m = static_cast<std::size_t>(rounded) % n;
    for (std::size_t k = 0; k < n; ++k) density[(k + m) % n] = mu.density()[k];
  } else {
    // Each target cell pulls back to an interval of the source density.
    for (std::size_t k = 0; k < n; ++k) {
      const double lo = wrap_angle(static_cast<double>(k) * w - angle);
      const double hi = lo + w;
      double mass;
      if (hi <= kTwoPi) {
        mass = mu.density_cdf(hi) - mu.density_cdf(lo);
      } else {
        mass = mu.density_cdf(kTwoPi) - mu.density_cdf(lo) +
               mu.density_cdf(hi - kTwoPi);
      }
      density[k] = mass / w;
    }
  }
  return CircularMeasure(n, std::move(density), std::move(atoms));
}

CircularMeasure antipodal_pushforward(const CircularMeasure& mu) {
  return rotate(mu, kPi);
}

bool is_antipodally_invariant(const CircularMeasure& mu, double tol) {
  const std::size_t n = mu.grid_size();
  const double w = mu.cell_width();
  for (std::size_t k = 0; k < n; ++k) {
    const double here = interval_mass(mu, static_cast<double>(k) * w, w);
    const double there =
        interval_mass(mu, static_cast<double>(k) * w + kPi, w);
    if (std::fabs(here - there) > tol) return false;
  }
  return true;
}

double integrate_against(const CircularMeasure& mu,
                         const std::function<double(double)>& phi,
                         double tol) {
  double acc = 0.0;
  for (const auto& a : mu.atoms()) acc += a.mass * phi(a.pos);
  const std::size_t n = mu.grid_size();
  const double w = mu.cell_width();
  const double cell_tol = tol / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double rho = mu.density()[k];
    if (rho == 0.0) continue;
    const double a = static_cast<double>(k) * w;
    acc += rho * adaptive_simpson(phi, a, a + w, cell_tol / rho);
  }
  return acc;
}

double DiscreteCloud::total_weight() const {
  double acc = 0.0;
  for (double v : weights) acc += v;
  return acc;
}

DiscreteCloud pushforward(const CircularMeasure& mu,
                          const std::function<std::vector<double>(double)>& f,
                          std::size_t dim, int subsamples) {
  if (subsamples < 1) throw InputError("subsamples must be >= 1");
  DiscreteCloud out;
  out.dim = dim;
  auto push = [&](double t, double mass) {
    std::vector<double> x = f(t);
    if (x.size() != dim) throw InputError("pushforward map has wrong dimension");
    out.points.insert(out.points.end(), x.begin(), x.end());
    out.weights.push_back(mass);
  };
  const double w = mu.cell_width();
  const double sub = w / static_cast<double>(subsamples);
  for (std::size_t k = 0; k < mu.grid_size(); ++k) {
    const double rho = mu.density()[k];
    if (rho == 0.0) continue;
    for (int j = 0; j < subsamples; ++j) {
      const double t = static_cast<double>(k) * w + (j + 0.5) * sub;
      push(t, rho * sub);
    }
  }
  for (const auto& a : mu.atoms()) push(a.pos, a.mass);
  return out;
}

CircularMeasure pushforward_circle(const CircularMeasure& mu,
                                   const std::function<double(double)>& f,
                                   int subsamples) {
  if (subsamples < 1) throw InputError("subsamples must be >= 1");
  std::vector<Atom> atoms;
  const double w = mu.cell_width();
  const double sub = w / static_cast<double>(subsamples);
  for (std::size_t k = 0; k < mu.grid_size(); ++k) {
    const double rho = mu.density()[k];
    if (rho == 0.0) continue;
    for (int j = 0; j < subsamples; ++j) {
      const double t = static_cast<double>(k) * w + (j + 0.5) * sub;
      atoms.push_back({wrap_angle(f(t)), rho * sub});
    }
  }
  for (const auto& a : mu.atoms()) atoms.push_back({wrap_angle(f(a.pos)), a.mass});
  return CircularMeasure::atoms_only(std::move(atoms));
}

}  // namespace hemifill
