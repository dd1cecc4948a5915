#include "hemifill/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "hemifill/errors.hpp"

namespace hemifill {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol,
               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double err = left + right - whole;
  if (std::fabs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  if (depth <= 0) {
    std::ostringstream msg;
    msg << "adaptive quadrature stalled on [" << a << ", " << b
        << "], local error estimate " << std::fabs(err) / 15.0
        << " above tolerance " << tol;
    throw QuadratureError(msg.str());
  }
  return recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  // First split at the golden section, not the midpoint. A symmetric split
  // can alias a periodic integrand (every node of max(|sin|, |cos|) on
  // [0, 2*pi] reads 1) and stop on the first estimate; an irrational split
  // point keeps the initial nodes off any such lattice.
  const double c = a + 0.6180339887498949 * (b - a);
  double acc = 0.0;
  for (const auto& [lo, hi] : {std::pair{a, c}, std::pair{c, b}}) {
    const double m = 0.5 * (lo + hi);
    const double fa = f(lo);
    const double fm = f(m);
    const double fb = f(hi);
    const double whole = simpson(fa, fm, fb, hi - lo);
    const double part = tol * (hi - lo) / (b - a);
    acc += recurse(f, lo, hi, fa, fm, fb, whole, part, max_depth);
  }
  return acc;
}

}  // namespace hemifill
