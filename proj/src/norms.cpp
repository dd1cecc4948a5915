#include "hemifill/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hemifill/angles.hpp"
#include "hemifill/errors.hpp"

namespace hemifill {

Mat2 Mat2::inverse() const {
  const double dt = det();
  if (std::fabs(dt) < 1e-300) throw DegeneracyError("singular 2x2 matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Vec2 operator*(const Mat2& m, Vec2 v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 p, Vec2 q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  // Tolerances scale with the point cloud. Exact comparisons would keep
  // roundoff twins (p and the negation of its antipode differ in the last
  // ulp), and a twin pair later divides a facet functional by a ~1e-16
  // cross product.
  double scale = 0.0;
  for (Vec2 p : pts) {
    scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
  }
  const double eps = 1e-9 * scale;
  const double eps_area = eps * scale;
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [eps](Vec2 p, Vec2 q) {
                          return std::fabs(p.x - q.x) <= eps &&
                                 std::fabs(p.y - q.y) <= eps;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2],
                           pts[i] - hull[k - 1]) <= eps_area) {
      --k;
    }
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2],
                               pts[i] - hull[k - 1]) <= eps_area) {
      --k;
    }
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

namespace {

// Facet functionals u with <u, x> = 1 along each edge of a ccw polygon
// containing the origin in its interior.
std::vector<Vec2> facet_functionals(const std::vector<Vec2>& verts) {
  const std::size_t n = verts.size();
  std::vector<Vec2> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = verts[i];
    const Vec2 q = verts[(i + 1) % n];
    const double s = cross(p, q);
    if (s <= 0.0) throw DegeneracyError("polygon does not enclose the origin");
    const Vec2 d = q - p;
    out[i] = {d.y / s, -d.x / s};
  }
  return out;
}

// Semi-axis form of the ellipse {x : x^T Q x <= 1} for symmetric positive
// definite Q = [[p, q], [q, r]].
PlanarNorm ellipse_from_quadratic(double p, double q, double r) {
  const double tr = p + r;
  const double dt = p * r - q * q;
  if (!(dt > 0.0) || !(tr > 0.0)) {
    throw DegeneracyError("quadratic form is not positive definite");
  }
  const double gap = std::sqrt(std::max(0.0, 0.25 * tr * tr - dt));
  const double l1 = 0.5 * tr + gap;
  const double l2 = dt / l1;
  double angle = 0.5 * std::atan2(2.0 * q, p - r);
  // atan2 orients the larger eigenvalue's eigenvector; its axis is the short
  // one, so report the long axis first.
  return PlanarNorm::ellipse(1.0 / std::sqrt(l2), 1.0 / std::sqrt(l1),
                             wrap_signed(angle + kHalfPi));
}

}  // namespace

PlanarNorm PlanarNorm::l1() {
  PlanarNorm n;
  n.kind_ = NormKind::L1;
  n.verts_ = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return n;
}

PlanarNorm PlanarNorm::l2() {
  PlanarNorm n;
  n.kind_ = NormKind::L2;
  return n;
}

PlanarNorm PlanarNorm::linf() {
  PlanarNorm n;
  n.kind_ = NormKind::LInf;
  n.verts_ = {{1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}};
  return n;
}

PlanarNorm PlanarNorm::ellipse(double a, double b, double angle) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(angle)) {
    throw InputError("ellipse norm needs positive semi-axes");
  }
  PlanarNorm n;
  n.kind_ = NormKind::Ellipse;
  n.a_ = a;
  n.b_ = b;
  n.angle_ = angle;
  return n;
}

PlanarNorm PlanarNorm::polygon(const std::vector<Vec2>& pts) {
  std::vector<Vec2> sym;
  sym.reserve(2 * pts.size());
  for (Vec2 p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("polygon vertex is not finite");
    }
    sym.push_back(p);
    sym.push_back({-p.x, -p.y});
  }
  PlanarNorm n;
  n.kind_ = NormKind::Polygon;
  n.verts_ = convex_hull(std::move(sym));
  if (n.verts_.size() < 4) {
    n.degenerate_ = true;
    return n;
  }
  n.facets_ = facet_functionals(n.verts_);
  return n;
}

double PlanarNorm::operator()(Vec2 v) const {
  switch (kind_) {
    case NormKind::L1:
      return std::fabs(v.x) + std::fabs(v.y);
    case NormKind::L2:
      return std::hypot(v.x, v.y);
    case NormKind::LInf:
      return std::max(std::fabs(v.x), std::fabs(v.y));
    case NormKind::Ellipse: {
      const double c = std::cos(angle_), s = std::sin(angle_);
      const double u = (c * v.x + s * v.y) / a_;
      const double w = (-s * v.x + c * v.y) / b_;
      return std::hypot(u, w);
    }
    case NormKind::Polygon: {
      if (degenerate_) {
        return v.x == 0.0 && v.y == 0.0
                   ? 0.0
                   : std::numeric_limits<double>::infinity();
      }
      double best = 0.0;
      for (Vec2 u : facets_) best = std::max(best, dot(u, v));
      return best;
    }
  }
  return 0.0;
}

double PlanarNorm::ball_area() const {
  switch (kind_) {
    case NormKind::L1:
      return 2.0;
    case NormKind::L2:
      return kPi;
    case NormKind::LInf:
      return 4.0;
    case NormKind::Ellipse:
      return kPi * a_ * b_;
    case NormKind::Polygon: {
      if (degenerate_) return 0.0;
      double twice = 0.0;
      for (std::size_t i = 0; i < verts_.size(); ++i) {
        twice += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
      }
      return 0.5 * twice;
    }
  }
  return 0.0;
}

PlanarNorm PlanarNorm::dual() const {
  switch (kind_) {
    case NormKind::L1:
      return linf();
    case NormKind::L2:
      return l2();
    case NormKind::LInf:
      return l1();
    case NormKind::Ellipse:
      return ellipse(1.0 / a_, 1.0 / b_, angle_);
    case NormKind::Polygon:
      if (degenerate_) throw DegeneracyError("dual of a degenerate body");
      return polygon(facets_);
  }
  throw InputError("unknown norm kind");
}

PlanarNorm PlanarNorm::transformed(const Mat2& t) const {
  const Mat2 ti = t.inverse();
  switch (kind_) {
    case NormKind::L1:
    case NormKind::LInf:
    case NormKind::Polygon: {
      if (degenerate_) throw DegeneracyError("transform of a degenerate body");
      std::vector<Vec2> pts;
      pts.reserve(verts_.size());
      for (Vec2 p : verts_) pts.push_back(ti * p);
      return polygon(pts);
    }
    case NormKind::L2:
    case NormKind::Ellipse: {
      // Ball quadratic Q pulls back to T^T Q T.
      const double c = std::cos(angle_), s = std::sin(angle_);
      const Mat2 rot{c, -s, s, c};
      const Mat2 diag{1.0 / (a_ * a_), 0.0, 0.0, 1.0 / (b_ * b_)};
      const Mat2 q = rot * diag * rot.transpose();
      const Mat2 qq = t.transpose() * q * t;
      return ellipse_from_quadratic(qq.a, 0.5 * (qq.b + qq.c), qq.d);
    }
  }
  throw InputError("unknown norm kind");
}

Mat2 min_enclosing_centered_ellipse(const std::vector<Vec2>& pts, double tol,
                                    int max_iter) {
  const std::size_t m = pts.size();
  if (m < 2) throw DegeneracyError("need at least two points for an ellipse");
  std::vector<double> w(m, 1.0 / static_cast<double>(m));
  auto scatter = [&]() {
    Mat2 x{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
      x.a += w[i] * pts[i].x * pts[i].x;
      x.b += w[i] * pts[i].x * pts[i].y;
      x.d += w[i] * pts[i].y * pts[i].y;
    }
    x.c = x.b;
    return x;
  };
  Mat2 x = scatter();
  double scale = 0.0;
  for (Vec2 p : pts) scale = std::max(scale, p.x * p.x + p.y * p.y);
  if (x.det() <= 1e-28 * scale * scale) {
    throw DegeneracyError("point set does not span the plane");
  }
  // kappa = max_i p_i^T X^{-1} p_i, equal to 2 at the optimum. Vertices that
  // are rounding twins of each other can freeze the gap a hair above tol
  // while weight shuffles between them, so the loop also exits once kappa
  // stops improving; the terminal check below still bounds the area.
  double floor_kappa = std::numeric_limits<double>::infinity();
  int stale = 0;
  for (int it = 0; it < max_iter; ++it) {
    const Mat2 xi = x.inverse();
    std::size_t hi = 0, lo = m;
    double ghi = -1.0, glo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2 p = pts[i];
      const double g =
          xi.a * p.x * p.x + (xi.b + xi.c) * p.x * p.y + xi.d * p.y * p.y;
      if (g > ghi) {
        ghi = g;
        hi = i;
      }
      if (w[i] > 0.0 && g < glo) {
        glo = g;
        lo = i;
      }
    }
    if (ghi <= 2.0 * (1.0 + tol)) break;
    if (ghi < floor_kappa * (1.0 - 1e-12)) {
      floor_kappa = ghi;
      stale = 0;
    } else if (++stale >= 512) {
      break;
    }
    // Shift weight from the slackest support point to the worst violator;
    // det(X + t(uu^T - vv^T)) is concave quadratic in t, maximize exactly.
    const Vec2 u = pts[hi], v = pts[lo];
    const Mat2 dir{u.x * u.x - v.x * v.x, u.x * u.y - v.x * v.y,
                   u.x * u.y - v.x * v.y, u.y * u.y - v.y * v.y};
    const double mix = x.a * dir.d + dir.a * x.d - x.b * dir.c - x.c * dir.b;
    const double curv = cross(u, v) * cross(u, v);
    double step;
    if (curv > 0.0) {
      step = mix / (2.0 * curv);
    } else {
      step = mix > 0.0 ? w[lo] : 0.0;
    }
    step = std::clamp(step, 0.0, w[lo]);
    if (!(step > 0.0)) break;
    w[hi] += step;
    w[lo] -= step;
    x.a += step * dir.a;
    x.b += step * dir.b;
    x.c += step * dir.c;
    x.d += step * dir.d;
  }
  const Mat2 xi = x.inverse();
  double kappa = 0.0;
  for (Vec2 p : pts) {
    kappa = std::max(
        kappa, xi.a * p.x * p.x + (xi.b + xi.c) * p.x * p.y + xi.d * p.y * p.y);
  }
  if (kappa > 2.0 * (1.0 + 1e-3)) {
    throw SolverError("enclosing ellipse did not converge");
  }
  return Mat2{xi.a / kappa, xi.b / kappa, xi.c / kappa, xi.d / kappa};
}

PlanarNorm john_ellipse(const PlanarNorm& norm) {
  if (norm.degenerate()) throw DegeneracyError("john ellipse of a flat body");
  switch (norm.kind()) {
    case NormKind::L2:
      return PlanarNorm::ellipse(1.0, 1.0, 0.0);
    case NormKind::Ellipse:
      return PlanarNorm::ellipse(norm.axis_a(), norm.axis_b(),
                                 norm.axis_angle());
    case NormKind::LInf:
      return PlanarNorm::ellipse(1.0, 1.0, 0.0);
    case NormKind::L1: {
      const double r = 1.0 / std::sqrt(2.0);
      return PlanarNorm::ellipse(r, r, 0.0);
    }
    case NormKind::Polygon: {
      // John(B) is the polar of the Loewner ellipse of the dual ball. With
      // Loewner(B*) = {x : x^T M x <= 1}, M = X^{-1}/kappa, the polar has
      // quadratic M^{-1} = kappa X.
      const Mat2 m = min_enclosing_centered_ellipse(norm.facets());
      const Mat2 q = m.inverse();
      return ellipse_from_quadratic(q.a, 0.5 * (q.b + q.c), q.d);
    }
  }
  throw InputError("unknown norm kind");
}

double jacobian_busemann(const PlanarNorm& norm) {
  if (norm.degenerate()) return 0.0;
  return kPi / norm.ball_area();
}

double jacobian_holmes_thompson(const PlanarNorm& norm) {
  if (norm.degenerate()) return 0.0;
  return norm.dual().ball_area() / kPi;
}

double jacobian_inscribed(const PlanarNorm& norm) {
  if (norm.degenerate()) return 0.0;
  return kPi / john_ellipse(norm).ball_area();
}

double jacobian(const PlanarNorm& norm, JacobianKind kind) {
  switch (kind) {
    case JacobianKind::Busemann:
      return jacobian_busemann(norm);
    case JacobianKind::HolmesThompson:
      return jacobian_holmes_thompson(norm);
    case JacobianKind::InscribedRiemannian:
      return jacobian_inscribed(norm);
  }
  throw InputError("unknown jacobian kind");
}

NormedTarget NormedTarget::l1(std::size_t dim) {
  return {dim, TargetNormKind::L1, PlanarNorm::l2()};
}

NormedTarget NormedTarget::l2(std::size_t dim) {
  return {dim, TargetNormKind::L2, PlanarNorm::l2()};
}

NormedTarget NormedTarget::linf(std::size_t dim) {
  return {dim, TargetNormKind::LInf, PlanarNorm::l2()};
}

NormedTarget NormedTarget::make_planar(PlanarNorm norm) {
  return {2, TargetNormKind::Planar, std::move(norm)};
}

double NormedTarget::norm(const double* v) const {
  switch (kind) {
    case TargetNormKind::L1: {
      double acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i) acc += std::fabs(v[i]);
      return acc;
    }
    case TargetNormKind::L2: {
      double acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i) acc += v[i] * v[i];
      return std::sqrt(acc);
    }
    case TargetNormKind::LInf: {
      double acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        acc = std::max(acc, std::fabs(v[i]));
      return acc;
    }
    case TargetNormKind::Planar:
      return planar({v[0], v[1]});
  }
  return 0.0;
}

double NormedTarget::norm(const std::vector<double>& v) const {
  if (v.size() != dim) throw InputError("vector dimension mismatch");
  return norm(v.data());
}

double NormedTarget::distance(const double* u, const double* v) const {
  switch (kind) {
    case TargetNormKind::L1: {
      double acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i) acc += std::fabs(u[i] - v[i]);
      return acc;
    }
    case TargetNormKind::L2: {
      double acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        acc += (u[i] - v[i]) * (u[i] - v[i]);
      return std::sqrt(acc);
    }
    case TargetNormKind::LInf: {
      double acc = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        acc = std::max(acc, std::fabs(u[i] - v[i]));
      return acc;
    }
    case TargetNormKind::Planar:
      return planar({u[0] - v[0], u[1] - v[1]});
  }
  return 0.0;
}

}  // namespace hemifill
