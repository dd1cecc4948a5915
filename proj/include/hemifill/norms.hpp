#pragma once

#include <cstddef>
#include <vector>

namespace hemifill {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;  // row major [[a, b], [c, d]]

  double det() const { return a * d - b * c; }
  Mat2 inverse() const;
  Mat2 transpose() const { return {a, c, b, d}; }
};

Vec2 operator*(const Mat2& m, Vec2 v);
Mat2 operator*(const Mat2& m, const Mat2& n);

// Counterclockwise convex hull, collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

enum class NormKind { L1, L2, LInf, Ellipse, Polygon };

// Norm on R^2 described by its unit ball: one of the closed-form balls, a
// centered ellipse with semi-axes (a, b) rotated by `angle`, or a centrally
// symmetric polygon. A polygon whose symmetrized hull is flat (fewer than 4
// vertices) is kept as a degenerate marker: it is not a norm, evaluates to
// infinity off its span and has ball area 0.
class PlanarNorm {
 public:
  static PlanarNorm l1();
  static PlanarNorm l2();
  static PlanarNorm linf();
  static PlanarNorm ellipse(double a, double b, double angle);
  // Boundary points of the intended ball; the set is symmetrized about 0
  // before taking the hull.
  static PlanarNorm polygon(const std::vector<Vec2>& pts);

  NormKind kind() const { return kind_; }
  bool degenerate() const { return degenerate_; }

  double operator()(Vec2 v) const;
  double ball_area() const;

  // Dual norm; its unit ball is the polar body. l1 <-> linf, l2 is self-dual,
  // an ellipse dualizes to the ellipse with inverted semi-axes, a polygon to
  // the polygon whose vertices are the facet functionals.
  PlanarNorm dual() const;

  // The norm v -> |T v|, whose unit ball is T^{-1}(ball).
  PlanarNorm transformed(const Mat2& t) const;

  // Polygon accessors (ccw ball vertices / facet functionals).
  const std::vector<Vec2>& vertices() const { return verts_; }
  const std::vector<Vec2>& facets() const { return facets_; }

  // Ellipse accessors.
  double axis_a() const { return a_; }
  double axis_b() const { return b_; }
  double axis_angle() const { return angle_; }

 private:
  PlanarNorm() = default;
  NormKind kind_ = NormKind::L2;
  bool degenerate_ = false;
  double a_ = 1.0, b_ = 1.0, angle_ = 0.0;
  std::vector<Vec2> verts_;
  std::vector<Vec2> facets_;
};

// Minimum-area centered ellipse {x : x^T M x <= 1} containing the given
// points and their negatives, via pairwise Frank-Wolfe on the log-det
// program with exact 2x2 line search. The result always contains the points;
// its area is optimal within (1 + tol), relaxed to at worst (1 + 1e-3) when
// rounding twins among the points stall the final digits of the gap. Throws
// DegeneracyError when the points do not span the plane and SolverError when
// the iteration ends farther from optimal than that.
Mat2 min_enclosing_centered_ellipse(const std::vector<Vec2>& pts,
                                    double tol = 1e-9, int max_iter = 100000);

// Largest-area centered ellipse inside the unit ball, computed as the polar
// of the Loewner ellipse of the dual ball.
PlanarNorm john_ellipse(const PlanarNorm& norm);

// Jacobian densities for 2-dimensional normed targets; all three return 0
// for a degenerate norm.
double jacobian_busemann(const PlanarNorm& norm);        // pi / area(B)
double jacobian_holmes_thompson(const PlanarNorm& norm); // area(B*) / pi
double jacobian_inscribed(const PlanarNorm& norm);       // pi / area(John(B))

enum class JacobianKind { Busemann, HolmesThompson, InscribedRiemannian };
double jacobian(const PlanarNorm& norm, JacobianKind kind);

// Norm on R^dim used by curves and extensions. The planar case wraps a
// PlanarNorm and requires dim == 2.
enum class TargetNormKind { L1, L2, LInf, Planar };

struct NormedTarget {
  std::size_t dim = 2;
  TargetNormKind kind = TargetNormKind::L2;
  PlanarNorm planar = PlanarNorm::l2();

  static NormedTarget l1(std::size_t dim);
  static NormedTarget l2(std::size_t dim);
  static NormedTarget linf(std::size_t dim);
  static NormedTarget make_planar(PlanarNorm norm);

  double norm(const double* v) const;
  double norm(const std::vector<double>& v) const;
  double distance(const double* u, const double* v) const;
};

}  // namespace hemifill
