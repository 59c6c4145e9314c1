#pragma once

// Sampling boxes, finite differences and quadrature.

#include <functional>
#include <vector>

#include "etaricci/expr.hpp"

namespace etaricci {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Closed box I1 x I2 x I3. Each side must satisfy lo < hi.
class DomainBox {
 public:
  DomainBox();
  DomainBox(Interval i1, Interval i2, Interval i3);

  static DomainBox cube(double lo, double hi);

  const Interval& interval(Axis a) const { return sides_[index(a)]; }
  bool contains(const Point& p) const;
  /// True when every point within `radius` (sup norm) of p is in the box.
  bool contains_ball(const Point& p, double radius) const;
  Point center() const;

  /// Tensor grid of n interior points per axis: lo + (k + 1/2) * width / n.
  std::vector<Point> grid(int n) const;

 private:
  std::array<Interval, 3> sides_;
};

inline constexpr double kDefaultFdStep = 1e-5;
inline constexpr double kDefaultOuterStep = 1e-4;
inline constexpr double kQuadratureTolerance = 1e-12;

Point shifted(Point p, Axis axis, double delta);

/// Central difference (e(p + h) - e(p - h)) / 2h. When `box` is given the
/// stencil must lie inside it.
double finite_difference(const ScalarExpr& e, Axis axis, const Point& p,
                         double step = kDefaultFdStep, const DomainBox* box = nullptr);

/// Mixed second derivative by nested central differences: the inner
/// derivative along `inner` uses `inner_step`, the outer one `outer_step`.
double nested_difference(const std::function<double(const Point&)>& f, Axis outer, Axis inner,
                         const Point& p, double inner_step = kDefaultFdStep,
                         double outer_step = kDefaultOuterStep);

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance `tol`.
/// Orientation is respected (a > b gives the negated integral).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = kQuadratureTolerance, int max_depth = 48);

/// One-dimensional antiderivative F with F(ref) = 0 and dF/dx_axis = integrand.
///
/// The value is also available as a ScalarExpr node (expr()) so it can be used
/// inside other expressions; differentiating that node returns the integrand.
class Antiderivative {
 public:
  Antiderivative(ScalarExpr integrand, Axis axis, double ref);

  double operator()(double x) const;
  const ScalarExpr& expr() const { return expr_; }
  Axis axis() const { return axis_; }
  double reference() const { return ref_; }

 private:
  ScalarExpr expr_;
  Axis axis_;
  double ref_;
};

/// Builds the antiderivative of `e` along `axis`. `e` must depend on `axis`
/// only. When `interval` is given, `ref` defaults to its left end and the
/// integrand is checked for singularities on a fine sample of the interval.
Antiderivative antiderivative_numeric(const ScalarExpr& e, Axis axis, double ref);
Antiderivative antiderivative_numeric(const ScalarExpr& e, Axis axis, const Interval& interval);

/// Summary statistics of an expression sampled on a set of points.
struct SampleStats {
  double min = 0.0;
  double max = 0.0;
  double max_abs = 0.0;
  double min_abs = 0.0;

  double spread() const { return max - min; }
};

SampleStats sample(const ScalarExpr& e, const std::vector<Point>& points);

/// Grid-constant: max - min < 1e-10 * (1 + max |e|).
bool is_grid_constant(const SampleStats& s, double rel_tol = 1e-10);
/// Nowhere zero: min |e| > threshold.
bool is_nowhere_zero(const SampleStats& s, double threshold = 1e-10);
/// Identically zero on the grid relative to a magnitude scale.
bool vanishes(const SampleStats& s, double scale, double rel_tol = 1e-10);

/// Pointwise comparison of two expressions on a set of points.
struct IdentityCheck {
  bool holds = false;
  double max_violation = 0.0;
  /// max(|lhs|, |rhs|) over the points.
  double scale = 0.0;
};

/// holds <=> max |lhs - rhs| <= rel_tol * (1 + scale).
IdentityCheck check_identity(const ScalarExpr& lhs, const ScalarExpr& rhs,
                             const std::vector<Point>& points, double rel_tol = 1e-10);

}  // namespace etaricci
