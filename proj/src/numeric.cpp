#include "etaricci/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace etaricci {

DomainBox::DomainBox() : DomainBox({-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}) {}

DomainBox::DomainBox(Interval i1, Interval i2, Interval i3) : sides_{i1, i2, i3} {
  for (Axis a : kAxes) {
    const Interval& s = sides_[index(a)];
    if (!(std::isfinite(s.lo) && std::isfinite(s.hi) && s.lo < s.hi))
      throw PreconditionError("degenerate domain interval on x" + std::to_string(number(a)));
  }
}

DomainBox DomainBox::cube(double lo, double hi) { return DomainBox({lo, hi}, {lo, hi}, {lo, hi}); }

bool DomainBox::contains(const Point& p) const {
  for (Axis a : kAxes)
    if (!sides_[index(a)].contains(p[index(a)])) return false;
  return true;
}

bool DomainBox::contains_ball(const Point& p, double radius) const {
  for (Axis a : kAxes) {
    const Interval& s = sides_[index(a)];
    const double x = p[index(a)];
    if (x - radius < s.lo || x + radius > s.hi) return false;
  }
  return true;
}

Point DomainBox::center() const {
  Point c;
  for (Axis a : kAxes) c[index(a)] = 0.5 * (sides_[index(a)].lo + sides_[index(a)].hi);
  return c;
}

std::vector<Point> DomainBox::grid(int n) const {
  if (n < 1) throw PreconditionError("grid size must be positive");
  std::array<std::vector<double>, 3> ticks;
  for (Axis a : kAxes) {
    const Interval& s = sides_[index(a)];
    const double h = s.width() / n;
    for (int k = 0; k < n; ++k) ticks[index(a)].push_back(s.lo + (k + 0.5) * h);
  }
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n) * n * n);
  for (double u : ticks[0])
    for (double v : ticks[1])
      for (double w : ticks[2]) points.push_back({u, v, w});
  return points;
}

Point shifted(Point p, Axis axis, double delta) {
  p[index(axis)] += delta;
  return p;
}

double finite_difference(const ScalarExpr& e, Axis axis, const Point& p, double step,
                         const DomainBox* box) {
  if (!(step > 0.0)) throw PreconditionError("finite difference step must be positive");
  const Point plus = shifted(p, axis, step);
  const Point minus = shifted(p, axis, -step);
  if (box != nullptr && !(box->contains(plus) && box->contains(minus)))
    throw DomainError("finite-difference stencil leaves the domain", e.to_string());
  return (eval(e, plus) - eval(e, minus)) / (2.0 * step);
}

double nested_difference(const std::function<double(const Point&)>& f, Axis outer, Axis inner,
                         const Point& p, double inner_step, double outer_step) {
  auto first = [&](const Point& q) {
    return (f(shifted(q, inner, inner_step)) - f(shifted(q, inner, -inner_step))) /
           (2.0 * inner_step);
  };
  return (first(shifted(p, outer, outer_step)) - first(shifted(p, outer, -outer_step))) /
         (2.0 * outer_step);
}

namespace {

using Integrand = std::function<double(double)>;

double simpson_recurse(const Integrand& f, double a, double fa, double m, double fm, double b,
                       double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (!std::isfinite(delta)) throw QuadratureError("non-finite integrand value");
  // Stop on tolerance, or once the interval cannot be split in floating point.
  if (std::fabs(delta) <= 15.0 * tol || lm <= a || rm >= b || m <= lm || m >= rm)
    return left + right + delta / 15.0;
  if (depth <= 0) throw QuadratureError("adaptive Simpson did not converge");
  return simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  if (a > b) return -adaptive_simpson(f, b, a, tol, max_depth);
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  // Seed with a fixed split so short-period features cannot hide from the first estimate.
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  return simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, max_depth) +
         simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, max_depth);
}

Antiderivative::Antiderivative(ScalarExpr integrand, Axis axis, double ref)
    : expr_(ScalarExpr::make_antiderivative(std::move(integrand), axis, ref)),
      axis_(axis),
      ref_(ref) {}

double Antiderivative::operator()(double x) const {
  Point p{0.0, 0.0, 0.0};
  p[index(axis_)] = x;
  return eval(expr_, p);
}

Antiderivative antiderivative_numeric(const ScalarExpr& e, Axis axis, double ref) {
  return Antiderivative(e, axis, ref);
}

Antiderivative antiderivative_numeric(const ScalarExpr& e, Axis axis, const Interval& interval) {
  if (!e.free_axes().subset_of(AxisSet{axis}))
    throw PreconditionError("integrand must depend on x" + std::to_string(number(axis)) +
                            " only");
  // Scan for singularities before handing the integrand to the quadrature.
  constexpr int kScan = 256;
  Point p{0.0, 0.0, 0.0};
  for (int k = 0; k <= kScan; ++k) {
    p[index(axis)] = interval.lo + interval.width() * k / kScan;
    try {
      (void)eval(e, p);
    } catch (const DomainError& err) {
      throw QuadratureError(std::string("integrand singular inside interval: ") + err.what());
    }
  }
  return Antiderivative(e, axis, interval.lo);
}

SampleStats sample(const ScalarExpr& e, const std::vector<Point>& points) {
  SampleStats s;
  s.min = std::numeric_limits<double>::infinity();
  s.max = -std::numeric_limits<double>::infinity();
  s.min_abs = std::numeric_limits<double>::infinity();
  for (const Point& p : points) {
    const double v = eval(e, p);
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    s.max_abs = std::max(s.max_abs, std::fabs(v));
    s.min_abs = std::min(s.min_abs, std::fabs(v));
  }
  return s;
}

bool is_grid_constant(const SampleStats& s, double rel_tol) {
  return s.spread() < rel_tol * (1.0 + s.max_abs);
}

bool is_nowhere_zero(const SampleStats& s, double threshold) { return s.min_abs > threshold; }

bool vanishes(const SampleStats& s, double scale, double rel_tol) {
  return s.max_abs < rel_tol * (1.0 + scale);
}

IdentityCheck check_identity(const ScalarExpr& lhs, const ScalarExpr& rhs,
                             const std::vector<Point>& points, double rel_tol) {
  IdentityCheck out;
  for (const Point& p : points) {
    const double l = eval(lhs, p);
    const double r = eval(rhs, p);
    out.max_violation = std::max(out.max_violation, std::fabs(l - r));
    out.scale = std::max({out.scale, std::fabs(l), std::fabs(r)});
  }
  out.holds = out.max_violation <= rel_tol * (1.0 + out.scale);
  return out;
}

}  // namespace etaricci
