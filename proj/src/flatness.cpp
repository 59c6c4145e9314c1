#include "etaricci/flatness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace etaricci {

namespace {

struct GridCheck {
  const std::vector<Point>& points;
  double tol;

  bool identity(const ScalarExpr& lhs, const ScalarExpr& rhs) const {
    return check_identity(lhs, rhs, points, tol).holds;
  }

  // u * v == 0 on the grid, relative to max|u| * max|v|.
  bool product_vanishes(const ScalarExpr& u, const ScalarExpr& v) const {
    const SampleStats su = sample(u, points);
    const SampleStats sv = sample(v, points);
    return vanishes(sample(u * v, points), su.max_abs * sv.max_abs, tol);
  }

  bool constant(const ScalarExpr& e) const { return is_grid_constant(sample(e, points), tol); }
};

// (f'/f)' == (f'/f)^2 along `axis`: f constant or f = c1 / (x - c2).
ScalarExpr log_derivative(const ScalarExpr& f, Axis axis) { return diff(f, axis) / f; }

bool reciprocal_linear(const GridCheck& g, const ScalarExpr& f, Axis axis) {
  const ScalarExpr l = log_derivative(f, axis);
  return g.identity(diff(l, axis), l * l);
}

// (f'' f - 2 f'^2) / f^4 along `axis`.
ScalarExpr separation_quotient(const ScalarExpr& f, Axis axis) {
  const ScalarExpr fp = diff(f, axis);
  const ScalarExpr fpp = diff(fp, axis);
  return (fpp * f - ScalarExpr(2.0) * fp * fp) / pow(f, 4);
}

}  // namespace

FlatnessVerdict flatness_criterion(const DiagonalMetric& m, const FlatnessOptions& opts) {
  if (opts.grid_n < 1 || !(opts.tol_flat > 0.0)) throw PreconditionError("invalid flatness options");
  m.check_nonvanishing(opts.grid_n);
  const std::vector<Point> points = m.domain().grid(opts.grid_n);
  const GridCheck g{points, opts.identity_tol};
  const ScalarExpr& f1 = m.f1();
  const ScalarExpr& f2 = m.f2();

  FlatnessVerdict v;
  v.tag = classify(m);
  if (opts.as_case && *opts.as_case != CaseTag::GENERAL) {
    if (!fits_case(m, *opts.as_case))
      throw PreconditionError("metric does not fit case " + to_string(*opts.as_case) + " (it is " +
                              to_string(v.tag) + ")");
    v.tag = *opts.as_case;
  }
  v.numeric_sup = riemann_sup_norm(m, opts.grid_n);

  switch (v.tag) {
    case CaseTag::SEP:
      v.criterion_holds = true;
      v.criterion_description = "f1 = f1(x1), f2 = f2(x2): always flat";
      break;
    case CaseTag::BOTH3:
      v.criterion_holds = g.product_vanishes(diff(f1, Axis::X3), diff(f2, Axis::X3)) &&
                          reciprocal_linear(g, f1, Axis::X3) &&
                          reciprocal_linear(g, f2, Axis::X3);
      v.criterion_description =
          "f1' f2' = 0 and each f_i(x3) is constant or c1/(x3 - c2)";
      break;
    case CaseTag::X1X3:
      v.criterion_holds = reciprocal_linear(g, f2, Axis::X3);
      v.criterion_description = "f2(x3) is constant or c1/(x3 - c2)";
      break;
    case CaseTag::BOTH2: {
      const ScalarExpr l1 = log_derivative(f1, Axis::X2);
      const ScalarExpr l2 = log_derivative(f2, Axis::X2);
      const ScalarExpr f1pp = diff(diff(f1, Axis::X2), Axis::X2);
      v.criterion_holds = g.identity(l1 * l2 + f1pp / f1, ScalarExpr(2.0) * l1 * l1);
      v.criterion_description = "(f1'/f1)(f2'/f2) + f1''/f1 = 2 (f1'/f1)^2";
      break;
    }
    case CaseTag::X2X1: {
      const ScalarExpr k1 = separation_quotient(f1, Axis::X2);
      const ScalarExpr k2 = -separation_quotient(f2, Axis::X1);
      v.criterion_holds = g.identity(k1, k2) && g.constant(k1);
      v.criterion_description =
          "(f1'' f1 - 2 f1'^2)/f1^4 = -(f2'' f2 - 2 f2'^2)/f2^4 = constant";
      break;
    }
    case CaseTag::X2X3:
      v.criterion_holds = g.product_vanishes(diff(f1, Axis::X2), diff(f2, Axis::X3)) &&
                          reciprocal_linear(g, f1, Axis::X2) &&
                          reciprocal_linear(g, f2, Axis::X3);
      v.criterion_description =
          "f1' f2' = 0, f1(x2) constant or c1/(x2 - c2), f2(x3) constant or c1/(x3 - c2)";
      break;
    case CaseTag::GENERAL:
      v.criterion_description = "no closed-form criterion for this dependency pattern";
      return v;
  }
  v.agrees = *v.criterion_holds == (v.numeric_sup < opts.tol_flat);
  return v;
}

ScalarExpr construct_flat_partner_x2(const ScalarExpr& f1, double c0, const Interval& x2_interval,
                                     int grid_n) {
  if (!f1.free_axes().subset_of(AxisSet{Axis::X2}))
    throw PreconditionError("f1 must depend on x2 only");
  if (c0 == 0.0) throw PreconditionError("c0 must be nonzero");
  const ScalarExpr f1p = diff(f1, Axis::X2);
  const DomainBox line({0.0, 1.0}, x2_interval, {0.0, 1.0});
  std::vector<Point> points;
  const Interval& s = line.interval(Axis::X2);
  for (int k = 0; k < grid_n; ++k) points.push_back({0.5, s.lo + (k + 0.5) * s.width() / grid_n, 0.5});
  if (!is_nowhere_zero(sample(f1p, points))) throw PreconditionError("f1' vanishes on the grid");
  return ScalarExpr(c0) * f1 * f1 / f1p;
}

SeparationSolution::SeparationSolution(const SeparationOdeSpec& spec) : spec_(spec) {
  if (spec.epsilon != 1 && spec.epsilon != -1) throw PreconditionError("epsilon must be +1 or -1");
  if (!(spec.j.lo < spec.j.hi)) throw PreconditionError("J must be a non-degenerate interval");
  if (spec.j.contains(0.0)) throw PreconditionError("J must not contain 0");
  constexpr int kScan = 256;
  for (int i = 0; i <= kScan; ++i) {
    const double y = spec.j.lo + spec.j.width() * i / kScan;
    if (!(-2.0 * spec.k * std::log(std::fabs(y)) + spec.r > 0.0))
      throw PreconditionError("-2k ln|y| + r must be positive on J");
  }
  f_hi_ = antiderivative(spec.j.hi);
}

double SeparationSolution::integrand(double y) const {
  return 1.0 / std::sqrt(-2.0 * spec_.k * std::log(std::fabs(y)) + spec_.r);
}

double SeparationSolution::antiderivative(double y) const {
  return adaptive_simpson([this](double t) { return integrand(t); }, spec_.j.lo, y);
}

Interval SeparationSolution::domain() const {
  const double a = spec_.epsilon * (0.0 - spec_.c0);
  const double b = spec_.epsilon * (f_hi_ - spec_.c0);
  return {std::min(a, b), std::max(a, b)};
}

double SeparationSolution::inverse(double t) const {
  if (t < 0.0 || t > f_hi_) {
    std::ostringstream msg;
    msg << "bisection target " << t << " outside F(J) = [0, " << f_hi_ << "]";
    throw PreconditionError(msg.str());
  }
  double lo = spec_.j.lo;
  double hi = spec_.j.hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (antiderivative(mid) < t)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double SeparationSolution::h(double x) const { return inverse(spec_.epsilon * x + spec_.c0); }

SeparationSolution solve_separation_ode(const SeparationOdeSpec& spec) {
  return SeparationSolution(spec);
}

}  // namespace etaricci
