#include "etaricci/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace etaricci {

namespace {

std::array<double, 3> scales(const DiagonalMetric& m, const Point& p) {
  return {eval(m.f1(), p), eval(m.f2(), p), 1.0};
}

double scale_derivative(const DiagonalMetric& m, Axis which, Axis along, const Point& p,
                        double step) {
  if (which == Axis::X3) return 0.0;
  return finite_difference(m.scale(which), along, p, step);
}

using Matrix3 = std::array<std::array<double, 3>, 3>;

Matrix3 pullback(const DiagonalMetric& m, const std::array<double, 3>& v, const Matrix3& dv,
                 const Point& p, double t) {
  Point q = p;
  for (int k = 0; k < 3; ++k) q[k] += t * v[k];
  const std::array<double, 3> s = scales(m, q);
  std::array<double, 3> g{1.0 / (s[0] * s[0]), 1.0 / (s[1] * s[1]), 1.0};
  // J = I + t Dv, J[k][i] = d(phi^k)/dx^i
  Matrix3 jac{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) jac[k][i] = (k == i ? 1.0 : 0.0) + t * dv[k][i];
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += g[k] * jac[k][i] * jac[k][j];
      out[i][j] = sum;
    }
  return out;
}

}  // namespace

std::array<double, 3> bracket_oracle(const DiagonalMetric& m, Axis i, Axis j, const Point& p,
                                     double step) {
  // [E_i, E_j] x_k = s_i d_i(s_j) delta_jk - s_j d_j(s_i) delta_ik
  const std::array<double, 3> s = scales(m, p);
  std::array<double, 3> coord{};
  coord[index(j)] += s[index(i)] * scale_derivative(m, j, i, p, step);
  coord[index(i)] -= s[index(j)] * scale_derivative(m, i, j, p, step);
  return {coord[0] / s[0], coord[1] / s[1], coord[2]};
}

RealMatrix lie_derivative_oracle(const DiagonalMetric& m, const VectorField& v, const Point& p,
                                 double t, double step) {
  const CoordinateTriple vc = to_coordinate_components(v, m);
  const std::array<double, 3> v0{eval(vc[0], p), eval(vc[1], p), eval(vc[2], p)};
  Matrix3 dv{};
  for (int k = 0; k < 3; ++k)
    for (Axis i : kAxes) dv[k][index(i)] = finite_difference(vc[k], i, p, step);

  const Matrix3 plus = pullback(m, v0, dv, p, t);
  const Matrix3 minus = pullback(m, v0, dv, p, -t);
  const std::array<double, 3> s = scales(m, p);
  RealMatrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = s[i] * s[j] * (plus[i][j] - minus[i][j]) / (2.0 * t);
  return out;
}

OracleComparison compare_ricci(const DiagonalMetric& m, int grid_n, double tol, double step) {
  const FrameMatrix ric = ricci_frame(m);
  OracleComparison out;
  for (const Point& p : m.domain().grid(grid_n)) {
    if (!m.domain().contains_ball(p, step + kDefaultOuterStep)) continue;
    const RealMatrix exact = evaluate(ric, p);
    const RealMatrix approx = ricci_coordinate_oracle(m, p, step, kDefaultOuterStep);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        out.max_abs_diff = std::max(out.max_abs_diff, std::fabs(exact[i][j] - approx[i][j]));
        out.scale = std::max(out.scale, std::fabs(exact[i][j]));
      }
    ++out.points;
  }
  out.agrees = out.points > 0 && out.max_abs_diff <= tol * (1.0 + out.scale);
  return out;
}

OracleComparison compare_brackets(const DiagonalMetric& m, int grid_n, double tol, double step) {
  const LieBracketTable table = lie_bracket_table(m);
  OracleComparison out;
  for (const Point& p : m.domain().grid(grid_n)) {
    if (!m.domain().contains_ball(p, step)) continue;
    for (Axis i : kAxes)
      for (Axis j : kAxes) {
        if (index(j) <= index(i)) continue;
        const std::array<double, 3> exact = evaluate(table.bracket(i, j), p);
        const std::array<double, 3> approx = bracket_oracle(m, i, j, p, step);
        for (int k = 0; k < 3; ++k) {
          out.max_abs_diff = std::max(out.max_abs_diff, std::fabs(exact[k] - approx[k]));
          out.scale = std::max(out.scale, std::fabs(exact[k]));
        }
      }
    ++out.points;
  }
  out.agrees = out.points > 0 && out.max_abs_diff <= tol * (1.0 + out.scale);
  return out;
}

OracleComparison compare_lie_derivative(const DiagonalMetric& m, const VectorField& v, int grid_n,
                                        double tol, double step) {
  const FrameMatrix lie = lie_derivative_metric(m, v);
  OracleComparison out;
  for (const Point& p : m.domain().grid(grid_n)) {
    if (!m.domain().contains_ball(p, 1e-3)) continue;
    const RealMatrix exact = evaluate(lie, p);
    const RealMatrix approx = lie_derivative_oracle(m, v, p, 1e-4, step);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        out.max_abs_diff = std::max(out.max_abs_diff, std::fabs(exact[i][j] - approx[i][j]));
        out.scale = std::max(out.scale, std::fabs(exact[i][j]));
      }
    ++out.points;
  }
  out.agrees = out.points > 0 && out.max_abs_diff <= tol * (1.0 + out.scale);
  return out;
}

}  // namespace etaricci
