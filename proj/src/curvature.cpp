#include "etaricci/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace etaricci {

namespace {

constexpr Axis E1 = Axis::X1;
constexpr Axis E2 = Axis::X2;
constexpr Axis E3 = Axis::X3;

FrameVector operator-(const FrameVector& v) { return {-v[0], -v[1], -v[2]}; }

FrameVector add(const FrameVector& u, const FrameVector& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

FrameVector sub(const FrameVector& u, const FrameVector& v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

FrameVector scaled(const ScalarExpr& s, const FrameVector& v) {
  return {s * v[0], s * v[1], s * v[2]};
}

}  // namespace

ConnectionTable connection_table(const DiagonalMetric& m) {
  const auto [a, b, c, d] = structure_functions(m);
  ConnectionTable t;
  t.entry[0][0] = {0.0, a, b};
  t.entry[0][1] = {-a, 0.0, 0.0};
  t.entry[0][2] = {-b, 0.0, 0.0};
  t.entry[1][0] = {0.0, -c, 0.0};
  t.entry[1][1] = {c, 0.0, d};
  t.entry[1][2] = {0.0, -d, 0.0};
  t.entry[2][0] = {0.0, 0.0, 0.0};
  t.entry[2][1] = {0.0, 0.0, 0.0};
  t.entry[2][2] = {0.0, 0.0, 0.0};
  return t;
}

FrameVector covariant_derivative(const DiagonalMetric& m, const ConnectionTable& nabla,
                                 const FrameVector& x, const FrameVector& y) {
  FrameVector out{0.0, 0.0, 0.0};
  for (Axis i : kAxes) {
    const ScalarExpr& xi = x[index(i)];
    if (xi.is_literal(0.0)) continue;
    // nabla_{E_i} Y = sum_l E_i(Y^l) E_l + Y^l nabla_{E_i} E_l
    FrameVector term{0.0, 0.0, 0.0};
    for (Axis l : kAxes) {
      const ScalarExpr& yl = y[index(l)];
      term[index(l)] = term[index(l)] + m.frame_derivative(i, yl);
      term = add(term, scaled(yl, nabla(i, l)));
    }
    out = add(out, scaled(xi, term));
  }
  return out;
}

FrameVector riemann_frame(const DiagonalMetric& m, Axis i, Axis j, Axis k) {
  if (i == j) return {0.0, 0.0, 0.0};
  const auto [a, b, c, d] = structure_functions(m);
  auto E = [&](Axis axis, const ScalarExpr& phi) { return m.frame_derivative(axis, phi); };

  const ScalarExpr k12 = E(E1, c) + E(E2, a) - a * a - c * c - b * d;  // sectional K(E1,E2)
  const ScalarExpr k13 = E(E3, b) - b * b;
  const ScalarExpr k23 = E(E3, d) - d * d;
  const ScalarExpr p = E(E3, c) - c * d;
  const ScalarExpr q = E(E3, a) - a * b;

  const int key = number(i) * 100 + number(j) * 10 + number(k);
  switch (key) {
    case 122:
      return {k12, 0.0, p};
    case 211:
      return {0.0, k12, q};
    case 133:
      return {k13, 0.0, 0.0};
    case 233:
      return {0.0, k23, 0.0};
    case 311:
      return {0.0, q, k13};
    case 322:
      return {p, 0.0, k23};
    case 123:
      return {q, -p, 0.0};
    case 231:
      return {0.0, p, 0.0};
    case 312:
      return {-q, 0.0, 0.0};
    default:
      break;
  }
  // Every remaining triple with i != j is the (i, j) swap of a tabulated one.
  return -riemann_frame(m, j, i, k);
}

FrameVector riemann_from_definition(const DiagonalMetric& m, Axis i, Axis j, Axis k) {
  const ConnectionTable nabla = connection_table(m);
  const LieBracketTable brackets = lie_bracket_table(m);
  auto unit = [](Axis a) {
    FrameVector v{0.0, 0.0, 0.0};
    v[index(a)] = 1.0;
    return v;
  };
  const FrameVector ei = unit(i);
  const FrameVector ej = unit(j);
  const FrameVector& njk = nabla(j, k);
  const FrameVector& nik = nabla(i, k);
  const FrameVector first = covariant_derivative(m, nabla, ei, njk);
  const FrameVector second = covariant_derivative(m, nabla, ej, nik);
  const FrameVector third = covariant_derivative(m, nabla, brackets.bracket(i, j), unit(k));
  return sub(sub(first, second), third);
}

RiemannComponents riemann_components(const DiagonalMetric& m) {
  RiemannComponents r;
  for (Axis i : kAxes)
    for (Axis j : kAxes)
      for (Axis k : kAxes) r[index(i)][index(j)][index(k)] = riemann_frame(m, i, j, k);
  return r;
}

FrameMatrix ricci_frame(const DiagonalMetric& m) {
  const auto [a, b, c, d] = structure_functions(m);
  auto E = [&](Axis axis, const ScalarExpr& phi) { return m.frame_derivative(axis, phi); };
  const ScalarExpr common = E(E1, c) + E(E2, a) - a * a - c * c - b * d;
  const ScalarExpr r11 = common + E(E3, b) - b * b;
  const ScalarExpr r22 = common + E(E3, d) - d * d;
  const ScalarExpr r33 = E(E3, b) + E(E3, d) - b * b - d * d;
  const ScalarExpr r12 = 0.0;
  const ScalarExpr r13 = E(E3, c) - c * d;
  const ScalarExpr r23 = E(E3, a) - a * b;
  return {{{r11, r12, r13}, {r12, r22, r23}, {r13, r23, r33}}};
}

RealMatrix evaluate(const FrameMatrix& m, const Point& p) {
  RealMatrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = eval(m[i][j], p);
  return out;
}

namespace {

// Gamma[k][i][j] = Gamma^k_{ij}.
using Christoffel = std::array<std::array<std::array<double, 3>, 3>, 3>;

class CoordinateMetric {
 public:
  explicit CoordinateMetric(const DiagonalMetric& m) : m_(m) {}

  std::array<double, 3> diagonal(const Point& p) const {
    std::array<double, 3> g{};
    const double f1 = eval(m_.f1(), p);
    const double f2 = eval(m_.f2(), p);
    if (std::fabs(f1) < kNonzeroThreshold || std::fabs(f2) < kNonzeroThreshold)
      throw DomainError("metric function vanishes on the oracle stencil", "f1, f2");
    g[0] = 1.0 / (f1 * f1);
    g[1] = 1.0 / (f2 * f2);
    g[2] = 1.0;
    return g;
  }

  Christoffel christoffel(const Point& p, double h) const {
    const std::array<double, 3> g = diagonal(p);
    // dg[l][i] = d g_ii / dx_l
    std::array<std::array<double, 3>, 3> dg{};
    for (Axis l : kAxes) {
      const auto gp = diagonal(shifted(p, l, h));
      const auto gm = diagonal(shifted(p, l, -h));
      for (int i = 0; i < 3; ++i) dg[index(l)][i] = (gp[i] - gm[i]) / (2.0 * h);
    }
    auto dmetric = [&](int l, int i, int j) { return i == j ? dg[l][i] : 0.0; };
    Christoffel gamma{};
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          gamma[k][i][j] =
              0.5 / g[k] * (dmetric(i, j, k) + dmetric(j, i, k) - dmetric(k, i, j));
    return gamma;
  }

 private:
  const DiagonalMetric& m_;
};

}  // namespace

RealMatrix ricci_coordinate_oracle(const DiagonalMetric& m, const Point& p, double step,
                                   double outer_step) {
  if (!(step > 0.0 && outer_step > 0.0)) throw PreconditionError("oracle steps must be positive");
  if (!m.domain().contains_ball(p, step + outer_step))
    throw DomainError("oracle stencil leaves the domain", "ricci_coordinate_oracle");
  const CoordinateMetric metric(m);
  const Christoffel gamma = metric.christoffel(p, step);
  // dgamma[l][k][i][j] = d Gamma^k_ij / dx_l
  std::array<Christoffel, 3> dgamma{};
  for (Axis l : kAxes) {
    const Christoffel gp = metric.christoffel(shifted(p, l, outer_step), step);
    const Christoffel gm = metric.christoffel(shifted(p, l, -outer_step), step);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          dgamma[index(l)][k][i][j] = (gp[k][i][j] - gm[k][i][j]) / (2.0 * outer_step);
  }
  // R_{sn} = d_r G^r_{ns} - d_n G^r_{rs} + G^r_{rl} G^l_{ns} - G^r_{nl} G^l_{rs}
  RealMatrix ric{};
  for (int s = 0; s < 3; ++s)
    for (int n = 0; n < 3; ++n) {
      double v = 0.0;
      for (int r = 0; r < 3; ++r) {
        v += dgamma[r][r][n][s] - dgamma[n][r][r][s];
        for (int l = 0; l < 3; ++l)
          v += gamma[r][r][l] * gamma[l][n][s] - gamma[r][n][l] * gamma[l][r][s];
      }
      ric[s][n] = v;
    }
  const std::array<double, 3> scale{eval(m.f1(), p), eval(m.f2(), p), 1.0};
  RealMatrix frame{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) frame[i][j] = scale[i] * scale[j] * ric[i][j];
  return frame;
}

double riemann_sup_norm(const DiagonalMetric& m, int grid_n) {
  const RiemannComponents r = riemann_components(m);
  double sup = 0.0;
  for (const Point& p : m.domain().grid(grid_n))
    for (const auto& plane : r)
      for (const auto& row : plane)
        for (const FrameVector& v : row)
          for (const ScalarExpr& comp : v) sup = std::max(sup, std::fabs(eval(comp, p)));
  return sup;
}

}  // namespace etaricci
