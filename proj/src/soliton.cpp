#include "etaricci/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace etaricci {

namespace {

std::string point_text(const Point& p) {
  std::ostringstream out;
  out << "at (" << p[0] << ", " << p[1] << ", " << p[2] << ")";
  return out.str();
}

double eval_at(const ScalarExpr& e, const Point& p) {
  try {
    return eval(e, p);
  } catch (const DomainError& err) {
    throw err.located(point_text(p));
  }
}

bool matches_on_grid(const ScalarExpr& e, double value, const std::vector<Point>& points) {
  if (e.is_literal(value)) return true;
  for (const Point& p : points)
    if (std::fabs(eval_at(e, p) - value) > 1e-12) return false;
  return true;
}

ResidualReport build_report(const SolitonData& s, const FrameMatrix& system,
                            const SolitonOptions& opts) {
  if (opts.grid_n < 1 || !(opts.tol_soliton > 0.0))
    throw PreconditionError("invalid soliton options");
  s.metric.check_nonvanishing(opts.grid_n);
  const std::vector<Point> points = s.metric.domain().grid(opts.grid_n);
  const FrameMatrix ric = ricci_frame(s.metric);

  ResidualReport report;
  report.grid_n = opts.grid_n;
  report.tol = opts.tol_soliton;

  double ric_max = 0.0;
  std::array<double, 6> sum_sq{};
  for (const Point& p : points) {
    for (const auto& row : ric)
      for (const ScalarExpr& e : row) ric_max = std::max(ric_max, std::fabs(eval_at(e, p)));
    for (std::size_t q = 0; q < kEquationPairs.size(); ++q) {
      const auto [i, j] = kEquationPairs[q];
      const double r = eval_at(system[i - 1][j - 1], p);
      report.equations[q].max_abs = std::max(report.equations[q].max_abs, std::fabs(r));
      sum_sq[q] += r * r;
    }
  }
  report.scale = 1.0 + ric_max;
  report.verdict = true;
  for (std::size_t q = 0; q < kEquationPairs.size(); ++q) {
    EquationResidual& eq = report.equations[q];
    eq.i = kEquationPairs[q][0];
    eq.j = kEquationPairs[q][1];
    eq.rms = std::sqrt(sum_sq[q] / static_cast<double>(points.size()));
    eq.normalized = eq.max_abs / report.scale;
    if (!(eq.normalized < opts.tol_soliton)) report.verdict = false;
  }

  bool eta_nonzero = false;
  for (const ScalarExpr& c : s.eta.frame)
    if (!matches_on_grid(c, 0.0, points)) eta_nonzero = true;
  if (eta_nonzero && matches_on_grid(s.mu, 0.0, points))
    report.warnings.push_back("mu vanishes on the grid while eta is nonzero");
  return report;
}

}  // namespace

FrameMatrix lie_derivative_metric(const DiagonalMetric& m, const VectorField& v) {
  const ConnectionTable nabla = connection_table(m);
  FrameMatrix out;
  for (Axis i : kAxes) {
    for (Axis j : kAxes) {
      if (index(j) < index(i)) {
        out[index(i)][index(j)] = out[index(j)][index(i)];
        continue;
      }
      ScalarExpr entry = m.frame_derivative(i, v.frame[index(j)]) +
                         m.frame_derivative(j, v.frame[index(i)]);
      for (Axis k : kAxes) {
        const ScalarExpr& vk = v.frame[index(k)];
        if (vk.is_literal(0.0)) continue;
        entry = entry + vk * (nabla(i, k)[index(j)] + nabla(j, k)[index(i)]);
      }
      out[index(i)][index(j)] = entry;
    }
  }
  return out;
}

FrameMatrix soliton_system(const SolitonData& s) {
  const FrameMatrix lie = lie_derivative_metric(s.metric, s.v);
  const FrameMatrix ric = ricci_frame(s.metric);
  const FrameVector& eta = s.eta.frame;
  FrameMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      ScalarExpr e = ScalarExpr(0.5) * lie[i][j] + ric[i][j] + s.mu * eta[i] * eta[j];
      if (i == j) e = e + s.lambda;
      out[i][j] = e;
    }
  }
  return out;
}

std::string to_string(Specialization which) {
  switch (which) {
    case Specialization::V3:
      return "V3";
    case Specialization::ETA3:
      return "ETA3";
    case Specialization::BOTH:
      return "BOTH";
  }
  return "BOTH";
}

FrameMatrix specialized_system(const SolitonData& s, Specialization which, int grid_n) {
  const std::vector<Point> points = s.metric.domain().grid(grid_n);
  const bool pin_v = which != Specialization::ETA3;
  const bool pin_eta = which != Specialization::V3;
  auto check_pinned = [&](const FrameVector& f, const char* name) {
    if (!matches_on_grid(f[0], 0.0, points) || !matches_on_grid(f[1], 0.0, points) ||
        !matches_on_grid(f[2], 1.0, points))
      throw PreconditionError(std::string("frame components of ") + name +
                              " are not (0, 0, 1) on the grid");
  };
  if (pin_v) check_pinned(s.v.frame, "V");
  if (pin_eta) check_pinned(s.eta.frame, "eta");

  const auto [a, b, c, d] = structure_functions(s.metric);
  const FrameMatrix ric = ricci_frame(s.metric);
  const ScalarExpr& lambda = s.lambda;
  const ScalarExpr& mu = s.mu;
  auto E = [&](Axis axis, const ScalarExpr& phi) { return s.metric.frame_derivative(axis, phi); };
  const ScalarExpr half = 0.5;

  FrameMatrix out;
  auto put = [&](int i, int j, const ScalarExpr& e) {
    out[i - 1][j - 1] = e;
    out[j - 1][i - 1] = e;
  };
  if (which == Specialization::V3) {
    const FrameVector& eta = s.eta.frame;
    put(1, 1, -b + ric[0][0] + lambda + mu * eta[0] * eta[0]);
    put(2, 2, -d + ric[1][1] + lambda + mu * eta[1] * eta[1]);
    put(3, 3, ric[2][2] + lambda + mu * eta[2] * eta[2]);
    put(1, 2, mu * eta[0] * eta[1]);
    put(1, 3, ric[0][2] + mu * eta[0] * eta[2]);
    put(2, 3, ric[1][2] + mu * eta[1] * eta[2]);
  } else if (which == Specialization::ETA3) {
    const ScalarExpr& v1 = s.v.frame[0];
    const ScalarExpr& v2 = s.v.frame[1];
    const ScalarExpr& v3 = s.v.frame[2];
    put(1, 1, E(Axis::X1, v1) - a * v2 - b * v3 + ric[0][0] + lambda);
    put(2, 2, E(Axis::X2, v2) - c * v1 - d * v3 + ric[1][1] + lambda);
    put(3, 3, E(Axis::X3, v3) + ric[2][2] + lambda + mu);
    put(1, 2, half * (E(Axis::X1, v2) + E(Axis::X2, v1) + a * v1 + c * v2));
    put(1, 3, half * (E(Axis::X1, v3) + E(Axis::X3, v1) + b * v1) + ric[0][2]);
    put(2, 3, half * (E(Axis::X2, v3) + E(Axis::X3, v2) + d * v2) + ric[1][2]);
  } else {
    put(1, 1, -b + ric[0][0] + lambda);
    put(2, 2, -d + ric[1][1] + lambda);
    put(3, 3, ric[2][2] + lambda + mu);
    put(1, 2, 0.0);
    put(1, 3, ric[0][2]);
    put(2, 3, ric[1][2]);
  }
  return out;
}

const EquationResidual& ResidualReport::worst() const {
  return *std::max_element(equations.begin(), equations.end(),
                           [](const EquationResidual& x, const EquationResidual& y) {
                             return x.max_abs < y.max_abs;
                           });
}

const EquationResidual& ResidualReport::equation(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const EquationResidual& eq : equations)
    if (eq.i == i && eq.j == j) return eq;
  throw PreconditionError("no equation (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

ResidualReport residual(const SolitonData& s, const SolitonOptions& opts) {
  return build_report(s, soliton_system(s), opts);
}

ResidualReport residual_specialized(const SolitonData& s, Specialization which,
                                    const SolitonOptions& opts) {
  return build_report(s, specialized_system(s, which, opts.grid_n), opts);
}

KillingCheck is_killing(const DiagonalMetric& m, const VectorField& v, const SolitonOptions& opts) {
  m.check_nonvanishing(opts.grid_n);
  const FrameMatrix lie = lie_derivative_metric(m, v);
  KillingCheck out;
  for (const Point& p : m.domain().grid(opts.grid_n))
    for (const auto& row : lie)
      for (const ScalarExpr& e : row) out.sup_norm = std::max(out.sup_norm, std::fabs(eval_at(e, p)));
  out.killing = out.sup_norm < opts.tol_soliton;
  return out;
}

std::string to_string(SolitonKind kind) {
  switch (kind) {
    case SolitonKind::Shrinking:
      return "shrinking";
    case SolitonKind::Steady:
      return "steady";
    case SolitonKind::Expanding:
      return "expanding";
    case SolitonKind::NonConstant:
      return "non-constant";
  }
  return "non-constant";
}

SolitonKind soliton_kind_from_string(const std::string& name) {
  for (SolitonKind k : {SolitonKind::Shrinking, SolitonKind::Steady, SolitonKind::Expanding,
                        SolitonKind::NonConstant})
    if (to_string(k) == name) return k;
  throw PreconditionError("unknown soliton kind '" + name + "'");
}

SolitonKind soliton_kind(const SolitonData& s, int grid_n) {
  const SampleStats st = sample(s.lambda, s.metric.domain().grid(grid_n));
  if (!is_grid_constant(st)) return SolitonKind::NonConstant;
  const double lambda = 0.5 * (st.min + st.max);
  if (lambda < -1e-10) return SolitonKind::Shrinking;
  if (lambda > 1e-10) return SolitonKind::Expanding;
  return SolitonKind::Steady;
}

}  // namespace etaricci
