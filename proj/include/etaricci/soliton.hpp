#pragma once

// Residuals of 1/2 L_V g + Ric + lambda g + mu eta (x) eta = 0 in the frame
// basis, Lie derivatives of the metric and Killing checks.

#include <array>
#include <string>
#include <vector>

#include "etaricci/curvature.hpp"
#include "etaricci/flatness.hpp"

namespace etaricci {

inline constexpr double kDefaultTolSoliton = 1e-8;

struct SolitonData {
  DiagonalMetric metric;
  VectorField v;
  OneForm eta;
  ScalarExpr lambda;
  ScalarExpr mu;
};

struct SolitonOptions {
  int grid_n = kDefaultGrid;
  double tol_soliton = kDefaultTolSoliton;
};

/// (L_V g)(E_i, E_j) = E_i(V^j) + E_j(V^i)
///   + sum_k V^k [g(nabla_{E_i} E_k, E_j) + g(E_i, nabla_{E_j} E_k)].
FrameMatrix lie_derivative_metric(const DiagonalMetric& m, const VectorField& v);

/// Left-hand side of the soliton equation, entry (i, j); zero for a soliton.
FrameMatrix soliton_system(const SolitonData& s);

/// Which components are pinned: V = E3, eta = e3 (i.e. dx3), or both.
enum class Specialization { V3, ETA3, BOTH };

std::string to_string(Specialization which);

/// The reduced system for pinned V and/or eta. Throws PreconditionError when
/// the frame components of s differ from the pinned values on the grid.
FrameMatrix specialized_system(const SolitonData& s, Specialization which, int grid_n);

/// The six independent index pairs in report order.
inline constexpr std::array<std::array<int, 2>, 6> kEquationPairs{
    {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct EquationResidual {
  int i = 1;
  int j = 1;
  double max_abs = 0.0;
  double rms = 0.0;
  /// max_abs / scale, the quantity compared with the tolerance.
  double normalized = 0.0;
};

struct ResidualReport {
  std::array<EquationResidual, 6> equations;
  /// 1 + max |Ric(E_i, E_j)| on the grid.
  double scale = 1.0;
  int grid_n = kDefaultGrid;
  double tol = kDefaultTolSoliton;
  bool verdict = false;
  std::vector<std::string> warnings;

  const EquationResidual& worst() const;
  const EquationResidual& equation(int i, int j) const;
};

ResidualReport residual(const SolitonData& s, const SolitonOptions& opts = {});
ResidualReport residual_specialized(const SolitonData& s, Specialization which,
                                    const SolitonOptions& opts = {});

struct KillingCheck {
  bool killing = false;
  double sup_norm = 0.0;
};

KillingCheck is_killing(const DiagonalMetric& m, const VectorField& v,
                        const SolitonOptions& opts = {});

enum class SolitonKind { Shrinking, Steady, Expanding, NonConstant };

std::string to_string(SolitonKind kind);
SolitonKind soliton_kind_from_string(const std::string& name);

/// Sign of lambda when it is grid-constant, NonConstant otherwise.
SolitonKind soliton_kind(const SolitonData& s, int grid_n = kDefaultGrid);

}  // namespace etaricci
