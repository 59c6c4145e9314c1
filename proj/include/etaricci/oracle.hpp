#pragma once

// Finite-difference cross-checks that never call diff(). Used by the test
// suite and by `etaricci verify`.

#include "etaricci/curvature.hpp"
#include "etaricci/soliton.hpp"

namespace etaricci {

/// Frame coefficients of [E_i, E_j] at p, from the commutator applied to the
/// coordinate functions with central differences of f1, f2.
std::array<double, 3> bracket_oracle(const DiagonalMetric& m, Axis i, Axis j, const Point& p,
                                     double step = kDefaultFdStep);

/// (L_V g)(E_i, E_j) at p from the pullback of g along the Euler flow
/// x -> x + t v(x), symmetric in t. Only values of f1, f2 and the coordinate
/// components of V are used.
RealMatrix lie_derivative_oracle(const DiagonalMetric& m, const VectorField& v, const Point& p,
                                 double t = 1e-4, double step = kDefaultFdStep);

struct OracleComparison {
  int points = 0;
  double max_abs_diff = 0.0;
  /// max |reference| over the compared points.
  double scale = 0.0;
  bool agrees = false;
};

/// ricci_frame vs ricci_coordinate_oracle on the grid points whose stencil
/// fits the domain; agrees <=> max diff <= tol * (1 + scale).
OracleComparison compare_ricci(const DiagonalMetric& m, int grid_n, double tol = 1e-4,
                               double step = kDefaultFdStep);

/// lie_bracket_table vs bracket_oracle on the grid.
OracleComparison compare_brackets(const DiagonalMetric& m, int grid_n, double tol = 1e-6,
                                  double step = kDefaultFdStep);

/// lie_derivative_metric vs lie_derivative_oracle on the grid.
OracleComparison compare_lie_derivative(const DiagonalMetric& m, const VectorField& v, int grid_n,
                                        double tol = 1e-4, double step = kDefaultFdStep);

}  // namespace etaricci
