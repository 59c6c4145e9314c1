#pragma once

// Levi-Civita connection, Riemann and Ricci tensors of a diagonal metric in
// the orthonormal frame, plus a coordinate finite-difference Ricci oracle.

#include "etaricci/metric.hpp"

namespace etaricci {

/// entry[i][j] = nabla_{E_i} E_j in frame components.
struct ConnectionTable {
  std::array<std::array<FrameVector, 3>, 3> entry;

  const FrameVector& operator()(Axis i, Axis j) const { return entry[index(i)][index(j)]; }
};

ConnectionTable connection_table(const DiagonalMetric& m);

/// nabla_X Y for frame-component vector fields X and Y.
FrameVector covariant_derivative(const DiagonalMetric& m, const ConnectionTable& nabla,
                                 const FrameVector& x, const FrameVector& y);

/// R(E_i, E_j) E_k from the closed-form component table; pairs not listed
/// there follow by antisymmetry in (i, j), and R(E_i, E_i) = 0.
FrameVector riemann_frame(const DiagonalMetric& m, Axis i, Axis j, Axis k);

/// R(E_i, E_j) E_k = nabla_i nabla_j E_k - nabla_j nabla_i E_k - nabla_[E_i,E_j] E_k,
/// composed symbolically from the connection table.
FrameVector riemann_from_definition(const DiagonalMetric& m, Axis i, Axis j, Axis k);

/// All 27 components R(E_i,E_j)E_k, indexed [i][j][k].
using RiemannComponents = std::array<std::array<std::array<FrameVector, 3>, 3>, 3>;
RiemannComponents riemann_components(const DiagonalMetric& m);

/// Ric(E_i, E_j); entries (i,j) and (j,i) share one expression.
FrameMatrix ricci_frame(const DiagonalMetric& m);

using RealMatrix = std::array<std::array<double, 3>, 3>;

RealMatrix evaluate(const FrameMatrix& m, const Point& p);

/// Ricci tensor in the frame basis computed independently from coordinate
/// Christoffel symbols: metric partials by central differences (`step`),
/// Christoffel partials by a second, outer central difference (`outer_step`).
/// Only f1 and f2 are evaluated; no symbolic derivative is used.
RealMatrix ricci_coordinate_oracle(const DiagonalMetric& m, const Point& p,
                                   double step = kDefaultFdStep,
                                   double outer_step = kDefaultOuterStep);

/// sup over the grid of every component of every R(E_i,E_j)E_k.
double riemann_sup_norm(const DiagonalMetric& m, int grid_n);

}  // namespace etaricci
