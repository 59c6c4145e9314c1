#pragma once

// Diagonal metrics g = dx1^2/f1^2 + dx2^2/f2^2 + dx3^2 and their orthonormal
// frame E1 = f1 d/dx1, E2 = f2 d/dx2, E3 = d/dx3.

#include <array>
#include <string>

#include "etaricci/expr.hpp"
#include "etaricci/numeric.hpp"

namespace etaricci {

/// Components of a vector field (or one-form) in the frame basis, index 0..2.
using FrameVector = std::array<ScalarExpr, 3>;
using CoordinateTriple = std::array<ScalarExpr, 3>;
/// Symmetric 3x3 matrix of expressions in the frame basis.
using FrameMatrix = std::array<std::array<ScalarExpr, 3>, 3>;

inline constexpr double kNonzeroThreshold = 1e-12;

class DiagonalMetric {
 public:
  DiagonalMetric(ScalarExpr f1, ScalarExpr f2, DomainBox domain = DomainBox());

  const ScalarExpr& f1() const { return f1_; }
  const ScalarExpr& f2() const { return f2_; }
  const DomainBox& domain() const { return domain_; }

  /// Frame scale along an axis: f1, f2 or 1, so that E_i = scale(i) d/dx_i.
  ScalarExpr scale(Axis axis) const;

  /// E_i(phi) as an expression.
  ScalarExpr frame_derivative(Axis axis, const ScalarExpr& phi) const;

  /// Throws PreconditionError when |f1| or |f2| <= 1e-12 at a grid point.
  void check_nonvanishing(int grid_n) const;

 private:
  ScalarExpr f1_;
  ScalarExpr f2_;
  DomainBox domain_;
};

/// a = (f2/f1) df1/dx2, b = (1/f1) df1/dx3, c = (f1/f2) df2/dx1, d = (1/f2) df2/dx3.
struct StructureFunctions {
  ScalarExpr a;
  ScalarExpr b;
  ScalarExpr c;
  ScalarExpr d;
};

StructureFunctions structure_functions(const DiagonalMetric& m);

/// [E1,E2] = -a E1 + c E2, [E1,E3] = -b E1, [E2,E3] = -d E2.
struct LieBracketTable {
  FrameVector e1e2;
  FrameVector e1e3;
  FrameVector e2e3;

  /// [E_i, E_j] for any pair, using antisymmetry.
  FrameVector bracket(Axis i, Axis j) const;
};

LieBracketTable lie_bracket_table(const DiagonalMetric& m);

enum class CaseTag { SEP, BOTH3, X1X3, BOTH2, X2X1, X2X3, GENERAL };

std::string to_string(CaseTag tag);
CaseTag case_tag_from_string(const std::string& name);

/// Dependency case of (f1, f2), decided from their free axes with priority
/// SEP > BOTH3 > X1X3 > BOTH2 > X2X1 > X2X3.
CaseTag classify(const DiagonalMetric& m);

/// True when f1 and f2 depend only on the axes of `tag` (constants fit every
/// pattern, GENERAL fits everything).
bool fits_case(const DiagonalMetric& m, CaseTag tag);

/// V = sum V^k E_k.
struct VectorField {
  FrameVector frame;

  static VectorField zero() { return {FrameVector{0.0, 0.0, 0.0}}; }
  /// Converts coordinate components (v^1, v^2, v^3) of v = sum v^i d/dx_i.
  static VectorField from_coordinates(const CoordinateTriple& coords, const DiagonalMetric& m);
};

/// eta = sum eta^k e_k with e_k dual to E_k; eta = dx3 is (0, 0, 1).
struct OneForm {
  FrameVector frame;

  static OneForm zero() { return {FrameVector{0.0, 0.0, 0.0}}; }
  static OneForm dx3() { return {FrameVector{0.0, 0.0, 1.0}}; }
  /// Converts coefficients w_i of eta = sum w_i dx^i.
  static OneForm from_coordinates(const CoordinateTriple& coords, const DiagonalMetric& m);
};

/// (V^1 f1, V^2 f2, V^3).
CoordinateTriple to_coordinate_components(const VectorField& v, const DiagonalMetric& m);
/// (eta^1 / f1, eta^2 / f2, eta^3).
CoordinateTriple to_coordinate_components(const OneForm& eta, const DiagonalMetric& m);

/// Evaluates a frame vector at a point.
std::array<double, 3> evaluate(const FrameVector& v, const Point& p);

}  // namespace etaricci
