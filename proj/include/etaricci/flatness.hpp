#pragma once

// Flatness criteria for the single-variable dependency cases, and the
// constructive solution of (f'' f - 2 f'^2) / f^4 = k.

#include <optional>
#include <string>

#include "etaricci/curvature.hpp"

namespace etaricci {

inline constexpr double kDefaultTolFlat = 1e-7;
inline constexpr int kDefaultGrid = 9;

struct FlatnessOptions {
  int grid_n = kDefaultGrid;
  double tol_flat = kDefaultTolFlat;
  /// Relative tolerance for the grid identities (f' == 0, (f'/f)' == (f'/f)^2, ...).
  double identity_tol = 1e-10;
  /// Evaluate this case's criterion instead of classify(m)'s; the metric
  /// must fit the case (constants fit every case).
  std::optional<CaseTag> as_case;
};

struct FlatnessVerdict {
  CaseTag tag = CaseTag::GENERAL;
  /// Empty for GENERAL metrics: no closed-form criterion applies.
  std::optional<bool> criterion_holds;
  std::string criterion_description;
  double numeric_sup = 0.0;
  std::optional<bool> agrees;
};

FlatnessVerdict flatness_criterion(const DiagonalMetric& m, const FlatnessOptions& opts = {});

/// f2 = c0 f1^2 / f1' for f1 = f1(x2) with f1' nowhere zero on the grid.
/// The pair (f1, f2) is flat.
ScalarExpr construct_flat_partner_x2(const ScalarExpr& f1, double c0,
                                     const Interval& x2_interval = {-1.0, 1.0},
                                     int grid_n = kDefaultGrid);

struct SeparationOdeSpec {
  double k = 0.0;
  double r = 1.0;
  double c0 = 0.0;
  int epsilon = 1;
  /// J: 0 outside J and -2k ln|y| + r > 0 on the closed interval.
  Interval j{1.0, 2.0};
};

/// Solution f = 1/h of (f'' f - 2 f'^2) / f^4 = k, equivalently h'' h = -k.
///
/// F is the antiderivative of y -> 1/sqrt(-2k ln|y| + r) with F(J.lo) = 0,
/// h(x) = F^{-1}(eps x + c0) and the domain is eps (F(J) - c0).
class SeparationSolution {
 public:
  explicit SeparationSolution(const SeparationOdeSpec& spec);

  const SeparationOdeSpec& spec() const { return spec_; }
  /// I_J as an increasing interval.
  Interval domain() const;

  double antiderivative(double y) const;
  /// F^{-1} by bisection on J.
  double inverse(double t) const;
  double h(double x) const;
  double f(double x) const { return 1.0 / h(x); }

 private:
  double integrand(double y) const;

  SeparationOdeSpec spec_;
  double f_hi_ = 0.0;  // F(J.hi)
};

SeparationSolution solve_separation_ode(const SeparationOdeSpec& spec);

}  // namespace etaricci
