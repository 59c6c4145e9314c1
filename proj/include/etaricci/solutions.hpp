#pragma once

// Closed-form almost eta-Ricci solitons for the dependency cases of a
// diagonal metric, and a catalogue of worked examples.
//
// Every constructor returns frame components. Unless stated otherwise eta is
// dx3, i.e. frame (0, 0, 1).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etaricci/soliton.hpp"

namespace etaricci {

/// f1 = f1(x1), f2 = f2(x2).
struct ThmNbParams {
  double lambda = 0.0;
  double mu = 0.0;
  std::array<double, 6> c{};
  /// Reference points of F1, F2 (F_i(ref_i) = 0). Default: 0 for constant
  /// f_i, the left end of the axis interval otherwise.
  std::optional<double> ref1;
  std::optional<double> ref2;
};

/// V1 = -lambda F1 + c1 F2 + c2 x3 + c3, V2 = -c1 F1 - lambda F2 + c4 x3 + c5,
/// V3 = -c2 F1 - c4 F2 - (lambda + mu) x3 + c6 with F_i' = 1/f_i.
SolitonData construct_thm_nb(const DiagonalMetric& m, const ThmNbParams& p);

enum class GsBranch { Auto, Distinct, EqualNonzero, Constant };

std::string to_string(GsBranch branch);
GsBranch gs_branch_from_string(const std::string& name);

/// f1 = f1(x3), f2 = f2(x3).
struct ThmGsParams {
  double c1 = 0.0;
  double c2 = 0.0;
  GsBranch branch = GsBranch::Auto;
  /// Free lambda for b = d != 0.
  ScalarExpr lambda = 0.0;
  /// V3 = F(x3) for constant f1, f2.
  ScalarExpr f = 0.0;
};

/// V1 = c1/f1, V2 = c2/f2 and, with b, d the structure functions (' = d/dx3):
///  b != d:     V3 = (b-d)'/(b-d) - (b+d), lambda = (b'd - bd')/(b-d),
///              mu = -((b-d)'' + b'd - bd')/(b-d) + ((b-d)'/(b-d))^2 + b^2 + d^2
///  b = d != 0: V3 = (b' - 2b^2 + lambda)/b, mu = -((b' + lambda)/b)' + 2b^2 - lambda
///  b = d = 0:  V3 = F, lambda = 0, mu = -F'
SolitonData construct_thm_gs(const DiagonalMetric& m, const ThmGsParams& p,
                             int grid_n = kDefaultGrid);

/// Branch actually used by construct_thm_gs for `p.branch == Auto`.
GsBranch resolve_gs_branch(const DiagonalMetric& m, GsBranch hint, int grid_n = kDefaultGrid);

/// f1 = f1(x1), f2 = f2(x3).
struct ThmGssParams {
  double c1 = 0.0;
  double c2 = 0.0;
  /// V3 when d vanishes identically (f2 constant); mu = -F'.
  ScalarExpr f = 0.0;
};

/// V = (c1, c2/f2, (d' - d^2)/d), lambda = 0, mu = -d''/d + (d'/d)^2 + d^2.
SolitonData construct_thm_gss(const DiagonalMetric& m, const ThmGssParams& p,
                              int grid_n = kDefaultGrid);

/// f1 = f1(x2), f2 = f2(x2).
struct ThmGscParams {
  double c1 = 0.0;
  double c2 = 0.0;
  /// G(x3) with F' = G.
  ScalarExpr g = 0.0;
  /// F(x3 lower end) = f0.
  double f0 = 0.0;
};

/// V = (c1, c2, F), lambda = 2 f2^2 (f1'/f1)^2 - f2 f2' (f1'/f1) - f2^2 f1''/f1,
/// mu = -lambda - G. c1 = c2 = 0 is required when f1 is not constant.
SolitonData construct_thm_gsc(const DiagonalMetric& m, const ThmGscParams& p,
                              int grid_n = kDefaultGrid);

/// f1 = f1(x2), f2 = f2(x1).
struct ThmCrossedParams {
  double c1 = 0.0;
  double c2 = 0.0;
  /// V3 = F(x3).
  ScalarExpr f = 0.0;
};

/// V = (c1, c2, F),
/// lambda = c1 f1 f2'/f2 + f1^2 [(f2'/f2)^2 - (f2'/f2)'] + f2^2 [(f1'/f1)^2 - (f1'/f1)'],
/// mu = -lambda - F'. Nonzero c1 or c2 requires f1, f2 constant.
SolitonData construct_thm_crossed(const DiagonalMetric& m, const ThmCrossedParams& p,
                                  int grid_n = kDefaultGrid);

/// f1 = f1(x2), f2 = f2(x3).
struct ThmGsmParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  /// F(x2) in a = -c2 f2 + F.
  ScalarExpr f = 0.0;
  /// V3 when d vanishes identically.
  ScalarExpr v3 = 0.0;
};

/// V = (c1, c2 f2 + c3/f2, V3) with d V3 = a V2 + d' - d^2,
/// lambda = a V2 - f2 F' + a^2, mu = -V3' - (d' - d^2) - lambda.
SolitonData construct_thm_gsm(const DiagonalMetric& m, const ThmGsmParams& p,
                              int grid_n = kDefaultGrid);

/// lambda, mu for V = d/dx3 and eta = dx3 in the given case (GENERAL means
/// classify(m)). Throws PreconditionError with the maximal violation when the
/// case's compatibility condition fails.
SolitonData lambda_mu_for_unit_V3(const DiagonalMetric& m, CaseTag tag = CaseTag::GENERAL,
                                  int grid_n = kDefaultGrid);

/// Left-hand side of the compatibility identity for f1 = f(x3), f2 = f(x3):
/// (f'' - f')/f - 2 (f'/f)^2 for the given f.
ScalarExpr unit_v3_compatibility(const ScalarExpr& f);

/// Names accepted by solve_by_name.
const std::vector<std::string>& theorem_names();

/// Builds a soliton from a theorem name and textual parameters, the way the
/// command-line front end does. Unknown keys are rejected.
SolitonData solve_by_name(const DiagonalMetric& m, const std::string& theorem,
                          const std::map<std::string, std::string>& params,
                          int grid_n = kDefaultGrid);

struct CatalogueEntry {
  std::string name;
  std::string description;
  SolitonData soliton;
  /// Expected lambda when constant.
  std::optional<double> lambda_constant;
  ScalarExpr expected_lambda;
  ScalarExpr expected_mu;
  SolitonKind kind = SolitonKind::Steady;
  /// Theorem reproducing the entry through solve_by_name, with parameters.
  std::string theorem;
  std::map<std::string, std::string> theorem_params;
};

std::vector<CatalogueEntry> builtin_examples();

}  // namespace etaricci
