#include <cmath>

#include "doctest.h"

#include "etaricci/parse.hpp"
#include "etaricci/solutions.hpp"
#include "support/random_expr.hpp"

using namespace etaricci;
using etaricci::testing::ExprGenerator;

namespace {

DiagonalMetric metric(const char* f1, const char* f2, DomainBox box = DomainBox()) {
  return DiagonalMetric(parse_expr(f1), parse_expr(f2), box);
}

const SolitonOptions kOpts{7, kDefaultTolSoliton};

void check_soliton(const SolitonData& s) {
  const ResidualReport r = residual(s, kOpts);
  CAPTURE(s.metric.f1().to_string());
  CAPTURE(s.metric.f2().to_string());
  CAPTURE(r.worst().max_abs);
  CHECK(r.verdict);
}

void check_same_on_grid(const ScalarExpr& lhs, const ScalarExpr& rhs, const DiagonalMetric& m) {
  const IdentityCheck c = check_identity(lhs, rhs, m.domain().grid(5), 1e-10);
  CAPTURE(lhs.to_string());
  CAPTURE(rhs.to_string());
  CHECK(c.holds);
}

// exp(alpha x + beta x^2) with log-derivative alpha + 2 beta x bounded away from 0 on [-1, 1].
ScalarExpr exp_quadratic(ExprGenerator& gen, Axis axis) {
  const double alpha = gen.uniform(0.5, 1.5) * (gen.pick(0, 1) ? 1.0 : -1.0);
  const double beta = gen.uniform(-0.2, 0.2);
  const ScalarExpr x = var(axis);
  return exp(ScalarExpr(alpha) * x + ScalarExpr(beta) * x * x);
}

}  // namespace

TEST_CASE("catalogue entries are solitons with the stated lambda and mu") {
  const auto entries = builtin_examples();
  CHECK(entries.size() >= 12);
  for (const CatalogueEntry& e : entries) {
    CAPTURE(e.name);
    const ResidualReport r = residual(e.soliton);
    CHECK(r.verdict);
    CHECK(r.worst().max_abs < 1e-10);
    check_same_on_grid(e.soliton.lambda, e.expected_lambda, e.soliton.metric);
    check_same_on_grid(e.soliton.mu, e.expected_mu, e.soliton.metric);
    CHECK(soliton_kind(e.soliton) == e.kind);
    if (e.lambda_constant)
      CHECK(eval(e.soliton.lambda, {0.1, 0.2, 0.3}) == doctest::Approx(*e.lambda_constant));
    if (e.theorem.empty()) continue;
    const SolitonData s = solve_by_name(e.soliton.metric, e.theorem, e.theorem_params);
    check_same_on_grid(s.lambda, e.expected_lambda, e.soliton.metric);
    check_same_on_grid(s.mu, e.expected_mu, e.soliton.metric);
    CHECK(residual(s).verdict);
  }
}

TEST_CASE("reference values of the named examples") {
  std::map<std::string, CatalogueEntry> by_name;
  for (CatalogueEntry& e : builtin_examples()) by_name.emplace(e.name, e);
  const Point p{0.3, 0.6, -0.4};
  CHECK(eval(by_name.at("sol3").soliton.mu, p) == doctest::Approx(2.0));
  CHECK(eval(by_name.at("sol3").soliton.lambda, p) == doctest::Approx(0.0));
  CHECK(eval(by_name.at("h2xr").soliton.lambda, p) == doctest::Approx(1.0));
  CHECK(eval(by_name.at("h2xr").soliton.mu, p) == doctest::Approx(-1.0));
  CHECK(by_name.at("h2xr").kind == SolitonKind::Expanding);
  CHECK(by_name.at("sol3").kind == SolitonKind::Steady);
  CHECK(by_name.at("mw1").kind == SolitonKind::NonConstant);
  CHECK(eval(by_name.at("mw2").soliton.lambda, p) ==
        doctest::Approx(std::exp(0.6) + std::exp(1.2)));
}

TEST_CASE("SEP family: arbitrary constants") {
  ExprGenerator gen(100);
  for (int k = 0; k < 8; ++k) {
    const DiagonalMetric m = gen.metric(Axis::X1, Axis::X2);
    ThmNbParams p;
    p.lambda = gen.uniform(-2, 2);
    p.mu = gen.uniform(-2, 2);
    for (double& c : p.c) c = gen.uniform(-2, 2);
    check_soliton(construct_thm_nb(m, p));
  }
  ThmNbParams p;
  p.lambda = 1.0;
  p.ref1 = 0.5;
  check_soliton(construct_thm_nb(metric("1 + x1^2", "2"), p));
}

TEST_CASE("BOTH3 family, all three branches") {
  ExprGenerator gen(101);
  for (int k = 0; k < 8; ++k) {
    // b - d = (a1 - a2) + 2 (b1 - b2) x3 stays away from 0
    const double a1 = gen.uniform(1.0, 2.0);
    const double a2 = -gen.uniform(1.0, 2.0);
    const ScalarExpr x = x3();
    const DiagonalMetric m(exp(ScalarExpr(a1) * x + ScalarExpr(gen.uniform(-0.3, 0.3)) * x * x),
                           exp(ScalarExpr(a2) * x + ScalarExpr(gen.uniform(-0.3, 0.3)) * x * x));
    ThmGsParams p;
    p.c1 = gen.uniform(-2, 2);
    p.c2 = gen.uniform(-2, 2);
    CHECK(resolve_gs_branch(m, GsBranch::Auto) == GsBranch::Distinct);
    check_soliton(construct_thm_gs(m, p));
  }
  // f_i = k_i exp(k x3): b = d = k, lambda free
  for (double kk : {-1.5, 0.7, 2.0}) {
    const ScalarExpr e = exp(ScalarExpr(kk) * x3());
    const DiagonalMetric m(ScalarExpr(gen.uniform(0.5, 2)) * e, ScalarExpr(gen.uniform(0.5, 2)) * e);
    CHECK(resolve_gs_branch(m, GsBranch::Auto) == GsBranch::EqualNonzero);
    ThmGsParams p;
    p.c1 = 1.0;
    p.lambda = gen.expr_in(Axis::X3, 2);
    check_soliton(construct_thm_gs(m, p));
  }
  ThmGsParams p;
  p.f = gen.expr_in(Axis::X3, 2);
  const DiagonalMetric flat = metric("2", "3");
  CHECK(resolve_gs_branch(flat, GsBranch::Auto) == GsBranch::Constant);
  check_soliton(construct_thm_gs(flat, p));
  CHECK_THROWS_AS(resolve_gs_branch(metric("exp(x3)", "exp(x3)"), GsBranch::Distinct),
                  PreconditionError);
  CHECK_THROWS_AS(resolve_gs_branch(metric("exp(x3^2)", "1"), GsBranch::Auto), PreconditionError);
}

TEST_CASE("X1X3 family") {
  ExprGenerator gen(102);
  for (int k = 0; k < 8; ++k) {
    const DiagonalMetric m(gen.positive_in(Axis::X1, 2), exp_quadratic(gen, Axis::X3));
    ThmGssParams p;
    p.c1 = gen.uniform(-2, 2);
    p.c2 = gen.uniform(-2, 2);
    check_soliton(construct_thm_gss(m, p));
  }
  ThmGssParams p;
  p.f = parse_expr("x3^2");
  check_soliton(construct_thm_gss(metric("exp(x1)", "2"), p));
  CHECK_THROWS_AS(construct_thm_gss(metric("exp(x1)", "1 + x3^2"), {}), PreconditionError);
}

TEST_CASE("BOTH2 family") {
  ExprGenerator gen(103);
  for (int k = 0; k < 8; ++k) {
    const DiagonalMetric m(gen.positive_in(Axis::X2, 2), gen.positive_in(Axis::X2, 2));
    ThmGscParams p;
    p.g = gen.expr_in(Axis::X3, 2);
    p.f0 = gen.uniform(-1, 1);
    check_soliton(construct_thm_gsc(m, p));
  }
  ThmGscParams p;
  p.c1 = 0.5;
  p.c2 = -1.0;
  p.g = parse_expr("x3");
  check_soliton(construct_thm_gsc(metric("3", "1 + x2^2"), p));
  CHECK_THROWS_AS(construct_thm_gsc(metric("exp(x2)", "1"), p), PreconditionError);
}

TEST_CASE("X2X1 family") {
  ExprGenerator gen(104);
  for (int k = 0; k < 8; ++k) {
    const DiagonalMetric m(gen.positive_in(Axis::X2, 2), gen.positive_in(Axis::X1, 2));
    ThmCrossedParams p;
    p.f = gen.expr_in(Axis::X3, 2);
    check_soliton(construct_thm_crossed(m, p));
  }
  ThmCrossedParams p;
  p.c1 = 1.0;
  p.c2 = 2.0;
  check_soliton(construct_thm_crossed(metric("2", "0.5"), p));
  CHECK_THROWS_AS(construct_thm_crossed(metric("exp(x2)", "exp(x1)"), p), PreconditionError);
}

TEST_CASE("X2X3 family") {
  ExprGenerator gen(105);
  for (int k = 0; k < 8; ++k) {
    // f1 = exp(-c2 x2) so that a = -c2 f2 with F = 0
    const double c2 = gen.uniform(-1.5, 1.5);
    const DiagonalMetric m(exp(ScalarExpr(-c2) * x2()), exp_quadratic(gen, Axis::X3));
    ThmGsmParams p;
    p.c2 = c2;
    p.c3 = gen.uniform(-2, 2);
    check_soliton(construct_thm_gsm(m, p));
  }
  for (int k = 0; k < 5; ++k) {
    // f2 = K constant: F = K f1'/f1 + c2 K, c3 = -c2 K^2 so that V2 = 0
    const ScalarExpr f1 = gen.positive_in(Axis::X2, 2);
    const double kk = gen.uniform(0.5, 2);
    const double c2 = gen.uniform(-1, 1);
    const DiagonalMetric m(f1, kk);
    ThmGsmParams p;
    p.c2 = c2;
    p.c3 = -c2 * kk * kk;
    p.f = ScalarExpr(kk) * diff(f1, Axis::X2) / f1 + ScalarExpr(c2 * kk);
    p.v3 = gen.expr_in(Axis::X3, 2);
    check_soliton(construct_thm_gsm(m, p));
  }
  ThmGsmParams bad;
  bad.c2 = 1.0;
  CHECK_THROWS_AS(construct_thm_gsm(metric("exp(x2)", "exp(x3)"), bad), PreconditionError);
}

TEST_CASE("unit V3 in every case") {
  ExprGenerator gen(106);
  for (int k = 0; k < 5; ++k) {
    const ScalarExpr f = gen.positive_in(Axis::X3, 2);
    const DiagonalMetric both3(f, ScalarExpr(gen.uniform(0.5, 2)) * f);
    check_soliton(lambda_mu_for_unit_V3(both3, CaseTag::BOTH3));

    const double c = gen.uniform(0.2, 3.0);
    const ScalarExpr f2 = ScalarExpr(gen.uniform(0.5, 2)) / (ScalarExpr(c) * exp(x3()) + 1.0);
    const DiagonalMetric x1x3(gen.positive_in(Axis::X1, 2), f2);
    const SolitonData h = lambda_mu_for_unit_V3(x1x3, CaseTag::X1X3);
    check_soliton(h);
    // second family: mu = c e^{x3} / (c e^{x3} + 1)
    const ScalarExpr u = ScalarExpr(c) * exp(x3());
    check_same_on_grid(h.mu, u / (u + 1.0), x1x3);
    check_same_on_grid(h.lambda, 0.0, x1x3);

    check_soliton(lambda_mu_for_unit_V3(
        DiagonalMetric(gen.positive_in(Axis::X2, 2), gen.positive_in(Axis::X2, 2)), CaseTag::BOTH2));
    check_soliton(lambda_mu_for_unit_V3(
        DiagonalMetric(gen.positive_in(Axis::X2, 2), gen.positive_in(Axis::X1, 2)), CaseTag::X2X1));
    check_soliton(lambda_mu_for_unit_V3(DiagonalMetric(gen.positive_in(Axis::X2, 2), 1.5),
                                        CaseTag::X2X3));
    check_soliton(lambda_mu_for_unit_V3(DiagonalMetric(2.0, f2), CaseTag::X2X3));
  }
  CHECK_THROWS_AS(lambda_mu_for_unit_V3(metric("exp(x3)", "exp(2*x3)")), PreconditionError);
  CHECK_THROWS_AS(lambda_mu_for_unit_V3(metric("exp(x1)", "exp(x3)")), PreconditionError);
  CHECK_THROWS_AS(lambda_mu_for_unit_V3(metric("exp(x1)", "exp(x2)")), PreconditionError);
  CHECK_THROWS_AS(lambda_mu_for_unit_V3(metric("exp(x2)", "exp(-x3)"), CaseTag::X2X3),
                  PreconditionError);
}

TEST_CASE("constant metrics fit every pattern") {
  const DiagonalMetric m = metric("2", "3");
  for (CaseTag t : {CaseTag::SEP, CaseTag::BOTH3, CaseTag::X1X3, CaseTag::BOTH2, CaseTag::X2X1,
                    CaseTag::X2X3})
    CHECK(fits_case(m, t));
  CHECK_FALSE(fits_case(metric("exp(x3)", "1"), CaseTag::SEP));
}

TEST_CASE("solve_by_name argument handling") {
  const DiagonalMetric sol3 = metric("exp(-x3)", "exp(x3)");
  CHECK(residual(solve_by_name(sol3, "gs", {{"c1", "1"}, {"c2", "0.5"}})).verdict);
  CHECK_THROWS_AS(solve_by_name(sol3, "bogus", {}), PreconditionError);
  CHECK_THROWS_AS(solve_by_name(sol3, "gs", {{"c9", "1"}}), PreconditionError);
  CHECK_THROWS_AS(solve_by_name(sol3, "gs", {{"c1", "one"}}), PreconditionError);
  CHECK_THROWS_AS(solve_by_name(sol3, "gs", {{"branch", "sideways"}}), PreconditionError);
  CHECK_THROWS_AS(solve_by_name(sol3, "nb", {}), PreconditionError);
  CHECK_THROWS_AS(solve_by_name(sol3, "mwa", {}), PreconditionError);
  CHECK(theorem_names().size() == 11);
  for (const std::string& name : theorem_names()) CHECK_FALSE(name.empty());
}
