#include <cmath>

#include "doctest.h"

#include "etaricci/flatness.hpp"
#include "etaricci/parse.hpp"
#include "support/random_expr.hpp"

using namespace etaricci;
using etaricci::testing::ExprGenerator;

namespace {

DiagonalMetric metric(const char* f1, const char* f2, DomainBox box = DomainBox()) {
  return DiagonalMetric(parse_expr(f1), parse_expr(f2), box);
}

struct Config {
  const char* f1;
  const char* f2;
  CaseTag tag;
  bool flat;
};

}  // namespace

TEST_CASE("criterion and curvature agree per dependency case") {
  // SEP metrics are always flat, so that case has no non-flat member. A flat
  // X2X3 metric has f1 or f2 constant and classifies as BOTH2 or BOTH3.
  const Config configs[] = {
      {"exp(x1)", "1 + x2^2", CaseTag::SEP, true},
      {"2/(x3 + 3)", "2", CaseTag::BOTH3, true},
      {"exp(-x3)", "exp(x3)", CaseTag::BOTH3, false},
      {"exp(x1)", "1/(x3 + 2)", CaseTag::X1X3, true},
      {"exp(x1)", "exp(x3)", CaseTag::X1X3, false},
      {"exp(x2)", "3*exp(x2)", CaseTag::BOTH2, true},
      {"2 + x2", "(2 + x2)^2", CaseTag::BOTH2, true},
      {"exp(x2)", "1 + x2^2", CaseTag::BOTH2, false},
      {"1/(x2 + 3)", "1/(2*x1 + 3)", CaseTag::X2X1, true},
      {"exp(x2)", "exp(x1)", CaseTag::X2X1, false},
      {"1/(x2 + 3)", "2", CaseTag::BOTH2, true},
      {"2", "1/(x3 + 3)", CaseTag::BOTH3, true},
      {"exp(x2)", "exp(x3)", CaseTag::X2X3, false},
  };
  for (const Config& c : configs) {
    CAPTURE(c.f1);
    CAPTURE(c.f2);
    const FlatnessVerdict v = flatness_criterion(metric(c.f1, c.f2));
    CHECK(v.tag == c.tag);
    REQUIRE(v.criterion_holds.has_value());
    CHECK(*v.criterion_holds == c.flat);
    CHECK(*v.agrees);
    if (c.flat)
      CHECK(v.numeric_sup < kDefaultTolFlat);
    else
      CHECK(v.numeric_sup > 1e-3);
  }
}

TEST_CASE("criterion of a chosen case") {
  FlatnessOptions opts;
  opts.as_case = CaseTag::X2X3;
  const FlatnessVerdict v = flatness_criterion(metric("1/(x2 + 3)", "2"), opts);
  CHECK(v.tag == CaseTag::X2X3);
  CHECK(*v.criterion_holds);
  CHECK(*v.agrees);
  opts.as_case = CaseTag::X1X3;
  CHECK_THROWS_AS(flatness_criterion(metric("1/(x2 + 3)", "2"), opts), PreconditionError);
}

TEST_CASE("reference flatness examples") {
  const FlatnessVerdict ps = flatness_criterion(metric("exp(x1)", "exp(x2)"));
  CHECK(*ps.criterion_holds);
  CHECK(ps.numeric_sup < 1e-9);
  const FlatnessVerdict ps1 =
      flatness_criterion(metric("1", "1/(x3 - 2)", DomainBox({-1, 1}, {-1, 1}, {3, 4})));
  CHECK(ps1.tag == CaseTag::BOTH3);
  CHECK(*ps1.criterion_holds);
  CHECK(*ps1.agrees);
  const FlatnessVerdict sol3 = flatness_criterion(metric("exp(-x3)", "exp(x3)"));
  CHECK_FALSE(*sol3.criterion_holds);
  CHECK(sol3.numeric_sup >= 0.5);

  const DiagonalMetric square(parse_expr("x2"), construct_flat_partner_x2(parse_expr("x2"), 1.0, {0.5, 2}),
                              DomainBox({-1, 1}, {0.5, 2}, {-1, 1}));
  CHECK(eval(square.f2(), {0, 1.5, 0}) == doctest::Approx(2.25));
  CHECK(riemann_sup_norm(square, 9) < 1e-8);
  const ScalarExpr p2 = construct_flat_partner_x2(parse_expr("exp(2*x2)"), 3.0);
  CHECK(eval(p2, {0, 0.4, 0}) == doctest::Approx(1.5 * std::exp(0.8)));
  CHECK(riemann_sup_norm(DiagonalMetric(parse_expr("exp(2*x2)"), p2), 9) < 1e-8);
  CHECK(eval(construct_flat_partner_x2(parse_expr("exp(x2)"), 1.0), {0, 0.3, 0}) ==
        doctest::Approx(std::exp(0.3)));
}

TEST_CASE("H2 x R is not flat") {
  const FlatnessVerdict v =
      flatness_criterion(metric("x2", "x2", DomainBox({-1, 1}, {0.5, 2}, {-1, 1})));
  CHECK(v.tag == CaseTag::BOTH2);
  CHECK_FALSE(*v.criterion_holds);
  CHECK(*v.agrees);
  CHECK(v.numeric_sup == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("GENERAL metrics get no criterion") {
  const FlatnessVerdict v = flatness_criterion(metric("exp(x1 + x2)", "1"));
  CHECK(v.tag == CaseTag::GENERAL);
  CHECK_FALSE(v.criterion_holds.has_value());
  CHECK_FALSE(v.agrees.has_value());
  CHECK(v.numeric_sup > 0.0);
}

TEST_CASE("random SEP metrics are flat") {
  ExprGenerator gen(77);
  for (int k = 0; k < 20; ++k) {
    const DiagonalMetric m(gen.positive_in(Axis::X1, 2), gen.positive_in(Axis::X2, 2));
    CHECK(riemann_sup_norm(m, 5) < kDefaultTolFlat);
  }
}

TEST_CASE("reciprocal-linear f2 in the X1X3 case, random f1") {
  ExprGenerator gen(31);
  for (int k = 0; k < 10; ++k) {
    const double c1 = gen.uniform(0.5, 2.0);
    const double c2 = gen.uniform(-4.0, -2.0);
    const ScalarExpr f2 = ScalarExpr(c1) / (x3() - c2);
    const DiagonalMetric flat(gen.positive_in(Axis::X1, 2), f2);
    const FlatnessVerdict v = flatness_criterion(flat);
    CHECK(*v.criterion_holds);
    CHECK(*v.agrees);
  }
}

TEST_CASE("flat partner in the BOTH2 case") {
  ExprGenerator gen(13);
  const char* closed[] = {"exp(x2)", "2 + x2", "x2^3 + 3*x2 + 5", "exp(x2) + x2 + 2"};
  for (const char* text : closed) {
    const ScalarExpr f1 = parse_expr(text);
    for (double c0 : {1.0, -0.5, 2.5}) {
      const DiagonalMetric m(f1, construct_flat_partner_x2(f1, c0));
      CHECK(riemann_sup_norm(m, 5) < 1e-9);
      const FlatnessVerdict v = flatness_criterion(m);
      CHECK(*v.criterion_holds);
      CHECK(*v.agrees);
    }
  }
  CHECK_THROWS_AS(construct_flat_partner_x2(parse_expr("1 + x2^2"), 1.0), PreconditionError);
  CHECK_THROWS_AS(construct_flat_partner_x2(parse_expr("exp(x1)"), 1.0), PreconditionError);
  CHECK_THROWS_AS(construct_flat_partner_x2(parse_expr("exp(x2)"), 0.0), PreconditionError);
}

TEST_CASE("separation ODE solution satisfies h'' h = -k") {
  for (double k : {-0.5, 0.0, 0.7}) {
    CAPTURE(k);
    SeparationOdeSpec spec;
    spec.k = k;
    spec.r = 1.0;
    spec.c0 = 0.1;
    spec.epsilon = -1;
    spec.j = {1.0, 2.0};
    const SeparationSolution sol = solve_separation_ode(spec);
    const Interval dom = sol.domain();
    REQUIRE(dom.lo < dom.hi);

    const double s = 1e-3;
    for (int i = 1; i < 10; ++i) {
      const double x = dom.lo + 0.1 * i * dom.width();
      const double h = sol.h(x);
      const double hpp = (sol.h(x + s) - 2.0 * h + sol.h(x - s)) / (s * s);
      CHECK(hpp * h == doctest::Approx(-k).epsilon(1e-5).scale(1.0));
      // f = 1/h solves (f'' f - 2 f'^2) / f^4 = k
      const double f = sol.f(x);
      const double fp = (sol.f(x + s) - sol.f(x - s)) / (2 * s);
      const double fpp = (sol.f(x + s) - 2.0 * f + sol.f(x - s)) / (s * s);
      CHECK((fpp * f - 2 * fp * fp) / std::pow(f, 4) == doctest::Approx(k).epsilon(1e-4).scale(1.0));
    }
    for (double y : {1.0, 1.2, 1.5, 1.99}) CHECK(std::fabs(sol.inverse(sol.antiderivative(y)) - y) <= 1e-9);
  }
}

TEST_CASE("separation ODE preconditions") {
  SeparationOdeSpec spec;
  spec.j = {-1.0, 1.0};
  CHECK_THROWS_AS(solve_separation_ode(spec), PreconditionError);
  spec.j = {1.0, 3.0};
  spec.k = 1.0;
  spec.r = 1.0;  // -2 ln 3 + 1 < 0
  CHECK_THROWS_AS(solve_separation_ode(spec), PreconditionError);
  spec.k = 0.0;
  spec.epsilon = 0;
  CHECK_THROWS_AS(solve_separation_ode(spec), PreconditionError);
  spec.epsilon = 1;
  const SeparationSolution sol = solve_separation_ode(spec);
  CHECK_THROWS_AS(sol.inverse(-0.5), PreconditionError);
  CHECK_THROWS_AS(sol.inverse(100.0), PreconditionError);
}
