#include <cmath>

#include "doctest.h"

#include "etaricci/curvature.hpp"
#include "etaricci/parse.hpp"
#include "etaricci/solutions.hpp"
#include "support/random_expr.hpp"

using namespace etaricci;
using etaricci::testing::ExprGenerator;

namespace {

DiagonalMetric metric(const char* f1, const char* f2, DomainBox box = DomainBox()) {
  return DiagonalMetric(parse_expr(f1), parse_expr(f2), box);
}

std::vector<DiagonalMetric> test_metrics(std::uint64_t seed, int random_count) {
  std::vector<DiagonalMetric> out;
  for (const CatalogueEntry& e : builtin_examples()) out.push_back(e.soliton.metric);
  ExprGenerator gen(seed);
  for (int k = 0; k < random_count; ++k) out.push_back(gen.metric(gen.axis(), gen.axis()));
  // Both functions of several variables.
  out.push_back(DiagonalMetric(parse_expr("2 + x1*x2 + x3^2"), parse_expr("exp(x1 - x3) + 0.5")));
  return out;
}

void check_matrix(const RealMatrix& m, const RealMatrix& expected, double tol) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m[i][j] == doctest::Approx(expected[i][j]).epsilon(tol).scale(1.0));
}

}  // namespace

TEST_CASE("Ricci of the reference metrics") {
  const Point p{0.3, 0.9, -0.5};
  check_matrix(evaluate(ricci_frame(metric("1", "1")), p), RealMatrix{}, 1e-15);
  check_matrix(evaluate(ricci_frame(metric("exp(-x3)", "exp(x3)")), p),
               RealMatrix{{{0, 0, 0}, {0, 0, 0}, {0, 0, -2}}}, 1e-12);
  check_matrix(evaluate(ricci_frame(metric("x2", "x2", DomainBox({-1, 1}, {0.5, 2}, {-1, 1}))), p),
               RealMatrix{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 0}}}, 1e-12);
}

TEST_CASE("Euclidean space has zero curvature everywhere") {
  const DiagonalMetric m = metric("1", "1");
  CHECK(riemann_sup_norm(m, 5) == 0.0);
  const ConnectionTable t = connection_table(m);
  for (Axis i : kAxes)
    for (Axis j : kAxes)
      for (const ScalarExpr& c : t(i, j)) CHECK(c.is_literal(0.0));
}

TEST_CASE("tabulated Riemann components equal the definition") {
  ExprGenerator gen(41);
  for (const DiagonalMetric& m : test_metrics(41, 8)) {
    for (int trial = 0; trial < 3; ++trial) {
      const Point p = gen.point(m.domain(), 0.05);
      for (Axis i : kAxes)
        for (Axis j : kAxes)
          for (Axis k : kAxes) {
            const auto table = evaluate(riemann_frame(m, i, j, k), p);
            const auto defn = evaluate(riemann_from_definition(m, i, j, k), p);
            for (int l = 0; l < 3; ++l)
              CHECK(table[l] == doctest::Approx(defn[l]).epsilon(1e-10).scale(1.0));
          }
    }
  }
}

TEST_CASE("Riemann antisymmetries and Ricci contraction") {
  ExprGenerator gen(5);
  for (const DiagonalMetric& m : test_metrics(5, 6)) {
    const Point p = gen.point(m.domain(), 0.05);
    const RealMatrix ric = evaluate(ricci_frame(m), p);
    RealMatrix contracted{};
    for (Axis i : kAxes)
      for (Axis j : kAxes) {
        for (Axis k : kAxes) {
          const auto rijk = evaluate(riemann_frame(m, i, j, k), p);
          const auto rjik = evaluate(riemann_frame(m, j, i, k), p);
          for (int l = 0; l < 3; ++l) {
            CHECK(rijk[l] == doctest::Approx(-rjik[l]).scale(1.0));
            // g(R(Ei,Ej)Ek, El) = -g(R(Ei,Ej)El, Ek)
            const auto rijl = evaluate(riemann_frame(m, i, j, axis_from_number(l + 1)), p);
            CHECK(rijk[l] == doctest::Approx(-rijl[index(k)]).epsilon(1e-10).scale(1.0));
          }
        }
        // Ric(Y, Z) = sum_i g(R(E_i, Y) Z, E_i)
        for (Axis k : kAxes)
          contracted[index(j)][index(k)] += evaluate(riemann_frame(m, i, j, k), p)[index(i)];
      }
    check_matrix(contracted, ric, 1e-10);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(ric[i][j] == ric[j][i]);
  }
}

TEST_CASE("connection is metric compatible and torsion free") {
  ExprGenerator gen(12);
  for (const DiagonalMetric& m : test_metrics(12, 6)) {
    const ConnectionTable nabla = connection_table(m);
    const LieBracketTable br = lie_bracket_table(m);
    for (const Point& p : m.domain().grid(3)) {
      for (Axis i : kAxes)
        for (Axis j : kAxes) {
          const auto nij = evaluate(nabla(i, j), p);
          const auto nji = evaluate(nabla(j, i), p);
          const auto bij = evaluate(br.bracket(i, j), p);
          for (int l = 0; l < 3; ++l) CHECK(std::fabs(nij[l] - nji[l] - bij[l]) <= 1e-10);
          for (Axis k : kAxes) {
            const auto nik = evaluate(nabla(i, k), p);
            // E_i g(E_j, E_k) = 0 = g(nabla_i E_j, E_k) + g(E_j, nabla_i E_k)
            CHECK(std::fabs(nij[index(k)] + nik[index(j)]) <= 1e-10);
          }
        }
    }
  }
}

TEST_CASE("frame Ricci matches the coordinate finite-difference oracle") {
  ExprGenerator gen(2718);
  for (const DiagonalMetric& m : test_metrics(2718, 6)) {
    const double margin = kDefaultFdStep + kDefaultOuterStep + 1e-6;
    for (int k = 0; k < 20; ++k) {
      const Point p = gen.point(m.domain(), margin);
      const RealMatrix exact = evaluate(ricci_frame(m), p);
      const RealMatrix oracle = ricci_coordinate_oracle(m, p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(std::fabs(exact[i][j] - oracle[i][j]) <= 1e-4 * (1.0 + std::fabs(exact[i][j])));
    }
  }
}

TEST_CASE("oracle stencil must stay inside the domain") {
  const DiagonalMetric m = metric("exp(x1)", "1");
  CHECK_THROWS_AS(ricci_coordinate_oracle(m, {1.0, 0.0, 0.0}), DomainError);
}
