#include "etaricci/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "etaricci/parse.hpp"

namespace etaricci {

namespace {

constexpr double kBranchThreshold = 1e-10;

std::string case_pattern(CaseTag tag) {
  switch (tag) {
    case CaseTag::SEP:
      return "f1 = f1(x1), f2 = f2(x2)";
    case CaseTag::BOTH3:
      return "f1 = f1(x3), f2 = f2(x3)";
    case CaseTag::X1X3:
      return "f1 = f1(x1), f2 = f2(x3)";
    case CaseTag::BOTH2:
      return "f1 = f1(x2), f2 = f2(x2)";
    case CaseTag::X2X1:
      return "f1 = f1(x2), f2 = f2(x1)";
    case CaseTag::X2X3:
      return "f1 = f1(x2), f2 = f2(x3)";
    case CaseTag::GENERAL:
      break;
  }
  return "any f1, f2";
}

void require_case(const DiagonalMetric& m, CaseTag tag, const std::string& theorem) {
  if (!fits_case(m, tag))
    throw PreconditionError(theorem + " needs " + case_pattern(tag) + " but the metric is " +
                            to_string(classify(m)));
}

void require_function_of(const ScalarExpr& e, Axis axis, const std::string& name) {
  if (!e.free_axes().subset_of(AxisSet{axis}))
    throw PreconditionError(name + " must depend on x" + std::to_string(number(axis)) +
                            " only, got `" + e.to_string() + "`");
}

std::string number_text(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

// Antiderivative along `axis` with F(ref) = 0; closed form for constants.
ScalarExpr integral(const ScalarExpr& e, Axis axis, const DomainBox& box,
                    std::optional<double> ref) {
  if (e.is_constant()) return e * (var(axis) - ScalarExpr(ref.value_or(0.0)));
  if (ref) return antiderivative_numeric(e, axis, *ref).expr();
  return antiderivative_numeric(e, axis, box.interval(axis)).expr();
}

bool identically_zero(const ScalarExpr& e, const std::vector<Point>& points) {
  if (e.is_literal(0.0)) return true;
  return sample(e, points).max_abs <= kBranchThreshold;
}

bool grid_constant(const ScalarExpr& e, const std::vector<Point>& points) {
  return e.is_constant() || is_grid_constant(sample(e, points));
}

void require_identity(const ScalarExpr& lhs, const ScalarExpr& rhs,
                      const std::vector<Point>& points, const std::string& what) {
  const IdentityCheck c = check_identity(lhs, rhs, points);
  if (!c.holds)
    throw PreconditionError(what + " fails on the grid (max violation " +
                            number_text(c.max_violation) + ")");
}

ScalarExpr d3(const ScalarExpr& e) { return diff(e, Axis::X3); }

SolitonData make(const DiagonalMetric& m, FrameVector v, ScalarExpr lambda, ScalarExpr mu,
                 OneForm eta = OneForm::dx3()) {
  return SolitonData{m, VectorField{std::move(v)}, std::move(eta), std::move(lambda),
                     std::move(mu)};
}

}  // namespace

std::string to_string(GsBranch branch) {
  switch (branch) {
    case GsBranch::Auto:
      return "auto";
    case GsBranch::Distinct:
      return "distinct";
    case GsBranch::EqualNonzero:
      return "equal";
    case GsBranch::Constant:
      return "constant";
  }
  return "auto";
}

GsBranch gs_branch_from_string(const std::string& name) {
  for (GsBranch b : {GsBranch::Auto, GsBranch::Distinct, GsBranch::EqualNonzero, GsBranch::Constant})
    if (to_string(b) == name) return b;
  throw PreconditionError("unknown branch '" + name + "' (auto, distinct, equal, constant)");
}

SolitonData construct_thm_nb(const DiagonalMetric& m, const ThmNbParams& p) {
  require_case(m, CaseTag::SEP, "nb");
  const ScalarExpr one = 1.0;
  const ScalarExpr f1 = integral(one / m.f1(), Axis::X1, m.domain(), p.ref1);
  const ScalarExpr f2 = integral(one / m.f2(), Axis::X2, m.domain(), p.ref2);
  const auto& c = p.c;
  const ScalarExpr lambda = p.lambda;
  const ScalarExpr x = x3();
  FrameVector v{
      -lambda * f1 + ScalarExpr(c[0]) * f2 + ScalarExpr(c[1]) * x + ScalarExpr(c[2]),
      -ScalarExpr(c[0]) * f1 - lambda * f2 + ScalarExpr(c[3]) * x + ScalarExpr(c[4]),
      -ScalarExpr(c[1]) * f1 - ScalarExpr(c[3]) * f2 - ScalarExpr(p.lambda + p.mu) * x +
          ScalarExpr(c[5]),
  };
  return make(m, std::move(v), p.lambda, p.mu);
}

GsBranch resolve_gs_branch(const DiagonalMetric& m, GsBranch hint, int grid_n) {
  require_case(m, CaseTag::BOTH3, "gs");
  const std::vector<Point> points = m.domain().grid(grid_n);
  const auto [a, b, c, d] = structure_functions(m);
  const SampleStats gap = sample(b - d, points);
  const SampleStats bs = sample(b, points);
  const bool distinct = is_nowhere_zero(gap, kBranchThreshold);
  const bool equal = gap.max_abs <= kBranchThreshold;
  const bool b_nonzero = is_nowhere_zero(bs, kBranchThreshold);
  const bool b_zero = bs.max_abs <= kBranchThreshold;

  switch (hint) {
    case GsBranch::Distinct:
      if (!distinct) throw PreconditionError("b - d vanishes somewhere on the grid");
      return hint;
    case GsBranch::EqualNonzero:
      if (!equal) throw PreconditionError("b = d fails on the grid");
      if (!b_nonzero) throw PreconditionError("b vanishes somewhere on the grid");
      return hint;
    case GsBranch::Constant:
      if (!(equal && b_zero)) throw PreconditionError("f1, f2 are not constant on the grid");
      return hint;
    case GsBranch::Auto:
      break;
  }
  if (distinct) return GsBranch::Distinct;
  if (equal && b_nonzero) return GsBranch::EqualNonzero;
  if (equal && b_zero) return GsBranch::Constant;
  throw PreconditionError("ambiguous branch: b - d changes sign or vanishes on part of the grid");
}

SolitonData construct_thm_gs(const DiagonalMetric& m, const ThmGsParams& p, int grid_n) {
  const GsBranch branch = resolve_gs_branch(m, p.branch, grid_n);
  const auto [a, b, c, d] = structure_functions(m);
  const ScalarExpr v1 = ScalarExpr(p.c1) / m.f1();
  const ScalarExpr v2 = ScalarExpr(p.c2) / m.f2();

  if (branch == GsBranch::Distinct) {
    const ScalarExpr gap = b - d;
    const ScalarExpr gap1 = d3(gap);
    const ScalarExpr ratio = gap1 / gap;
    const ScalarExpr cross = d3(b) * d - b * d3(d);
    const ScalarExpr v3 = ratio - (b + d);
    const ScalarExpr lambda = cross / gap;
    const ScalarExpr mu = -(d3(gap1) + cross) / gap + square(ratio) + square(b) + square(d);
    return make(m, {v1, v2, v3}, lambda, mu);
  }
  if (branch == GsBranch::EqualNonzero) {
    require_function_of(p.lambda, Axis::X3, "lambda");
    const ScalarExpr& lambda = p.lambda;
    const ScalarExpr b1 = d3(b);
    const ScalarExpr v3 = (b1 - ScalarExpr(2.0) * square(b) + lambda) / b;
    const ScalarExpr mu = -d3((b1 + lambda) / b) + ScalarExpr(2.0) * square(b) - lambda;
    return make(m, {v1, v2, v3}, lambda, mu);
  }
  require_function_of(p.f, Axis::X3, "F");
  return make(m, {v1, v2, p.f}, 0.0, -d3(p.f));
}

SolitonData construct_thm_gss(const DiagonalMetric& m, const ThmGssParams& p, int grid_n) {
  require_case(m, CaseTag::X1X3, "gss");
  const std::vector<Point> points = m.domain().grid(grid_n);
  const ScalarExpr d = structure_functions(m).d;
  const ScalarExpr v1 = p.c1;
  const ScalarExpr v2 = ScalarExpr(p.c2) / m.f2();
  if (identically_zero(d, points)) {
    require_function_of(p.f, Axis::X3, "F");
    return make(m, {v1, v2, p.f}, 0.0, -d3(p.f));
  }
  if (!is_nowhere_zero(sample(d, points), kBranchThreshold))
    throw PreconditionError("d = f2'/f2 vanishes somewhere on the grid");
  const ScalarExpr d1 = d3(d);
  const ScalarExpr v3 = (d1 - square(d)) / d;
  const ScalarExpr mu = -d3(d1) / d + square(d1 / d) + square(d);
  return make(m, {v1, v2, v3}, 0.0, mu);
}

SolitonData construct_thm_gsc(const DiagonalMetric& m, const ThmGscParams& p, int grid_n) {
  require_case(m, CaseTag::BOTH2, "gsc");
  require_function_of(p.g, Axis::X3, "G");
  const std::vector<Point> points = m.domain().grid(grid_n);
  const ScalarExpr& f1 = m.f1();
  const ScalarExpr& f2 = m.f2();
  const ScalarExpr f1p = diff(f1, Axis::X2);
  if (!identically_zero(f1p, points) && (p.c1 != 0.0 || p.c2 != 0.0))
    throw PreconditionError("c1 = c2 = 0 is required when f1 is not constant");
  const ScalarExpr l1 = f1p / f1;
  const ScalarExpr lambda = ScalarExpr(2.0) * square(f2) * square(l1) -
                            f2 * diff(f2, Axis::X2) * l1 -
                            square(f2) * (diff(f1p, Axis::X2) / f1);
  const ScalarExpr f = ScalarExpr(p.f0) +
                       integral(p.g, Axis::X3, m.domain(), m.domain().interval(Axis::X3).lo);
  return make(m, {p.c1, p.c2, f}, lambda, -lambda - p.g);
}

SolitonData construct_thm_crossed(const DiagonalMetric& m, const ThmCrossedParams& p,
                                  int grid_n) {
  require_case(m, CaseTag::X2X1, "crossed");
  require_function_of(p.f, Axis::X3, "F");
  const std::vector<Point> points = m.domain().grid(grid_n);
  const ScalarExpr& f1 = m.f1();
  const ScalarExpr& f2 = m.f2();
  if ((p.c1 != 0.0 || p.c2 != 0.0) && !(grid_constant(f1, points) && grid_constant(f2, points)))
    throw PreconditionError("nonzero c1 or c2 requires f1 and f2 constant");
  const ScalarExpr l1 = diff(f1, Axis::X2) / f1;
  const ScalarExpr l2 = diff(f2, Axis::X1) / f2;
  const ScalarExpr lambda = ScalarExpr(p.c1) * f1 * l2 +
                            square(f1) * (square(l2) - diff(l2, Axis::X1)) +
                            square(f2) * (square(l1) - diff(l1, Axis::X2));
  return make(m, {p.c1, p.c2, p.f}, lambda, -lambda - d3(p.f));
}

SolitonData construct_thm_gsm(const DiagonalMetric& m, const ThmGsmParams& p, int grid_n) {
  require_case(m, CaseTag::X2X3, "gsm");
  require_function_of(p.f, Axis::X2, "F");
  const std::vector<Point> points = m.domain().grid(grid_n);
  const ScalarExpr& f1 = m.f1();
  const ScalarExpr& f2 = m.f2();
  const ScalarExpr l1 = diff(f1, Axis::X2) / f1;
  const ScalarExpr a = structure_functions(m).a;
  require_identity(a, -ScalarExpr(p.c2) * f2 + p.f, points, "a = -c2 f2 + F");
  if (p.c1 != 0.0 && !identically_zero(a, points))
    throw PreconditionError("c1 != 0 requires a = 0 on the grid");
  if (!grid_constant(f2, points))
    require_identity(l1, -p.c2, points, "f1'/f1 = -c2 (f2 is not constant)");

  const ScalarExpr v2 = ScalarExpr(p.c2) * f2 + ScalarExpr(p.c3) / f2;
  const ScalarExpr d = structure_functions(m).d;
  const ScalarExpr d1 = d3(d);
  ScalarExpr v3;
  if (identically_zero(d, points)) {
    if (!identically_zero(a * v2, points))
      throw PreconditionError("a V2 = 0 is required when d vanishes");
    require_function_of(p.v3, Axis::X3, "V3");
    v3 = p.v3;
  } else {
    if (!is_nowhere_zero(sample(d, points), kBranchThreshold))
      throw PreconditionError("d = f2'/f2 vanishes somewhere on the grid");
    v3 = (a * v2 + d1 - square(d)) / d;
  }
  const ScalarExpr lambda = a * v2 - f2 * diff(p.f, Axis::X2) + square(a);
  const ScalarExpr mu = -d3(v3) - (d1 - square(d)) - lambda;
  return make(m, {p.c1, v2, v3}, lambda, mu);
}

ScalarExpr unit_v3_compatibility(const ScalarExpr& f) {
  const ScalarExpr f1 = d3(f);
  return (d3(f1) - f1) / f - ScalarExpr(2.0) * square(f1 / f);
}

SolitonData lambda_mu_for_unit_V3(const DiagonalMetric& m, CaseTag tag, int grid_n) {
  if (tag == CaseTag::GENERAL) tag = classify(m);
  const std::vector<Point> points = m.domain().grid(grid_n);
  const ScalarExpr& f1 = m.f1();
  const ScalarExpr& f2 = m.f2();
  const auto [a, b, c, d] = structure_functions(m);
  const FrameVector unit{0.0, 0.0, 1.0};
  auto log_d = [](const ScalarExpr& f, Axis axis) { return diff(f, axis) / f; };

  switch (tag) {
    case CaseTag::BOTH3: {
      require_case(m, tag, "mwa");
      require_identity(unit_v3_compatibility(f1), unit_v3_compatibility(f2), points,
                       "compatibility identity (f1''-f1')/f1 - 2(f1'/f1)^2 = "
                       "(f2''-f2')/f2 - 2(f2'/f2)^2");
      const ScalarExpr two = 2.0;
      const ScalarExpr lambda = b * (d + 1.0) - d3(d3(f1)) / f1 + two * square(b);
      const ScalarExpr mu = -b * (d + 1.0) - d3(d3(f2)) / f2 + two * square(d);
      return make(m, unit, lambda, mu);
    }
    case CaseTag::X1X3: {
      require_case(m, tag, "h");
      require_identity(d3(d), d * (d + 1.0), points, "d' = d (d + 1)");
      if (!is_nowhere_zero(sample(d, points), kBranchThreshold))
        throw PreconditionError("d = f2'/f2 vanishes somewhere on the grid");
      return make(m, unit, 0.0, -d);
    }
    case CaseTag::BOTH2: {
      require_case(m, tag, "mw1");
      const ScalarExpr l1 = log_d(f1, Axis::X2);
      const ScalarExpr l2 = log_d(f2, Axis::X2);
      const ScalarExpr lambda = -square(f2) * (diff(l1, Axis::X2) - square(l1) + l1 * l2);
      return make(m, unit, lambda, -lambda);
    }
    case CaseTag::X2X1: {
      require_case(m, tag, "mw2");
      const ScalarExpr l1 = log_d(f1, Axis::X2);
      const ScalarExpr l2 = log_d(f2, Axis::X1);
      const ScalarExpr lambda = -square(f1) * (diff(l2, Axis::X1) - square(l2)) -
                                square(f2) * (diff(l1, Axis::X2) - square(l1));
      return make(m, unit, lambda, -lambda);
    }
    case CaseTag::X2X3: {
      require_case(m, tag, "mw");
      require_identity(d3(d), d * (d + 1.0), points, "d' = d (d + 1)");
      const SampleStats p1 = sample(diff(f1, Axis::X2), points);
      const SampleStats p2 = sample(diff(f2, Axis::X3), points);
      const SampleStats prod = sample(diff(f1, Axis::X2) * diff(f2, Axis::X3), points);
      if (!vanishes(prod, p1.max_abs * p2.max_abs))
        throw PreconditionError("f1' f2' = 0 fails on the grid (max violation " +
                                number_text(prod.max_abs) + ")");
      const ScalarExpr l1 = log_d(f1, Axis::X2);
      const ScalarExpr k = square(f2) * (diff(l1, Axis::X2) - square(l1));
      return make(m, unit, -k, k - (d3(d) - square(d)));
    }
    case CaseTag::SEP:
    case CaseTag::GENERAL:
      break;
  }
  throw PreconditionError("no unit-V3 formula for case " + to_string(tag));
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"nb", "gs", "gss", "gsc", "crossed", "gsm",
                                              "mwa", "h", "mw1", "mw2", "mw"};
  return names;
}

namespace {

class ParamReader {
 public:
  ParamReader(const std::map<std::string, std::string>& params, std::string theorem)
      : params_(params), theorem_(std::move(theorem)) {}

  double number(const std::string& key, double fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      std::size_t pos = 0;
      const double v = std::stod(it->second, &pos);
      if (pos != it->second.size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw PreconditionError("parameter " + key + " must be a number, got '" + it->second + "'");
    }
  }

  std::optional<double> optional_number(const std::string& key) {
    if (params_.count(key) == 0) {
      used_.push_back(key);
      return std::nullopt;
    }
    return number(key, 0.0);
  }

  ScalarExpr expr(const std::string& key) {
    used_.push_back(key);
    auto it = params_.find(key);
    if (it == params_.end()) return 0.0;
    return parse_expr(it->second);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

  void finish() const {
    for (const auto& [key, value] : params_)
      if (std::find(used_.begin(), used_.end(), key) == used_.end())
        throw PreconditionError("unknown parameter '" + key + "' for theorem " + theorem_);
  }

 private:
  const std::map<std::string, std::string>& params_;
  std::string theorem_;
  std::vector<std::string> used_;
};

}  // namespace

SolitonData solve_by_name(const DiagonalMetric& m, const std::string& theorem,
                          const std::map<std::string, std::string>& params, int grid_n) {
  ParamReader r(params, theorem);
  if (theorem == "nb") {
    ThmNbParams p;
    p.lambda = r.number("lambda", 0.0);
    p.mu = r.number("mu", 0.0);
    for (int i = 0; i < 6; ++i) p.c[i] = r.number("c" + std::to_string(i + 1), 0.0);
    p.ref1 = r.optional_number("ref1");
    p.ref2 = r.optional_number("ref2");
    r.finish();
    return construct_thm_nb(m, p);
  }
  if (theorem == "gs") {
    ThmGsParams p;
    p.c1 = r.number("c1", 0.0);
    p.c2 = r.number("c2", 0.0);
    p.branch = gs_branch_from_string(r.text("branch", "auto"));
    p.lambda = r.expr("lambda");
    p.f = r.expr("F");
    r.finish();
    return construct_thm_gs(m, p, grid_n);
  }
  if (theorem == "gss") {
    ThmGssParams p;
    p.c1 = r.number("c1", 0.0);
    p.c2 = r.number("c2", 0.0);
    p.f = r.expr("F");
    r.finish();
    return construct_thm_gss(m, p, grid_n);
  }
  if (theorem == "gsc") {
    ThmGscParams p;
    p.c1 = r.number("c1", 0.0);
    p.c2 = r.number("c2", 0.0);
    p.g = r.expr("G");
    p.f0 = r.number("F0", 0.0);
    r.finish();
    return construct_thm_gsc(m, p, grid_n);
  }
  if (theorem == "crossed") {
    ThmCrossedParams p;
    p.c1 = r.number("c1", 0.0);
    p.c2 = r.number("c2", 0.0);
    p.f = r.expr("F");
    r.finish();
    return construct_thm_crossed(m, p, grid_n);
  }
  if (theorem == "gsm") {
    ThmGsmParams p;
    p.c1 = r.number("c1", 0.0);
    p.c2 = r.number("c2", 0.0);
    p.c3 = r.number("c3", 0.0);
    p.f = r.expr("F");
    p.v3 = r.expr("V3");
    r.finish();
    return construct_thm_gsm(m, p, grid_n);
  }
  static const std::map<std::string, CaseTag> unit_v3{{"mwa", CaseTag::BOTH3},
                                                      {"h", CaseTag::X1X3},
                                                      {"mw1", CaseTag::BOTH2},
                                                      {"mw2", CaseTag::X2X1},
                                                      {"mw", CaseTag::X2X3}};
  auto it = unit_v3.find(theorem);
  if (it == unit_v3.end()) throw PreconditionError("unknown theorem '" + theorem + "'");
  r.finish();
  return lambda_mu_for_unit_V3(m, it->second, grid_n);
}

std::vector<CatalogueEntry> builtin_examples() {
  auto e = [](const char* text) { return parse_expr(text); };
  const DomainBox cube;
  std::vector<CatalogueEntry> out;

  auto add = [&](std::string name, std::string description, const DiagonalMetric& m, FrameVector v,
                 OneForm eta, const char* lambda, const char* mu, std::string theorem,
                 std::map<std::string, std::string> params) {
    CatalogueEntry entry{std::move(name),
                         std::move(description),
                         SolitonData{m, VectorField{std::move(v)}, std::move(eta), e(lambda), e(mu)},
                         std::nullopt,
                         e(lambda),
                         e(mu),
                         SolitonKind::NonConstant,
                         std::move(theorem),
                         std::move(params)};
    if (entry.expected_lambda.is_constant()) {
      const double l = eval(entry.expected_lambda, {0.0, 0.0, 0.0});
      entry.lambda_constant = l;
      entry.kind = l > 0.0 ? SolitonKind::Expanding
                           : (l < 0.0 ? SolitonKind::Shrinking : SolitonKind::Steady);
    }
    out.push_back(std::move(entry));
  };
  auto coords = [](const DiagonalMetric& m, const char* v1, const char* v2, const char* v3) {
    return VectorField::from_coordinates({parse_expr(v1), parse_expr(v2), parse_expr(v3)}, m)
        .frame;
  };
  const FrameVector unit{0.0, 0.0, 1.0};

  {
    const DiagonalMetric m(e("exp(-x3)"), e("exp(x3)"), cube);
    add("sol3", "Sol3 with V = d/dx1 + 0.5 d/dx2", m, coords(m, "1", "0.5", "0"), OneForm::dx3(),
        "0", "2", "gs", {{"c1", "1"}, {"c2", "0.5"}});
  }
  {
    const DiagonalMetric m(e("x2"), e("x2"), DomainBox({-1.0, 1.0}, {0.5, 2.0}, {-1.0, 1.0}));
    add("h2xr", "H2 x R with V = d/dx3", m, unit, OneForm::dx3(), "1", "-1", "gsc",
        {{"F0", "1"}});
  }
  {
    const DiagonalMetric m(e("exp(x1)"), e("exp(x3)"), cube);
    add("gss-exp", "f1 = e^x1, f2 = e^x3, V = e^x1 d/dx1 + 2 d/dx2 - d/dx3", m,
        coords(m, "exp(x1)", "2", "-1"), OneForm::dx3(), "0", "1", "gss",
        {{"c1", "1"}, {"c2", "2"}});
  }
  {
    const DiagonalMetric m(e("exp(x3)"), e("exp(x3)"), cube);
    add("mwa-k1", "f1 = f2 = e^x3, V = d/dx3", m, unit, OneForm::dx3(), "3", "-1", "mwa", {});
  }
  {
    const DiagonalMetric m(e("exp(-x2)"), e("exp(x2)"), cube);
    add("mw1", "f1 = e^-x2, f2 = e^x2, V = d/dx3", m, unit, OneForm::dx3(), "2*exp(2*x2)",
        "-2*exp(2*x2)", "mw1", {});
  }
  {
    const DiagonalMetric m(e("exp(x2)"), e("exp(x1)"), cube);
    add("mw2", "f1 = e^x2, f2 = e^x1, V = d/dx3", m, unit, OneForm::dx3(),
        "exp(2*x1) + exp(2*x2)", "-(exp(2*x1) + exp(2*x2))", "mw2", {});
  }
  {
    const DiagonalMetric m(e("exp(x2)"), e("exp(x3)"), cube);
    add("gsm", "f1 = e^x2, f2 = e^x3, V = (1 - e^2x3) d/dx2 - e^2x3 d/dx3", m,
        coords(m, "0", "1 - exp(2*x3)", "-exp(2*x3)"), OneForm::dx3(), "1", "2*exp(2*x3)", "gsm",
        {{"c2", "-1"}, {"c3", "1"}});
  }
  {
    const DiagonalMetric m(e("exp(x2)"), e("exp(x1)"), cube);
    add("crossed", "f1 = e^x2, f2 = e^x1, V = e^2x3/2 d/dx3", m,
        {0.0, 0.0, e("0.5*exp(2*x3)")}, OneForm::dx3(), "exp(2*x1) + exp(2*x2)",
        "-(exp(2*x1) + exp(2*x2) + exp(2*x3))", "crossed", {{"F", "0.5*exp(2*x3)"}});
  }
  {
    const DiagonalMetric m(e("exp(x1)"), e("exp(-x3)"), cube);
    add("thm-h-exp", "f1 = e^x1, f2 = e^-x3, V = d/dx3", m, unit, OneForm::dx3(), "0", "1", "h",
        {});
  }
  {
    const DiagonalMetric m(e("exp(x1)"), e("1/(exp(x3) + 1)"), cube);
    add("thm-h-frac", "f1 = e^x1, f2 = 1/(e^x3 + 1), V = d/dx3", m, unit, OneForm::dx3(), "0",
        "exp(x3)/(exp(x3) + 1)", "h", {});
  }
  {
    const DiagonalMetric m(e("1"), e("exp(-x3)"), cube);
    add("thm-mw-iii", "f1 = 1, f2 = e^-x3, V = d/dx3", m, unit, OneForm::dx3(), "0", "1", "mw",
        {});
  }
  {
    // lambda = 1, mu = 2, c = (1, 0.5, -1, 2, 0.3, 0); F1 = x1/2, F2 = x2/3.
    const DiagonalMetric m(e("2"), e("3"), cube);
    add("nb-const", "f1 = 2, f2 = 3, linear potential field", m,
        {e("-x1/2 + x2/3 + 0.5*x3 - 1"), e("-x1/2 - x2/3 + 2*x3 + 0.3"),
         e("-0.5*x1/2 - 2*x2/3 - 3*x3")},
        OneForm::dx3(), "1", "2", "nb",
        {{"lambda", "1"},
         {"mu", "2"},
         {"c1", "1"},
         {"c2", "0.5"},
         {"c3", "-1"},
         {"c4", "2"},
         {"c5", "0.3"},
         {"c6", "0"}});
  }
  {
    // f_i = c_i exp(-c0 e^-x3) with c0 = 1, c1 = 1, c2 = 2; eta = 0.
    const DiagonalMetric m(e("exp(-exp(-x3))"), e("2*exp(-exp(-x3))"), cube);
    add("almost-ricci-exp", "f_i = c_i exp(-e^-x3), V = d/dx3, eta = 0", m, unit,
        OneForm::zero(), "2*exp(-x3) + 2*exp(-2*x3)", "0", "", {});
  }
  return out;
}

}  // namespace etaricci
