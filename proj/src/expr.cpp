#include "etaricci/expr.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "etaricci/numeric.hpp"

namespace etaricci {

Axis axis_from_number(int n) {
  if (n < 1 || n > 3) throw PreconditionError("axis must be 1, 2 or 3, got " + std::to_string(n));
  return static_cast<Axis>(n);
}

std::vector<Axis> AxisSet::axes() const {
  std::vector<Axis> out;
  for (Axis a : kAxes)
    if (contains(a)) out.push_back(a);
  return out;
}

std::string AxisSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Axis a : axes()) {
    if (!first) s += ",";
    s += std::to_string(number(a));
    first = false;
  }
  return s + "}";
}

struct ScalarExpr::Node {
  Kind kind = Kind::Const;
  double value = 0.0;  // Const literal, Antiderivative reference point
  Axis axis = Axis::X1;
  int exponent = 0;
  AxisSet axes;
  std::size_t size = 1;
  std::vector<ScalarExpr> children;
};

namespace {

using Kind = ScalarExpr::Kind;

std::string format_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ScalarExpr::ScalarExpr() : ScalarExpr(0.0) {}

ScalarExpr::ScalarExpr(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  node_ = std::move(n);
}

ScalarExpr ScalarExpr::constant(double value) { return ScalarExpr(value); }

ScalarExpr ScalarExpr::variable(Axis axis) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->axis = axis;
  n->axes = AxisSet{axis};
  return ScalarExpr(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

template <typename NodeT>
std::shared_ptr<NodeT> compose(Kind kind, std::vector<ScalarExpr> children) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->size = 1;
  for (const auto& c : children) {
    n->axes = n->axes | c.free_axes();
    n->size += c.tree_size();
  }
  n->children = std::move(children);
  return n;
}

}  // namespace

ScalarExpr ScalarExpr::make_add(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(compose<Node>(Kind::Add, {std::move(a), std::move(b)}));
}
ScalarExpr ScalarExpr::make_sub(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(compose<Node>(Kind::Sub, {std::move(a), std::move(b)}));
}
ScalarExpr ScalarExpr::make_mul(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(compose<Node>(Kind::Mul, {std::move(a), std::move(b)}));
}
ScalarExpr ScalarExpr::make_div(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(compose<Node>(Kind::Div, {std::move(a), std::move(b)}));
}
ScalarExpr ScalarExpr::make_neg(ScalarExpr a) {
  return ScalarExpr(compose<Node>(Kind::Neg, {std::move(a)}));
}
ScalarExpr ScalarExpr::make_pow(ScalarExpr base, int exponent) {
  auto n = compose<Node>(Kind::Pow, {std::move(base)});
  n->exponent = exponent;
  return ScalarExpr(std::shared_ptr<const Node>(std::move(n)));
}
ScalarExpr ScalarExpr::make_exp(ScalarExpr a) {
  return ScalarExpr(compose<Node>(Kind::Exp, {std::move(a)}));
}
ScalarExpr ScalarExpr::make_ln(ScalarExpr a) {
  return ScalarExpr(compose<Node>(Kind::Ln, {std::move(a)}));
}
ScalarExpr ScalarExpr::make_sqrt(ScalarExpr a) {
  return ScalarExpr(compose<Node>(Kind::Sqrt, {std::move(a)}));
}

ScalarExpr ScalarExpr::make_antiderivative(ScalarExpr integrand, Axis axis, double ref) {
  if (!integrand.free_axes().subset_of(AxisSet{axis}))
    throw PreconditionError("antiderivative along x" + std::to_string(number(axis)) +
                            " of an integrand depending on " +
                            integrand.free_axes().to_string());
  if (!std::isfinite(ref)) throw PreconditionError("antiderivative reference point is not finite");
  auto n = compose<Node>(Kind::Antiderivative, {std::move(integrand)});
  n->axis = axis;
  n->value = ref;
  n->axes = AxisSet{axis};
  return ScalarExpr(std::shared_ptr<const Node>(std::move(n)));
}

ScalarExpr::Kind ScalarExpr::kind() const { return node_->kind; }
double ScalarExpr::value() const { return node_->value; }
Axis ScalarExpr::axis() const { return node_->axis; }
int ScalarExpr::exponent() const { return node_->exponent; }
double ScalarExpr::reference() const { return node_->value; }
const ScalarExpr& ScalarExpr::lhs() const { return node_->children.at(0); }
const ScalarExpr& ScalarExpr::rhs() const { return node_->children.at(1); }
AxisSet ScalarExpr::free_axes() const { return node_->axes; }
std::size_t ScalarExpr::tree_size() const { return node_->size; }

bool ScalarExpr::is_literal(double v) const { return node_->kind == Kind::Const && node_->value == v; }

std::string ScalarExpr::to_string() const {
  switch (kind()) {
    case Kind::Const: {
      std::string s = format_number(value());
      return value() < 0 || std::signbit(value()) ? "(" + s + ")" : s;
    }
    case Kind::Var:
      return "x" + std::to_string(number(axis()));
    case Kind::Add:
      return "(" + lhs().to_string() + " + " + rhs().to_string() + ")";
    case Kind::Sub:
      return "(" + lhs().to_string() + " - " + rhs().to_string() + ")";
    case Kind::Mul:
      return "(" + lhs().to_string() + " * " + rhs().to_string() + ")";
    case Kind::Div:
      return "(" + lhs().to_string() + " / " + rhs().to_string() + ")";
    case Kind::Neg:
      return "(-" + lhs().to_string() + ")";
    case Kind::Pow: {
      std::string base = lhs().to_string();
      if (exponent() < 0) return base + "^(" + std::to_string(exponent()) + ")";
      return base + "^" + std::to_string(exponent());
    }
    case Kind::Exp:
      return "exp(" + lhs().to_string() + ")";
    case Kind::Ln:
      return "ln(" + lhs().to_string() + ")";
    case Kind::Sqrt:
      return "sqrt(" + lhs().to_string() + ")";
    case Kind::Antiderivative:
      return "antideriv(" + lhs().to_string() + ", x" + std::to_string(number(axis())) + ", " +
             format_number(reference()) + ")";
  }
  return "?";
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_literal(0.0)) return b;
  if (b.is_literal(0.0)) return a;
  if (a.kind() == Kind::Const && b.kind() == Kind::Const) return a.value() + b.value();
  return ScalarExpr::make_add(a, b);
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_literal(0.0)) return a;
  if (a.is_literal(0.0)) return -b;
  if (a.kind() == Kind::Const && b.kind() == Kind::Const) return a.value() - b.value();
  return ScalarExpr::make_sub(a, b);
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.is_literal(0.0) || b.is_literal(0.0)) return 0.0;
  if (a.is_literal(1.0)) return b;
  if (b.is_literal(1.0)) return a;
  if (a.kind() == Kind::Const && b.kind() == Kind::Const) return a.value() * b.value();
  return ScalarExpr::make_mul(a, b);
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
  if (b.is_literal(1.0)) return a;
  if (a.is_literal(0.0) && !b.is_literal(0.0)) return 0.0;
  return ScalarExpr::make_div(a, b);
}

ScalarExpr operator-(const ScalarExpr& a) {
  if (a.kind() == Kind::Const) return -a.value();
  if (a.kind() == Kind::Neg) return a.lhs();
  return ScalarExpr::make_neg(a);
}

ScalarExpr pow(const ScalarExpr& base, int exponent) {
  if (exponent == 0) return 1.0;
  if (exponent == 1) return base;
  return ScalarExpr::make_pow(base, exponent);
}

ScalarExpr exp(const ScalarExpr& a) {
  if (a.is_literal(0.0)) return 1.0;
  return ScalarExpr::make_exp(a);
}
ScalarExpr ln(const ScalarExpr& a) {
  if (a.is_literal(1.0)) return 0.0;
  return ScalarExpr::make_ln(a);
}
ScalarExpr sqrt(const ScalarExpr& a) { return ScalarExpr::make_sqrt(a); }
ScalarExpr square(const ScalarExpr& a) { return pow(a, 2); }
ScalarExpr var(Axis axis) { return ScalarExpr::variable(axis); }

namespace {

double checked(double v, const ScalarExpr& e) {
  if (!std::isfinite(v)) throw DomainError("non-finite value", e.to_string());
  return v;
}

}  // namespace

double eval(const ScalarExpr& e, const Point& p) {
  switch (e.kind()) {
    case Kind::Const:
      return e.value();
    case Kind::Var:
      return p[index(e.axis())];
    case Kind::Add:
      return checked(eval(e.lhs(), p) + eval(e.rhs(), p), e);
    case Kind::Sub:
      return checked(eval(e.lhs(), p) - eval(e.rhs(), p), e);
    case Kind::Mul:
      return checked(eval(e.lhs(), p) * eval(e.rhs(), p), e);
    case Kind::Div: {
      const double den = eval(e.rhs(), p);
      if (den == 0.0) throw DomainError("division by zero", e.to_string());
      return checked(eval(e.lhs(), p) / den, e);
    }
    case Kind::Neg:
      return -eval(e.lhs(), p);
    case Kind::Pow: {
      const double base = eval(e.lhs(), p);
      if (base == 0.0 && e.exponent() < 0) throw DomainError("division by zero", e.to_string());
      return checked(std::pow(base, e.exponent()), e);
    }
    case Kind::Exp:
      return checked(std::exp(eval(e.lhs(), p)), e);
    case Kind::Ln: {
      const double arg = eval(e.lhs(), p);
      if (!(arg > 0.0)) throw DomainError("ln of non-positive argument", e.to_string());
      return std::log(arg);
    }
    case Kind::Sqrt: {
      const double arg = eval(e.lhs(), p);
      if (arg < 0.0) throw DomainError("sqrt of negative argument", e.to_string());
      return std::sqrt(arg);
    }
    case Kind::Antiderivative: {
      const int k = index(e.axis());
      Point q = p;
      const ScalarExpr& integrand = e.lhs();
      auto f = [&](double t) {
        q[k] = t;
        return eval(integrand, q);
      };
      return checked(adaptive_simpson(f, e.reference(), p[k]), e);
    }
  }
  throw DomainError("unknown node", "?");
}

ScalarExpr diff(const ScalarExpr& e, Axis axis) {
  if (!e.free_axes().contains(axis)) return 0.0;
  switch (e.kind()) {
    case Kind::Const:
      return 0.0;
    case Kind::Var:
      return e.axis() == axis ? 1.0 : 0.0;
    case Kind::Add:
      return diff(e.lhs(), axis) + diff(e.rhs(), axis);
    case Kind::Sub:
      return diff(e.lhs(), axis) - diff(e.rhs(), axis);
    case Kind::Mul:
      return diff(e.lhs(), axis) * e.rhs() + e.lhs() * diff(e.rhs(), axis);
    case Kind::Div: {
      // (u/v)' = u'/v - u v'/v^2
      const ScalarExpr& u = e.lhs();
      const ScalarExpr& v = e.rhs();
      return diff(u, axis) / v - u * diff(v, axis) / pow(v, 2);
    }
    case Kind::Neg:
      return -diff(e.lhs(), axis);
    case Kind::Pow: {
      const int n = e.exponent();
      return ScalarExpr(static_cast<double>(n)) * pow(e.lhs(), n - 1) * diff(e.lhs(), axis);
    }
    case Kind::Exp:
      return e * diff(e.lhs(), axis);
    case Kind::Ln:
      return diff(e.lhs(), axis) / e.lhs();
    case Kind::Sqrt:
      return diff(e.lhs(), axis) / (ScalarExpr(2.0) * e);
    case Kind::Antiderivative:
      return e.axis() == axis ? e.lhs() : ScalarExpr(0.0);
  }
  return 0.0;
}

}  // namespace etaricci
