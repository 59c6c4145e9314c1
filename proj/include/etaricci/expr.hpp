#pragma once

// Closed-form scalar expressions over the coordinates (x1, x2, x3).
//
// A ScalarExpr is an immutable tree (a DAG once subtrees are shared) of
// arithmetic nodes, integer powers, exp/ln/sqrt and numeric antiderivative
// nodes. Differentiation is exact and produces another ScalarExpr; evaluation
// is plain IEEE double arithmetic. No symbolic simplification is attempted
// beyond folding literal 0 and 1 operands in the arithmetic helpers.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace etaricci {

enum class Axis : std::uint8_t { X1 = 1, X2 = 2, X3 = 3 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X1, Axis::X2, Axis::X3};

constexpr int index(Axis a) { return static_cast<int>(a) - 1; }
constexpr int number(Axis a) { return static_cast<int>(a); }
Axis axis_from_number(int n);

using Point = std::array<double, 3>;

/// Set of coordinate axes, stored as a bit mask (bit 0 is x1).
class AxisSet {
 public:
  constexpr AxisSet() = default;
  constexpr explicit AxisSet(std::uint8_t mask) : mask_(mask & 0x7u) {}
  constexpr AxisSet(std::initializer_list<Axis> axes) {
    for (Axis a : axes) mask_ |= bit(a);
  }

  constexpr bool contains(Axis a) const { return (mask_ & bit(a)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool subset_of(AxisSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr std::uint8_t mask() const { return mask_; }
  constexpr AxisSet operator|(AxisSet o) const { return AxisSet(mask_ | o.mask_); }
  constexpr bool operator==(const AxisSet&) const = default;

  std::vector<Axis> axes() const;
  std::string to_string() const;

 private:
  static constexpr std::uint8_t bit(Axis a) { return static_cast<std::uint8_t>(1u << index(a)); }
  std::uint8_t mask_ = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation hit a point where the expression is undefined.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string node)
      : Error(what + " in `" + node + "`"), node_(std::move(node)) {}
  const std::string& node() const { return node_; }
  /// Same error with a location suffix, e.g. "at (0.1, 0.2, 0.3)".
  DomainError located(const std::string& where) const {
    return DomainError(Error(std::string(what()) + " " + where), node_);
  }

 private:
  DomainError(Error e, std::string node) : Error(std::move(e)), node_(std::move(node)) {}

  std::string node_;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// A caller-side contract was violated (wrong metric case, bad parameters, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ScalarExpr {
 public:
  enum class Kind : std::uint8_t {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,
    Exp,
    Ln,
    Sqrt,
    Antiderivative,
  };

  /// The constant 0.
  ScalarExpr();
  // Implicit so that formula code can mix literals and expressions.
  ScalarExpr(double value);  // NOLINT(google-explicit-constructor)

  static ScalarExpr constant(double value);
  static ScalarExpr variable(Axis axis);

  // Raw node constructors: no folding, exactly the requested shape.
  static ScalarExpr make_add(ScalarExpr a, ScalarExpr b);
  static ScalarExpr make_sub(ScalarExpr a, ScalarExpr b);
  static ScalarExpr make_mul(ScalarExpr a, ScalarExpr b);
  static ScalarExpr make_div(ScalarExpr a, ScalarExpr b);
  static ScalarExpr make_neg(ScalarExpr a);
  static ScalarExpr make_pow(ScalarExpr base, int exponent);
  static ScalarExpr make_exp(ScalarExpr a);
  static ScalarExpr make_ln(ScalarExpr a);
  static ScalarExpr make_sqrt(ScalarExpr a);
  /// F(x) = integral of `integrand` along `axis` from `ref` to x. The integrand
  /// must depend on `axis` only.
  static ScalarExpr make_antiderivative(ScalarExpr integrand, Axis axis, double ref);

  Kind kind() const;
  /// Literal value of a Const node.
  double value() const;
  /// Axis of a Var or Antiderivative node.
  Axis axis() const;
  int exponent() const;
  /// Reference point of an Antiderivative node.
  double reference() const;
  /// First operand (the integrand for Antiderivative).
  const ScalarExpr& lhs() const;
  const ScalarExpr& rhs() const;

  AxisSet free_axes() const;
  bool is_constant() const { return free_axes().empty(); }
  bool is_literal(double v) const;

  /// Number of nodes counting shared subtrees once per use.
  std::size_t tree_size() const;

  /// Text form accepted by parse_expr.
  std::string to_string() const;

  bool same_node(const ScalarExpr& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit ScalarExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Arithmetic helpers fold literal 0/1 operands; everything else is kept as-is.
ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b);
ScalarExpr operator-(const ScalarExpr& a);
ScalarExpr pow(const ScalarExpr& base, int exponent);
ScalarExpr exp(const ScalarExpr& a);
ScalarExpr ln(const ScalarExpr& a);
ScalarExpr sqrt(const ScalarExpr& a);
ScalarExpr square(const ScalarExpr& a);

ScalarExpr var(Axis axis);
inline ScalarExpr x1() { return var(Axis::X1); }
inline ScalarExpr x2() { return var(Axis::X2); }
inline ScalarExpr x3() { return var(Axis::X3); }

/// Evaluates `e` at `p`. Throws DomainError on division by zero, ln of a
/// non-positive number, sqrt of a negative number or a non-finite result.
double eval(const ScalarExpr& e, const Point& p);

/// Exact partial derivative with respect to `axis`.
ScalarExpr diff(const ScalarExpr& e, Axis axis);

inline AxisSet free_axes(const ScalarExpr& e) { return e.free_axes(); }

}  // namespace etaricci
