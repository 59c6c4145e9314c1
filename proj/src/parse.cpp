#include "etaricci/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace etaricci {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScalarExpr parse() {
    ScalarExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  ScalarExpr expr() {
    ScalarExpr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = ScalarExpr::make_add(lhs, term());
      else if (accept('-'))
        lhs = ScalarExpr::make_sub(lhs, term());
      else
        return lhs;
    }
  }

  ScalarExpr term() {
    ScalarExpr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = ScalarExpr::make_mul(lhs, unary());
      else if (accept('/'))
        lhs = ScalarExpr::make_div(lhs, unary());
      else
        return lhs;
    }
  }

  ScalarExpr unary() {
    if (accept('-')) return ScalarExpr::make_neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  ScalarExpr power() {
    ScalarExpr base = primary();
    while (accept('^')) base = ScalarExpr::make_pow(base, integer_exponent());
    return base;
  }

  int integer_exponent() {
    const bool paren = accept('(');
    skip_space();
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      pos_ = start;
      fail("exponent must be an integer (write general powers via exp/ln)");
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("exponent out of range");
    }
    if (paren) expect(')');
    return sign * value;
  }

  double number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
      pos_ = start;
      fail("expected number");
    }
    // Exponent part only when followed by digits, so "2e" is not swallowed.
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    return std::strtod(literal.c_str(), nullptr);
  }

  double signed_number() {
    skip_space();
    if (accept('-')) return -number();
    accept('+');
    return number();
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static int variable_axis(const std::string& name) {
    if (name == "x1") return 1;
    if (name == "x2") return 2;
    if (name == "x3") return 3;
    return 0;
  }

  ScalarExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarExpr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return ScalarExpr::constant(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const std::string name = identifier();
      if (const int axis = variable_axis(name); axis != 0)
        return ScalarExpr::variable(static_cast<Axis>(axis));
      if (name == "exp" || name == "ln" || name == "sqrt") {
        expect('(');
        ScalarExpr arg = expr();
        expect(')');
        if (name == "exp") return ScalarExpr::make_exp(arg);
        if (name == "ln") return ScalarExpr::make_ln(arg);
        return ScalarExpr::make_sqrt(arg);
      }
      if (name == "antideriv") {
        expect('(');
        ScalarExpr integrand = expr();
        expect(',');
        const std::size_t axis_pos = pos_;
        const int axis = variable_axis(identifier());
        if (axis == 0) {
          pos_ = axis_pos;
          skip_space();
          fail("antideriv expects x1, x2 or x3 as second argument");
        }
        expect(',');
        const double ref = signed_number();
        expect(')');
        try {
          return ScalarExpr::make_antiderivative(integrand, static_cast<Axis>(axis), ref);
        } catch (const PreconditionError& err) {
          pos_ = start;
          fail(err.what());
        }
      }
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace etaricci
