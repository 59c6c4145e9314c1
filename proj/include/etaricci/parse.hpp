#pragma once

#include <string>
#include <string_view>

#include "etaricci/expr.hpp"

namespace etaricci {

/// Syntax error or unknown identifier; `offset` is the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses infix text over x1, x2, x3.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' int)*        (so -x^2 is -(x^2))
///   int     := ['-'|'+'] digits | '(' ['-'|'+'] digits ')'
///   primary := number | x1 | x2 | x3 | func '(' expr ')' | '(' expr ')'
///            | 'antideriv' '(' expr ',' ('x1'|'x2'|'x3') ',' number ')'
///   func    := exp | ln | sqrt
///
/// The tree is built with the raw node constructors: no folding.
ScalarExpr parse_expr(std::string_view text);

}  // namespace etaricci
