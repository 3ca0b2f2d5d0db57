#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "rsurf/algebra.hpp"

namespace rsurf {

// Grammar (whitespace insignificant):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'i' | 'x' | 'y' | '(' expr ')'
//   number  := digits ['.' digits] [('e' | 'E') ['+' | '-'] digits]
//
// '^' binds tighter than unary minus, so -x^2 is -(x^2). Implicit
// multiplication is not accepted.

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct Literal {
    Complex value;
};
enum class Variable { x, y };
struct Negate {
    ExprPtr operand;
};
struct Binary {
    char op;  // '+', '-', '*'
    ExprPtr lhs, rhs;
};
struct Power {
    ExprPtr base;
    int exponent;
};

struct ExprNode {
    std::variant<Literal, Variable, Negate, Binary, Power> node;
    std::size_t position = 0;
};

struct CurveExpr {
    std::string source;
    ExprPtr ast;
};

/// Total degree cap on any expanded intermediate.
inline constexpr int kMaxExpandedDegree = 64;

CurveExpr parse_expression(std::string_view source);

/// Expand an expression into a curve f(x, y). Throws ParseError when y does
/// not appear or the expansion exceeds kMaxExpandedDegree.
BivariatePoly expand_curve(const CurveExpr& expr);

/// parse_expression followed by expand_curve.
BivariatePoly parse_curve(std::string_view source);

}  // namespace rsurf
