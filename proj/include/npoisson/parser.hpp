#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "npoisson/polynomial.hpp"
#include "npoisson/rational_expr.hpp"

namespace npoisson {

/// Syntax tree shared by the polynomial, rational and tensor evaluators.
///
/// Grammar (whitespace insignificant):
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := atom ('^' (integer | atom))*
///   atom    := integer | identifier | identifier '(' sum ')' | '(' sum ')'
/// `x ^ integer` is a power; `x ^ atom` is a wedge product (tensor expressions only).
struct Expr {
    enum class Kind { Number, Identifier, Call, Negate, Add, Sub, Mul, Div, Power, Wedge };

    Kind kind;
    std::size_t line = 1;
    std::size_t column = 1;
    Rational number;    // Number
    std::string name;   // Identifier, Call
    unsigned exponent = 0; // Power
    std::vector<std::shared_ptr<const Expr>> operands;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Parses a complete expression. `line` and `first_column` place error
/// locations when the text is a fragment of a larger file.
ExprPtr parse_ast(std::string_view text, std::size_t line = 1, std::size_t first_column = 1);

/// Named polynomials that identifiers may refer to besides chart coordinates.
using PolynomialSymbols = std::map<std::string, Polynomial, std::less<>>;

Polynomial evaluate_polynomial(const Expr& expr, const ChartPtr& chart, const PolynomialSymbols* symbols = nullptr);
RationalExpr evaluate_rational(const Expr& expr, const ChartPtr& chart, const PolynomialSymbols* symbols = nullptr);

Polynomial parse_expr(std::string_view text, const ChartPtr& chart, const PolynomialSymbols* symbols = nullptr);
/// Accepts everything parse_expr does plus division by non-constant polynomials.
RationalExpr parse_rational_expr(std::string_view text, const ChartPtr& chart,
                                 const PolynomialSymbols* symbols = nullptr);

} // namespace npoisson
