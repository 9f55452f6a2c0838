#include "npoisson/parser.hpp"

#include <cctype>

#include "npoisson/error.hpp"

namespace npoisson {

namespace {

struct Token {
    enum class Kind { Number, Identifier, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({Token::Kind::Number, std::string(text.substr(start, i - start)), line, column});
            column += i - start;
        } else if (std::isalpha(c)) {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            tokens.push_back({Token::Kind::Identifier, std::string(text.substr(start, i - start)), line, column});
            column += i - start;
        } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
            tokens.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), line, column});
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, column);
        }
    }
    tokens.push_back({Token::Kind::End, "", line, column});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr parse_all()
    {
        auto e = sum();
        if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at_symbol(char s) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == s; }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message) const
    {
        const Token& t = peek();
        throw ParseError(t.kind == Token::Kind::End ? "unexpected end of expression" : message, t.line, t.column);
    }

    static ExprPtr node(Expr::Kind kind, const Token& at, std::vector<ExprPtr> operands = {})
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->column = at.column;
        e->operands = std::move(operands);
        return e;
    }

    ExprPtr sum()
    {
        auto left = product();
        while (at_symbol('+') || at_symbol('-')) {
            const Token& op = take();
            auto right = product();
            left = node(op.text[0] == '+' ? Expr::Kind::Add : Expr::Kind::Sub, op, {left, right});
        }
        return left;
    }

    ExprPtr product()
    {
        auto left = unary();
        while (at_symbol('*') || at_symbol('/')) {
            const Token& op = take();
            auto right = unary();
            left = node(op.text[0] == '*' ? Expr::Kind::Mul : Expr::Kind::Div, op, {left, right});
        }
        return left;
    }

    ExprPtr unary()
    {
        if (at_symbol('-')) {
            const Token& op = take();
            return node(Expr::Kind::Negate, op, {unary()});
        }
        return power();
    }

    ExprPtr power()
    {
        auto left = atom();
        while (at_symbol('^')) {
            const Token& op = take();
            if (peek().kind == Token::Kind::Number) {
                const Token& n = take();
                if (n.text.size() > 6) throw ParseError("exponent too large", n.line, n.column);
                auto e = std::make_shared<Expr>(*node(Expr::Kind::Power, op, {left}));
                e->exponent = static_cast<unsigned>(std::stoul(n.text));
                left = e;
            } else {
                left = node(Expr::Kind::Wedge, op, {left, atom()});
            }
        }
        return left;
    }

    ExprPtr atom()
    {
        const Token& t = peek();
        if (t.kind == Token::Kind::Number) {
            take();
            auto e = std::make_shared<Expr>(*node(Expr::Kind::Number, t));
            e->number = Rational(mpz_class(t.text));
            return e;
        }
        if (t.kind == Token::Kind::Identifier) {
            take();
            if (at_symbol('(')) {
                take();
                auto arg = sum();
                if (!at_symbol(')')) fail("expected ')'");
                take();
                auto e = std::make_shared<Expr>(*node(Expr::Kind::Call, t, {arg}));
                e->name = t.text;
                return e;
            }
            auto e = std::make_shared<Expr>(*node(Expr::Kind::Identifier, t));
            e->name = t.text;
            return e;
        }
        if (at_symbol('(')) {
            take();
            auto inner = sum();
            if (!at_symbol(')')) fail("expected ')'");
            take();
            return inner;
        }
        fail("unexpected '" + t.text + "'");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

template <typename Value>
Value leaf_one(const ChartPtr& chart);

template <>
Polynomial leaf_one<Polynomial>(const ChartPtr& chart)
{
    return Polynomial(chart, Rational(1));
}

template <>
RationalExpr leaf_one<RationalExpr>(const ChartPtr& chart)
{
    return RationalExpr(Polynomial(chart, Rational(1)));
}

template <typename Value, typename Leaf, typename Divide>
Value fold(const Expr& e, const ChartPtr& chart, Leaf&& leaf, Divide&& divide)
{
    auto rec = [&](const ExprPtr& child) { return fold<Value>(*child, chart, leaf, divide); };
    switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Identifier:
        return leaf(e);
    case Expr::Kind::Negate:
        return -rec(e.operands[0]);
    case Expr::Kind::Add:
        return rec(e.operands[0]) + rec(e.operands[1]);
    case Expr::Kind::Sub:
        return rec(e.operands[0]) - rec(e.operands[1]);
    case Expr::Kind::Mul:
        return rec(e.operands[0]) * rec(e.operands[1]);
    case Expr::Kind::Div:
        return divide(e, rec(e.operands[0]), rec(e.operands[1]));
    case Expr::Kind::Power: {
        Value base = rec(e.operands[0]);
        Value result = leaf_one<Value>(chart);
        for (unsigned k = 0; k < e.exponent; ++k) result = result * base;
        return result;
    }
    case Expr::Kind::Call:
        throw ParseError("'" + e.name + "(...)' is not allowed in a scalar expression", e.line, e.column);
    case Expr::Kind::Wedge:
        throw ParseError("wedge '^' requires an integer exponent in a scalar expression", e.line, e.column);
    }
    throw ParseError("unhandled expression", e.line, e.column);
}

Polynomial polynomial_leaf(const Expr& e, const ChartPtr& chart, const PolynomialSymbols* symbols)
{
    if (e.kind == Expr::Kind::Number) return Polynomial(chart, e.number);
    if (auto i = chart->find(e.name)) return Polynomial::variable(chart, *i);
    if (symbols) {
        if (auto it = symbols->find(e.name); it != symbols->end()) return it->second.embed(chart);
    }
    throw ParseError("unknown identifier '" + e.name + "'", e.line, e.column);
}

} // namespace

ExprPtr parse_ast(std::string_view text, std::size_t line, std::size_t first_column)
{
    return Parser(tokenize(text, line, first_column)).parse_all();
}

Polynomial evaluate_polynomial(const Expr& expr, const ChartPtr& chart, const PolynomialSymbols* symbols)
{
    return fold<Polynomial>(
        expr, chart, [&](const Expr& e) { return polynomial_leaf(e, chart, symbols); },
        [](const Expr& e, const Polynomial& a, const Polynomial& b) {
            auto c = b.as_constant();
            if (!c) throw ParseError("division by a non-constant polynomial", e.line, e.column);
            if (*c == 0) throw ParseError("division by zero", e.line, e.column);
            return a * Rational(1 / *c);
        });
}

RationalExpr evaluate_rational(const Expr& expr, const ChartPtr& chart, const PolynomialSymbols* symbols)
{
    return fold<RationalExpr>(
        expr, chart, [&](const Expr& e) { return RationalExpr(polynomial_leaf(e, chart, symbols)); },
        [](const Expr& e, const RationalExpr& a, const RationalExpr& b) {
            if (b.is_zero()) throw ParseError("division by zero", e.line, e.column);
            return a / b;
        });
}

Polynomial parse_expr(std::string_view text, const ChartPtr& chart, const PolynomialSymbols* symbols)
{
    return evaluate_polynomial(*parse_ast(text), chart, symbols);
}

RationalExpr parse_rational_expr(std::string_view text, const ChartPtr& chart, const PolynomialSymbols* symbols)
{
    return evaluate_rational(*parse_ast(text), chart, symbols);
}

} // namespace npoisson
