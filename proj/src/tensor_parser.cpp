#include "npoisson/tensor_parser.hpp"

#include "npoisson/error.hpp"

namespace npoisson {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const Expr& e, const std::string& message)
{
    throw ParseError(message, e.line, e.column);
}

/// Promotes a function to a grade-0 tensor of the same kind as `like`.
template <typename T>
T lift(const Polynomial& p)
{
    return T(p);
}

TensorValue add_values(const Expr& e, const TensorValue& a, const TensorValue& b, bool subtract)
{
    auto combine = [&](auto x, const auto& y) -> TensorValue {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
            if constexpr (!std::is_same_v<X, Polynomial>) {
                if (x.grade() != y.grade()) fail(e, "cannot add tensors of different grades");
            }
            if (subtract)
                x -= y;
            else
                x += y;
            return x;
        } else if constexpr (std::is_same_v<X, Polynomial>) {
            if (y.grade() != 0) fail(e, "cannot add a function to a " + describe(TensorValue(y)));
            Y lx = lift<Y>(x);
            return subtract ? TensorValue(lx - y) : TensorValue(lx + y);
        } else if constexpr (std::is_same_v<Y, Polynomial>) {
            if (x.grade() != 0) fail(e, "cannot add a function to a " + describe(TensorValue(x)));
            X ly = lift<X>(y);
            return subtract ? TensorValue(x - ly) : TensorValue(x + ly);
        } else {
            fail(e, "cannot add a form and a multivector");
        }
    };
    return std::visit(combine, a, b);
}

TensorValue multiply_values(const Expr& e, const TensorValue& a, const TensorValue& b)
{
    if (auto pa = std::get_if<Polynomial>(&a)) {
        return std::visit([&](const auto& y) -> TensorValue { return *pa * y; }, b);
    }
    if (auto pb = std::get_if<Polynomial>(&b)) {
        return std::visit([&](const auto& x) -> TensorValue { return x * *pb; }, a);
    }
    fail(e, "use '^' to multiply tensors");
}

TensorValue wedge_values(const Expr& e, const TensorValue& a, const TensorValue& b)
{
    if (std::holds_alternative<Polynomial>(a) || std::holds_alternative<Polynomial>(b)) return multiply_values(e, a, b);
    if (auto fa = std::get_if<Form>(&a)) {
        if (auto fb = std::get_if<Form>(&b)) return wedge(*fa, *fb);
    }
    if (auto ma = std::get_if<Multivector>(&a)) {
        if (auto mb = std::get_if<Multivector>(&b)) return wedge(*ma, *mb);
    }
    fail(e, "cannot wedge a form with a multivector");
}

TensorValue lookup(const Expr& e, const ChartPtr& chart, const TensorSymbols* symbols)
{
    if (auto i = chart->find(e.name)) return Polynomial::variable(chart, *i);
    if (symbols) {
        if (auto it = symbols->find(e.name); it != symbols->end())
            return std::visit([&](const auto& v) -> TensorValue { return v.embed(chart); }, it->second);
    }
    fail(e, "unknown identifier '" + e.name + "'");
}

} // namespace

TensorValue evaluate_tensor(const Expr& e, const ChartPtr& chart, const TensorSymbols* symbols)
{
    auto rec = [&](std::size_t i) { return evaluate_tensor(*e.operands[i], chart, symbols); };
    switch (e.kind) {
    case Expr::Kind::Number:
        return Polynomial(chart, e.number);
    case Expr::Kind::Identifier:
        return lookup(e, chart, symbols);
    case Expr::Kind::Call: {
        if (e.name == "d") {
            TensorValue arg = rec(0);
            if (auto f = std::get_if<Polynomial>(&arg)) return differential(*f);
            if (auto form = std::get_if<Form>(&arg)) return exterior_derivative(*form);
            fail(e, "d(...) of a multivector is undefined");
        }
        if (e.name == "e") {
            const Expr& arg = *e.operands[0];
            if (arg.kind != Expr::Kind::Identifier) fail(arg, "e(...) expects a coordinate name");
            auto i = chart->find(arg.name);
            if (!i) fail(arg, "unknown coordinate '" + arg.name + "'");
            return Multivector::basis(chart, *i);
        }
        fail(e, "unknown function '" + e.name + "'");
    }
    case Expr::Kind::Negate:
        return std::visit([](const auto& v) -> TensorValue { return -v; }, rec(0));
    case Expr::Kind::Add:
        return add_values(e, rec(0), rec(1), false);
    case Expr::Kind::Sub:
        return add_values(e, rec(0), rec(1), true);
    case Expr::Kind::Mul:
        return multiply_values(e, rec(0), rec(1));
    case Expr::Kind::Div: {
        TensorValue divisor = rec(1);
        auto p = std::get_if<Polynomial>(&divisor);
        auto c = p ? p->as_constant() : std::nullopt;
        if (!c) fail(e, "divisor must be a constant");
        if (*c == 0) fail(e, "division by zero");
        Polynomial inv(chart, Rational(1 / *c));
        return multiply_values(e, rec(0), inv);
    }
    case Expr::Kind::Power: {
        TensorValue base = rec(0);
        return std::visit(overloaded{[&](const Polynomial& p) -> TensorValue { return p.pow(e.exponent); },
                                     [&](const auto& t) -> TensorValue { return wedge_power(t, e.exponent); }},
                          base);
    }
    case Expr::Kind::Wedge:
        return wedge_values(e, rec(0), rec(1));
    }
    fail(e, "unhandled expression");
}

TensorValue parse_tensor(std::string_view text, const ChartPtr& chart, const TensorSymbols* symbols,
                         std::size_t line, std::size_t first_column)
{
    return evaluate_tensor(*parse_ast(text, line, first_column), chart, symbols);
}

std::string to_string(const TensorValue& value)
{
    return std::visit([](const auto& v) { return v.to_string(); }, value);
}

std::string describe(const TensorValue& value)
{
    return std::visit(overloaded{[](const Polynomial&) -> std::string { return "function"; },
                                 [](const Form& f) { return std::to_string(f.grade()) + "-form"; },
                                 [](const Multivector& m) { return std::to_string(m.grade()) + "-vector"; }},
                      value);
}

} // namespace npoisson
