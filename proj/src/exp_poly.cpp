#include "npoisson/exp_poly.hpp"

#include "npoisson/error.hpp"

namespace npoisson {

namespace {

std::size_t exp_index_of(const ChartPtr& chart, std::string_view name)
{
    if (!chart) throw DomainError("ExpPoly requires a chart");
    auto i = chart->find(name);
    if (!i) throw DomainError("chart lacks the exponential variable '" + std::string(name) + "'");
    return *i;
}

} // namespace

ExpPoly::ExpPoly(ChartPtr chart, std::string_view exp_variable)
    : chart_(std::move(chart)), s_index_(exp_index_of(chart_, exp_variable))
{
}

ExpPoly::ExpPoly(const Polynomial& p, std::string_view exp_variable) : ExpPoly(p.chart(), exp_variable)
{
    add_term(0, p);
}

ExpPoly ExpPoly::exponential(ChartPtr chart, std::string_view exp_variable, int weight)
{
    ExpPoly e(chart, exp_variable);
    e.add_term(weight, Polynomial(chart, Rational(1)));
    return e;
}

void ExpPoly::add_term(int weight, const Polynomial& coefficient)
{
    require_same_chart(chart_, coefficient.chart());
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(weight, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ExpPoly::check_compatible(const ExpPoly& other) const
{
    require_same_chart(chart_, other.chart_);
    if (s_index_ != other.s_index_) throw DomainError("ExpPoly operands use different exponential variables");
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other)
{
    check_compatible(other);
    for (const auto& [w, p] : other.terms_) add_term(w, p);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other)
{
    check_compatible(other);
    for (const auto& [w, p] : other.terms_) add_term(w, -p);
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b)
{
    a.check_compatible(b);
    ExpPoly result(a.chart_, a.chart_->name(a.s_index_));
    for (const auto& [wa, pa] : a.terms_)
        for (const auto& [wb, pb] : b.terms_) result.add_term(wa + wb, pa * pb);
    return result;
}

ExpPoly operator*(const ExpPoly& a, const Polynomial& p)
{
    ExpPoly result(a.chart_, a.chart_->name(a.s_index_));
    for (const auto& [w, q] : a.terms_) result.add_term(w, q * p);
    return result;
}

bool operator==(const ExpPoly& a, const ExpPoly& b)
{
    return same_chart(a.chart_, b.chart_) && a.s_index_ == b.s_index_ && a.terms_ == b.terms_;
}

std::string ExpPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    const std::string& s = chart_->name(s_index_);
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "exp(" + std::to_string(it->first) + "*" + s + ")*(" + it->second.to_string() + ")";
    }
    return out;
}

ExpPoly partial_derivative(const ExpPoly& e, std::size_t coord)
{
    ExpPoly result(e.chart(), e.chart()->name(e.exp_index()));
    for (const auto& [w, p] : e.terms()) {
        Polynomial dp = partial_derivative(p, coord);
        if (coord == e.exp_index() && w != 0) dp += p * Rational(w);
        result.add_term(w, dp);
    }
    return result;
}

} // namespace npoisson
