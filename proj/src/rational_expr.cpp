#include "npoisson/rational_expr.hpp"

#include <algorithm>

#include "npoisson/error.hpp"

namespace npoisson {

RationalExpr::RationalExpr(const Polynomial& numerator)
    : num_(numerator), den_(numerator.chart(), Rational(1))
{
}

RationalExpr::RationalExpr(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    require_same_chart(num_.chart(), den_.chart());
    if (den_.is_zero()) throw DomainError("rational expression with zero denominator");
}

std::optional<Polynomial> RationalExpr::as_polynomial() const
{
    if (auto c = den_.as_constant()) return num_ * Rational(1 / *c);
    return try_divide(num_, den_);
}

std::optional<Rational> RationalExpr::as_constant() const
{
    if (auto p = as_polynomial()) return p->as_constant();
    return std::nullopt;
}

namespace {

/// Componentwise minimum exponent over all terms: the largest monomial dividing p.
Monomial monomial_content(const Polynomial& p)
{
    Monomial m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

} // namespace

RationalExpr RationalExpr::simplified() const
{
    if (auto p = as_polynomial()) return RationalExpr(*p);
    // no multivariate gcd: cancel the common monomial factor and make the denominator monic
    Monomial common = monomial_content(den_);
    if (!num_.is_zero()) {
        const Monomial nc = monomial_content(num_);
        for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(common[i], nc[i]);
    }
    const Polynomial divisor = Polynomial::monomial(chart(), common, den_.leading_term().second);
    return RationalExpr(exact_divide(num_, divisor), exact_divide(den_, divisor));
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b)
{
    if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
    return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b)
{
    return a + (-b);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b)
{
    return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b)
{
    if (b.is_zero()) throw DomainError("division by a zero rational expression");
    return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalExpr& a, const RationalExpr& b)
{
    if (!same_chart(a.chart(), b.chart())) return false;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalExpr::to_string() const
{
    if (auto p = as_polynomial()) return p->to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace npoisson
