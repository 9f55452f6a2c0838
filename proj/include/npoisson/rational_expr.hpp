#pragma once

#include <optional>
#include <string>

#include "npoisson/polynomial.hpp"

namespace npoisson {

/// Unreduced quotient of polynomials. Equality is by cross-multiplication.
class RationalExpr {
public:
    explicit RationalExpr(const Polynomial& numerator);
    RationalExpr(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    const ChartPtr& chart() const noexcept { return num_.chart(); }

    bool is_zero() const noexcept { return num_.is_zero(); }

    /// The polynomial value when the denominator divides the numerator.
    std::optional<Polynomial> as_polynomial() const;
    /// The rational value when the quotient is a constant.
    std::optional<Rational> as_constant() const;

    /// Divides out a constant denominator or an exact polynomial quotient; otherwise unchanged.
    RationalExpr simplified() const;

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
    RationalExpr operator-() const { return RationalExpr(-num_, den_); }

    friend bool operator==(const RationalExpr& a, const RationalExpr& b);

    /// "p" when the value is polynomial, "(n)/(d)" otherwise.
    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

} // namespace npoisson
