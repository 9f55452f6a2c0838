#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "npoisson/chart.hpp"

namespace npoisson {

/// Exact rational, always canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// Parses "a" or "a/b"; throws DomainError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Dense exponent vector, one entry per chart coordinate.
using Monomial = std::vector<unsigned>;

/// Graded-lexicographic order: total degree first, then lex with the first
/// coordinate most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals on a fixed chart.
/// Never stores a zero coefficient, so structural equality is polynomial equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit Polynomial(ChartPtr chart);
    Polynomial(ChartPtr chart, const Rational& constant);

    static Polynomial variable(ChartPtr chart, std::size_t index);
    static Polynomial variable(const ChartPtr& chart, std::string_view name);
    static Polynomial monomial(ChartPtr chart, Monomial exponents, const Rational& coefficient);

    const ChartPtr& chart() const noexcept { return chart_; }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// The value if the polynomial has no non-constant terms.
    std::optional<Rational> as_constant() const;
    unsigned total_degree() const;
    /// Largest term in grlex order; requires a nonzero polynomial.
    const TermMap::value_type& leading_term() const;

    void add_term(const Monomial& exponents, const Rational& coefficient);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& factor);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
    friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
    Polynomial operator-() const;

    Polynomial pow(unsigned exponent) const;

    /// Same polynomial on another chart, matching coordinates by name.
    Polynomial embed(const ChartPtr& target) const;

    /// True iff the polynomial does not involve coordinate `index`.
    bool independent_of(std::size_t index) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text: terms in descending grlex order, e.g. "q1^2 - 3/2*p1".
    std::string to_string() const;

private:
    ChartPtr chart_;
    TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t coord);

/// Returns q with q*b == a; throws NotDivisible otherwise and DomainError for b == 0.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);

std::string monomial_to_string(const Chart& chart, const Monomial& m);

/// All monic monomials of total degree <= max_degree, ascending grlex (1 first).
std::vector<Polynomial> monomials_up_to(const ChartPtr& chart, unsigned max_degree);

} // namespace npoisson
