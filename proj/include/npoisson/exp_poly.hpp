#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "npoisson/polynomial.hpp"

namespace npoisson {

/// Finite sum of e^{w*s} * p_w with integer weights w, where s is one
/// distinguished chart coordinate. Weight-0 terms embed ordinary polynomials.
class ExpPoly {
public:
    using TermMap = std::map<int, Polynomial>;

    ExpPoly(ChartPtr chart, std::string_view exp_variable);
    ExpPoly(const Polynomial& p, std::string_view exp_variable);

    /// e^{weight*s}
    static ExpPoly exponential(ChartPtr chart, std::string_view exp_variable, int weight);

    const ChartPtr& chart() const noexcept { return chart_; }
    std::size_t exp_index() const noexcept { return s_index_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(int weight, const Polynomial& coefficient);

    ExpPoly& operator+=(const ExpPoly& other);
    ExpPoly& operator-=(const ExpPoly& other);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const ExpPoly& a, const Polynomial& p);

    friend bool operator==(const ExpPoly& a, const ExpPoly& b);

    std::string to_string() const;

private:
    void check_compatible(const ExpPoly& other) const;

    ChartPtr chart_;
    std::size_t s_index_;
    TermMap terms_;
};

/// d/dx of e^{ws} p: e^{ws} dp/dx for x != s, and e^{ws}(w p + dp/ds) for x == s.
ExpPoly partial_derivative(const ExpPoly& e, std::size_t coord);

} // namespace npoisson
