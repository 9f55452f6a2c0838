#include "npoisson/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "npoisson/error.hpp"

namespace npoisson {

Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw DomainError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
    mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // larger exponent on an earlier coordinate ranks higher
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

Polynomial::Polynomial(ChartPtr chart) : chart_(std::move(chart))
{
    if (!chart_) throw DomainError("polynomial requires a chart");
}

Polynomial::Polynomial(ChartPtr chart, const Rational& constant) : Polynomial(std::move(chart))
{
    add_term(Monomial(chart_->dimension(), 0), constant);
}

Polynomial Polynomial::variable(ChartPtr chart, std::size_t index)
{
    if (!chart || index >= chart->dimension()) throw DomainError("coordinate index out of range");
    Monomial m(chart->dimension(), 0);
    m[index] = 1;
    return monomial(std::move(chart), std::move(m), Rational(1));
}

Polynomial Polynomial::variable(const ChartPtr& chart, std::string_view name)
{
    return variable(chart, chart->index_of(name));
}

Polynomial Polynomial::monomial(ChartPtr chart, Monomial exponents, const Rational& coefficient)
{
    Polynomial p(std::move(chart));
    p.add_term(exponents, coefficient);
    return p;
}

std::optional<Rational> Polynomial::as_constant() const
{
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == Monomial(chart_->dimension(), 0))
        return terms_.begin()->second;
    return std::nullopt;
}

unsigned Polynomial::total_degree() const
{
    if (terms_.empty()) return 0;
    const auto& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0u);
}

const Polynomial::TermMap::value_type& Polynomial::leading_term() const
{
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& exponents, const Rational& coefficient)
{
    if (exponents.size() != chart_->dimension()) throw DomainError("exponent vector length differs from chart dimension");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_chart(chart_, other.chart_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_chart(chart_, other.chart_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_chart(a.chart_, b.chart_);
    Polynomial result(a.chart_);
    Monomial m(a.chart_->dimension());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            result.add_term(m, ca * cb);
        }
    }
    return result;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor)
{
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= factor;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(chart_, Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::embed(const ChartPtr& target) const
{
    if (same_chart(chart_, target)) {
        Polynomial p = *this;
        p.chart_ = target;
        return p;
    }
    std::vector<std::size_t> map(chart_->dimension());
    for (std::size_t i = 0; i < map.size(); ++i) {
        auto j = target->find(chart_->name(i));
        if (!j) {
            if (!independent_of(i))
                throw DomainError("coordinate '" + chart_->name(i) + "' missing from target chart");
            map[i] = target->dimension();
        } else {
            map[i] = *j;
        }
    }
    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
        Monomial tm(target->dimension(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) tm[map[i]] = m[i];
        result.add_term(tm, c);
    }
    return result;
}

bool Polynomial::independent_of(std::size_t index) const
{
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.at(index) == 0; });
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

std::string monomial_to_string(const Chart& chart, const Monomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += chart.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono = monomial_to_string(*chart_, m);
        Rational mag = abs(c);
        std::string body;
        if (mono.empty())
            body = npoisson::to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = npoisson::to_string(mag) + "*" + mono;
        if (first)
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t coord)
{
    if (coord >= p.chart()->dimension()) throw DomainError("coordinate index out of range");
    Polynomial result(p.chart());
    for (const auto& [m, c] : p.terms()) {
        if (m[coord] == 0) continue;
        Monomial dm = m;
        --dm[coord];
        result.add_term(dm, c * m[coord]);
    }
    return result;
}

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b)
{
    require_same_chart(a.chart(), b.chart());
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    // Single-divisor division in grlex order. {b} is a Groebner basis of (b), so the
    // remainder is zero iff b | a, and a non-divisible leading term means it is not.
    const auto& [lead_m, lead_c] = b.leading_term();
    Polynomial quotient(a.chart());
    Polynomial rest = a;
    Monomial qm(lead_m.size());
    while (!rest.is_zero()) {
        const auto& [rm, rc] = rest.leading_term();
        for (std::size_t i = 0; i < qm.size(); ++i) {
            if (rm[i] < lead_m[i]) return std::nullopt;
            qm[i] = rm[i] - lead_m[i];
        }
        Polynomial step = Polynomial::monomial(a.chart(), qm, rc / lead_c);
        rest -= step * b;
        quotient += step;
    }
    return quotient;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b)
{
    if (auto q = try_divide(a, b)) return *q;
    throw NotDivisible();
}

std::vector<Polynomial> monomials_up_to(const ChartPtr& chart, unsigned max_degree)
{
    const std::size_t m = chart->dimension();
    std::vector<Monomial> exps{Monomial(m, 0)};
    for (std::size_t frontier = 0; frontier < exps.size(); ++frontier) {
        const Monomial base = exps[frontier];
        unsigned degree = 0;
        for (unsigned e : base) degree += e;
        if (degree == max_degree) continue;
        for (std::size_t i = 0; i < m; ++i) {
            Monomial next = base;
            ++next[i];
            if (std::find(exps.begin(), exps.end(), next) == exps.end()) exps.push_back(next);
        }
    }
    std::sort(exps.begin(), exps.end(), GrlexLess{});
    std::vector<Polynomial> out;
    for (auto& e : exps) out.push_back(Polynomial::monomial(chart, std::move(e), Rational(1)));
    return out;
}

} // namespace npoisson
