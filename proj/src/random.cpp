#include "npoisson/random.hpp"

#include "npoisson/error.hpp"

namespace npoisson {

long Random::integer(long lo, long hi)
{
    if (hi < lo) throw DomainError("empty random range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Rational Random::small_rational()
{
    Rational r(integer(-3, 3), integer(1, 3));
    r.canonicalize();
    return r;
}

Rational Random::nonzero_rational()
{
    for (;;) {
        Rational r = small_rational();
        if (r != 0) return r;
    }
}

Polynomial Random::polynomial(const ChartPtr& chart, unsigned max_degree, unsigned max_terms)
{
    Polynomial p(chart);
    const auto terms = integer(1, max_terms);
    for (long t = 0; t < terms; ++t) {
        Monomial m(chart->dimension(), 0);
        const long degree = integer(0, max_degree);
        for (long d = 0; d < degree; ++d) ++m[static_cast<std::size_t>(integer(0, chart->dimension() - 1))];
        p.add_term(m, nonzero_rational());
    }
    return p;
}

Polynomial Random::nonconstant_polynomial(const ChartPtr& chart, unsigned max_degree, unsigned max_terms)
{
    if (max_degree == 0) throw DomainError("nonconstant polynomial needs max_degree >= 1");
    for (;;) {
        Polynomial p = polynomial(chart, max_degree, max_terms);
        if (!p.as_constant()) return p;
    }
}

template <TensorKind Kind>
GradedTensor<Kind> Random::tensor(const ChartPtr& chart, std::size_t grade, unsigned max_degree, unsigned max_terms)
{
    const std::size_t m = chart->dimension();
    if (grade > m) throw DomainError("random tensor grade exceeds chart dimension");
    GradedTensor<Kind> t(chart, grade);
    if (grade == 0) {
        t.add({}, polynomial(chart, max_degree, max_terms));
        return t;
    }
    const auto terms = integer(1, max_terms);
    for (long k = 0; k < terms; ++k) {
        // random grade-subset by partial Fisher-Yates
        IndexTuple all(m);
        for (std::size_t i = 0; i < m; ++i) all[i] = i;
        for (std::size_t i = 0; i < grade; ++i) std::swap(all[i], all[static_cast<std::size_t>(integer(i, m - 1))]);
        all.resize(grade);
        t.add(all, polynomial(chart, max_degree, 2));
    }
    return t;
}

Form Random::form(const ChartPtr& chart, std::size_t grade, unsigned max_degree, unsigned max_terms)
{
    return tensor<TensorKind::Form>(chart, grade, max_degree, max_terms);
}

Multivector Random::multivector(const ChartPtr& chart, std::size_t grade, unsigned max_degree, unsigned max_terms)
{
    return tensor<TensorKind::Multivector>(chart, grade, max_degree, max_terms);
}

} // namespace npoisson
