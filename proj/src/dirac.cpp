#include "npoisson/dirac.hpp"

#include "npoisson/brackets.hpp"
#include "npoisson/error.hpp"

namespace npoisson {

namespace {

void require_regular(const ConstraintSet& cs)
{
    if (!regularity_check(cs)) throw DomainError("constraints are not regular (det C = 0 or d theta wedge vanishes)");
}

} // namespace

ConstraintSet::ConstraintSet(SymplecticData symplectic, std::vector<Polynomial> thetas)
    : s_(std::move(symplectic)), thetas_(std::move(thetas)), det_(s_.chart()), dthetas_(s_.chart(), 0)
{
    if (thetas_.empty() || thetas_.size() % 2 != 0)
        throw DomainError("constraint count must be even and at least 2, got " + std::to_string(thetas_.size()));
    for (const auto& t : thetas_) require_same_chart(chart(), t.chart());
    const std::size_t r = thetas_.size();
    c_.assign(r, std::vector<Polynomial>(r, Polynomial(chart())));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            c_[i][j] = poisson_bracket(s_, thetas_[i], thetas_[j]);
            c_[j][i] = -c_[i][j];
        }
    det_ = npoisson::determinant(c_);
    adj_ = npoisson::adjugate(c_);
    dthetas_ = differential_wedge(thetas_, chart());
}

bool regularity_check(const ConstraintSet& cs)
{
    return !cs.differentials().is_zero() && !cs.determinant().is_zero();
}

RationalExpr dirac_bracket_matrix(const ConstraintSet& cs, const Polynomial& f, const Polynomial& g)
{
    require_same_chart(cs.chart(), f.chart());
    require_same_chart(cs.chart(), g.chart());
    require_regular(cs);
    const auto& s = cs.symplectic();
    const auto& th = cs.constraints();
    const auto& adj = cs.adjugate();
    std::vector<Polynomial> f_theta, theta_g;
    for (const auto& t : th) {
        f_theta.push_back(poisson_bracket(s, f, t));
        theta_g.push_back(poisson_bracket(s, t, g));
    }
    Polynomial numerator = poisson_bracket(s, f, g) * cs.determinant();
    for (std::size_t i = 0; i < th.size(); ++i) {
        if (f_theta[i].is_zero()) continue;
        for (std::size_t j = 0; j < th.size(); ++j) numerator -= f_theta[i] * adj[i][j] * theta_g[j];
    }
    return RationalExpr(numerator, cs.determinant()).simplified();
}

RationalExpr dirac_form_quotient(const ConstraintSet& cs, const Polynomial& f, const Polynomial& g)
{
    require_same_chart(cs.chart(), f.chart());
    require_same_chart(cs.chart(), g.chart());
    require_regular(cs);
    const auto& s = cs.symplectic();
    const std::size_t n = s.half_dimension();
    const std::size_t k = cs.half_count();
    if (k >= n) throw DomainError("form-defined Dirac bracket needs k < n (k = " + std::to_string(k) +
                                  ", n = " + std::to_string(n) + ")");
    const Form low = wedge(cs.differentials(), form_power(s.omega(), static_cast<unsigned>(n - k - 1)));
    const Form reference = wedge(low, s.omega());
    if (reference.is_zero()) throw DomainError("reference form dtheta ^ w^(n-k) vanishes");
    const Form lhs = wedge(wedge(differential(f), differential(g)), low);
    return RationalExpr(top_coefficient(lhs), top_coefficient(reference)).simplified();
}

DiracNormalization calibrate_normalization(const ConstraintSet& cs)
{
    const auto monomials = monomials_up_to(cs.chart(), 2);
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        for (std::size_t j = i + 1; j < monomials.size(); ++j) {
            const RationalExpr matrix = dirac_bracket_matrix(cs, monomials[i], monomials[j]);
            if (matrix.is_zero()) continue;
            const RationalExpr ratio = dirac_form_quotient(cs, monomials[i], monomials[j]) / matrix;
            const auto c = ratio.as_constant();
            if (!c) throw ConsistencyError("form and matrix Dirac brackets are not proportional by a constant on (" +
                                           monomials[i].to_string() + ", " + monomials[j].to_string() + ")");
            if (*c == 0) throw ConsistencyError("form-defined Dirac bracket vanishes where the matrix bracket does not");
            return DiracNormalization{*c, monomials[i], monomials[j]};
        }
    }
    throw DomainError("no monomial pair of degree <= 2 has a nonzero Dirac bracket");
}

RationalExpr dirac_bracket_form(const ConstraintSet& cs, const DiracNormalization& norm, const Polynomial& f,
                                const Polynomial& g)
{
    const RationalExpr q = dirac_form_quotient(cs, f, g);
    return RationalExpr(q.numerator(), q.denominator() * norm.c_norm).simplified();
}

} // namespace npoisson
