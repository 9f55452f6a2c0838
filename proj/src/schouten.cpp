#include "npoisson/schouten.hpp"

#include "npoisson/error.hpp"

namespace npoisson {

namespace {

IndexTuple without(const IndexTuple& t, std::size_t position)
{
    IndexTuple r;
    r.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != position) r.push_back(t[k]);
    return r;
}

IndexTuple concat(std::initializer_list<std::size_t> head, const IndexTuple& a, const IndexTuple& b)
{
    IndexTuple r(head);
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// [a d_I, b] for a function b: sum_i (-1)^{p-i} a (d_{I_i} b) d_{I without I_i}
void bracket_with_function(const IndexTuple& ti, const Polynomial& a, const Polynomial& b, Multivector& out)
{
    const std::size_t p = ti.size();
    for (std::size_t i = 0; i < p; ++i) {
        Polynomial c = a * partial_derivative(b, ti[i]);
        // 1-based exponent p - (i + 1)
        out.add(without(ti, i), (p - 1 - i) % 2 == 0 ? c : -c);
    }
}

/// Bracket of the monomial fields a d_I and b d_J with |I|, |J| >= 1, written
/// as (a d_{I0}) ^ d_{I1} ^ ... and (b d_{J0}) ^ d_{J1} ^ ...
void bracket_terms(const IndexTuple& ti, const Polynomial& a, const IndexTuple& tj, const Polynomial& b,
                   Multivector& out)
{
    const IndexTuple i_rest = without(ti, 0);
    const IndexTuple j_rest = without(tj, 0);
    for (std::size_t i = 0; i < ti.size(); ++i) {
        for (std::size_t j = 0; j < tj.size(); ++j) {
            const bool negative = (i + j) % 2 != 0;
            auto put = [&](IndexTuple t, const Polynomial& c) { out.add(std::move(t), negative ? -c : c); };
            if (i == 0 && j == 0) {
                // [a d_I0, b d_J0] = a (d_I0 b) d_J0 - b (d_J0 a) d_I0
                put(concat({tj[0]}, i_rest, j_rest), a * partial_derivative(b, ti[0]));
                put(concat({ti[0]}, i_rest, j_rest), -(b * partial_derivative(a, tj[0])));
            } else if (i == 0) {
                // [a d_I0, d_Jj] = -(d_Jj a) d_I0, remaining Y factors carry b
                put(concat({ti[0]}, i_rest, without(tj, j)), -(b * partial_derivative(a, tj[j])));
            } else if (j == 0) {
                // [d_Ii, b d_J0] = (d_Ii b) d_J0, remaining X factors carry a
                put(concat({tj[0]}, without(ti, i), j_rest), a * partial_derivative(b, ti[i]));
            }
        }
    }
}

} // namespace

Multivector schouten(const Multivector& a, const Multivector& b)
{
    require_same_chart(a.chart(), b.chart());
    const std::size_t p = a.grade();
    const std::size_t q = b.grade();
    if (p == 0 && q == 0) return Multivector(a.chart(), 0);
    Multivector out(a.chart(), p + q - 1);
    if (q == 0) {
        for (const auto& [ti, ca] : a.terms()) bracket_with_function(ti, ca, b.scalar(), out);
        return out;
    }
    if (p == 0) {
        // [f, B] = -(-1)^{(0-1)(q-1)} [B, f] = (-1)^q [B, f]
        for (const auto& [tj, cb] : b.terms()) bracket_with_function(tj, cb, a.scalar(), out);
        return q % 2 == 0 ? out : -out;
    }
    for (const auto& [ti, ca] : a.terms())
        for (const auto& [tj, cb] : b.terms()) bracket_terms(ti, ca, tj, cb, out);
    return out;
}

bool is_poisson(const Multivector& lambda)
{
    if (lambda.grade() != 2) throw DomainError("is_poisson expects a bivector");
    return schouten(lambda, lambda).is_zero();
}

bool is_n_poisson(const Multivector& lambda)
{
    if (lambda.grade() % 2 != 0) throw DomainError("is_n_poisson expects an even-grade multivector");
    return schouten(lambda, lambda).is_zero();
}

namespace {

void require_volume(const Form& volume)
{
    if (volume.grade() != volume.chart()->dimension()) throw DomainError("expected a top-grade volume form");
    if (volume.is_zero()) throw DomainError("volume form is zero");
}

void require_bivector(const Multivector& m)
{
    if (m.grade() != 2) throw DomainError("expected a bivector");
}

} // namespace

bool volume_poisson_criterion(const Multivector& lambda, const Form& volume)
{
    require_bivector(lambda);
    require_volume(volume);
    Form lhs = exterior_derivative(contract(wedge(lambda, lambda), volume));
    Form rhs = contract(lambda, exterior_derivative(contract(lambda, volume))).scaled(Rational(2));
    return lhs == rhs;
}

Form volume_identity_rhs(const Multivector& lambda1, const Multivector& lambda2, const Form& volume)
{
    require_bivector(lambda1);
    require_bivector(lambda2);
    require_volume(volume);
    Form dvol = exterior_derivative(volume);
    Form r = -contract(lambda1, contract(lambda2, dvol));
    r -= exterior_derivative(contract(wedge(lambda2, lambda1), volume));
    r += contract(lambda1, exterior_derivative(contract(lambda2, volume)));
    r += contract(lambda2, exterior_derivative(contract(lambda1, volume)));
    return r;
}

Form volume_identity_lhs(const Multivector& lambda1, const Multivector& lambda2, const Form& volume)
{
    require_bivector(lambda1);
    require_bivector(lambda2);
    require_volume(volume);
    return contract(-schouten(lambda1, lambda2), volume);
}

bool schouten_volume_identity_check(const Multivector& lambda1, const Multivector& lambda2, const Form& volume)
{
    return volume_identity_lhs(lambda1, lambda2, volume) == volume_identity_rhs(lambda1, lambda2, volume);
}

bool jacobi_pair_check(const Multivector& lambda, const Multivector& field)
{
    require_bivector(lambda);
    if (field.grade() != 1) throw DomainError("jacobi_pair_check expects a vector field");
    require_same_chart(lambda.chart(), field.chart());
    if (!schouten(field, lambda).is_zero()) return false;
    // [L, L]' = 2 X ^ L in the opposite-sign bivector convention, i.e. [L, L] = -2 X ^ L here
    return schouten(lambda, lambda) == wedge(field, lambda).scaled(Rational(-2));
}

} // namespace npoisson
