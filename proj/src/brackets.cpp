#include "npoisson/brackets.hpp"

#include "npoisson/error.hpp"
#include "npoisson/poly_matrix.hpp"
#include "npoisson/schouten.hpp"

namespace npoisson {

namespace {

mpz_class factorial(std::size_t n)
{
    mpz_class r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

void ensure_pairing_convention()
{
    static const bool checked = [] {
        verify_pairing_convention();
        return true;
    }();
    (void)checked;
}

} // namespace

std::vector<Polynomial> coordinate_functions(const ChartPtr& chart)
{
    std::vector<Polynomial> xs;
    for (std::size_t i = 0; i < chart->dimension(); ++i) xs.push_back(Polynomial::variable(chart, i));
    return xs;
}

BracketDef::BracketDef(Form volume, Form alpha) : volume_(std::move(volume)), alpha_(std::move(alpha))
{
    ensure_pairing_convention();
    require_same_chart(volume_.chart(), alpha_.chart());
    const std::size_t m = chart()->dimension();
    if (volume_.grade() != m) throw DomainError("bracket volume must be a top-grade form");
    Polynomial c = top_coefficient(volume_);
    if (c.is_zero()) throw DomainError("bracket volume is zero");
    if (alpha_.grade() > m) throw DomainError("bracket form grade exceeds chart dimension");
    arity_ = m - alpha_.grade();
    if (c.as_constant()) generator_ = mv_from_form(volume_, alpha_);
}

void BracketDef::check_arguments(std::span<const Polynomial> fs) const
{
    if (fs.size() != arity_)
        throw DomainError("bracket expects " + std::to_string(arity_) + " arguments, got " + std::to_string(fs.size()));
    for (const auto& f : fs) require_same_chart(chart(), f.chart());
}

Polynomial BracketDef::via_pairing(std::span<const Polynomial> fs) const
{
    check_arguments(fs);
    if (!generator_) throw DomainError("bracket volume has a non-constant coefficient; no generator");
    return pair(differential_wedge(fs, chart()), *generator_);
}

RationalExpr BracketDef::via_forms(std::span<const Polynomial> fs) const
{
    check_arguments(fs);
    Form top = wedge(differential_wedge(fs, chart()), alpha_);
    return RationalExpr(top_coefficient(top), top_coefficient(volume_)).simplified();
}

Polynomial bracket(const BracketDef& def, std::span<const Polynomial> fs)
{
    Polynomial paired = def.via_pairing(fs);
    if (RationalExpr(paired) != def.via_forms(fs))
        throw ConsistencyError("pairing and form-division brackets disagree");
    return paired;
}

RationalExpr bracket_rational(const BracketDef& def, std::span<const Polynomial> fs)
{
    return def.via_forms(fs);
}

Multivector omega_power_generator(const SymplecticData& s, unsigned k)
{
    return wedge_power(s.bivector(), k);
}

BracketDef omega_power_definition(const SymplecticData& s, unsigned k)
{
    const std::size_t n = s.half_dimension();
    if (k < 1 || k > n) throw DomainError("power k must satisfy 1 <= k <= n");
    Form alpha = form_power(s.omega(), static_cast<unsigned>(n - k)).scaled(Rational(factorial(k), factorial(n - k)));
    return BracketDef(s.liouville_volume(), std::move(alpha));
}

Polynomial omega_power_bracket(const SymplecticData& s, unsigned k, std::span<const Polynomial> fs)
{
    const std::size_t n = s.half_dimension();
    if (k < 1 || k > n) throw DomainError("power k must satisfy 1 <= k <= n");
    if (fs.size() != 2 * k) throw DomainError("omega-power bracket expects " + std::to_string(2 * k) + " arguments");
    for (const auto& f : fs) require_same_chart(s.chart(), f.chart());
    Polynomial by_generator = pair(differential_wedge(fs, s.chart()), omega_power_generator(s, k));
    BracketDef def = omega_power_definition(s, k);
    if (RationalExpr(by_generator) != def.via_forms(fs))
        throw ConsistencyError("omega-power bracket: generator and form definitions disagree");
    return by_generator;
}

Polynomial poisson_bracket(const SymplecticData& s, const Polynomial& f, const Polynomial& g)
{
    const Polynomial args[] = {f, g};
    return apply_multivector(s.bivector(), args);
}

Polynomial nambu_top_bracket(const Form& volume, const Polynomial& gamma, std::span<const Polynomial> fs)
{
    const ChartPtr& chart = volume.chart();
    const std::size_t m = chart->dimension();
    if (volume.grade() != m) throw DomainError("Nambu bracket needs a top-grade volume");
    if (fs.size() != m) throw DomainError("Nambu bracket expects " + std::to_string(m) + " arguments");
    require_same_chart(chart, gamma.chart());
    auto c = top_coefficient(volume).as_constant();
    if (!c || *c == 0) throw DomainError("Nambu bracket needs a nonzero constant volume coefficient");
    Rational inv = 1 / *c;

    Polynomial by_forms = gamma * top_coefficient(differential_wedge(fs, chart)) * inv;

    PolyMatrix jacobian(m, std::vector<Polynomial>(m, Polynomial(chart)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) jacobian[i][j] = partial_derivative(fs[i], j);
    Polynomial by_determinant = gamma * determinant(jacobian) * inv;

    if (by_forms != by_determinant) throw ConsistencyError("Nambu bracket: wedge and determinant disagree");
    return by_forms;
}

Multivector hamiltonian_vf(const SymplecticData& s, const Polynomial& f)
{
    require_same_chart(s.chart(), f.chart());
    Multivector x(s.chart(), 1);
    auto coords = coordinate_functions(s.chart());
    for (std::size_t j = 0; j < coords.size(); ++j) x.add({j}, poisson_bracket(s, f, coords[j]));
    return x;
}

Multivector derived_vf(const SymplecticData& s, unsigned k, std::span<const Polynomial> fs)
{
    const std::size_t n = s.half_dimension();
    if (k < 1 || k > n) throw DomainError("power k must satisfy 1 <= k <= n");
    if (fs.size() != 2 * k - 1)
        throw DomainError("derived vector field expects " + std::to_string(2 * k - 1) + " functions");
    const Multivector generator = omega_power_generator(s, k);
    const Rational scale(1, factorial(k));
    auto coords = coordinate_functions(s.chart());
    const Form partial = differential_wedge(fs, s.chart());
    Multivector x(s.chart(), 1);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        Polynomial value = pair(wedge(partial, differential(coords[j])), generator);
        x.add({j}, value * scale);
    }
    return x;
}

JacobiDef::JacobiDef(Multivector lambda, Multivector field)
    : lambda_(std::move(lambda)), field_(std::move(field)), is_jacobi_(jacobi_pair_check(lambda_, field_))
{
}

Polynomial jacobi_bracket(const JacobiDef& def, const Polynomial& f, const Polynomial& g)
{
    require_same_chart(def.chart(), f.chart());
    require_same_chart(def.chart(), g.chart());
    const Polynomial args[] = {f, g};
    return apply_multivector(def.bivector(), args) + f * apply_vector_field(def.field(), g) -
           g * apply_vector_field(def.field(), f);
}

namespace {

/// P(F, G) for a bivector P with polynomial coefficients and ExpPoly arguments.
ExpPoly apply_bivector(const Multivector& p, const ExpPoly& f, const ExpPoly& g)
{
    ExpPoly r(p.chart(), p.chart()->name(f.exp_index()));
    for (const auto& [t, c] : p.terms()) {
        ExpPoly term = partial_derivative(f, t[0]) * partial_derivative(g, t[1]) -
                       partial_derivative(f, t[1]) * partial_derivative(g, t[0]);
        r += term * c;
    }
    return r;
}

} // namespace

ExpPoly homogenized_bracket(const JacobiDef& def, const Polynomial& f, const Polynomial& g, std::string_view s_name)
{
    require_same_chart(def.chart(), f.chart());
    require_same_chart(def.chart(), g.chart());
    ChartPtr ext = def.chart();
    if (auto si = ext->find(s_name)) {
        auto depends = [&](const auto& t) {
            for (const auto& [tuple, c] : t.terms())
                if (!c.independent_of(*si)) return true;
            return false;
        };
        if (depends(def.bivector()) || depends(def.field()) || !f.independent_of(*si) || !g.independent_of(*si))
            throw DomainError("homogenization requires data independent of '" + std::string(s_name) + "'");
        if (def.field().coefficient({*si}) != Polynomial(ext) || [&] {
                for (const auto& [t, c] : def.bivector().terms())
                    if (t[0] == *si || t[1] == *si) return true;
                return false;
            }())
            throw DomainError("homogenization requires L and X without d/d" + std::string(s_name) + " components");
    } else {
        ext = extend_chart(ext, std::string(s_name));
    }
    const std::size_t s_index = ext->index_of(s_name);

    Multivector lambda = def.bivector().embed(ext);
    Multivector field = def.field().embed(ext);
    Multivector total = lambda + wedge(Multivector::basis(ext, s_index), field);

    ExpPoly es = ExpPoly::exponential(ext, s_name, 1);
    ExpPoly tf = es * f.embed(ext);
    ExpPoly tg = es * g.embed(ext);
    return ExpPoly::exponential(ext, s_name, -2) * apply_bivector(total, tf, tg);
}

bool homogenization_check(const JacobiDef& def, const Polynomial& f, const Polynomial& g, std::string_view s_name)
{
    ExpPoly lhs = homogenized_bracket(def, f, g, s_name);
    ExpPoly rhs(jacobi_bracket(def, f, g).embed(lhs.chart()), s_name);
    return lhs == rhs;
}

Polynomial jacobiator(const SymplecticData& s, const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    return jacobiator([&](const Polynomial& a, const Polynomial& b) { return poisson_bracket(s, a, b); }, f, g, h);
}

Polynomial jacobiator(const BracketDef& def, const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    if (def.arity() != 2) throw DomainError("jacobiator needs a binary bracket");
    return jacobiator(
        [&](const Polynomial& a, const Polynomial& b) {
            const Polynomial args[] = {a, b};
            return bracket(def, args);
        },
        f, g, h);
}

Polynomial jacobiator(const JacobiDef& def, const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    return jacobiator([&](const Polynomial& a, const Polynomial& b) { return jacobi_bracket(def, a, b); }, f, g, h);
}

} // namespace npoisson
