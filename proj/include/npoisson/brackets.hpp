#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "npoisson/exp_poly.hpp"
#include "npoisson/exterior.hpp"
#include "npoisson/rational_expr.hpp"

namespace npoisson {

/// k-bracket defined by a volume W and an (m-k)-form a through
///   {f_1, ..., f_k} W = df_1 ^ ... ^ df_k ^ a.
/// When W has a constant coefficient the generating k-vector L with i_L W = a
/// is computed once, and every evaluation is done both by pairing with L and
/// by dividing top-form coefficients.
class BracketDef {
public:
    BracketDef(Form volume, Form alpha);

    const Form& volume() const noexcept { return volume_; }
    const Form& alpha() const noexcept { return alpha_; }
    const ChartPtr& chart() const noexcept { return volume_.chart(); }
    std::size_t arity() const noexcept { return arity_; }
    /// Present iff the volume coefficient is constant.
    const std::optional<Multivector>& generator() const noexcept { return generator_; }

    /// <df_1 ^ ... ^ df_k, L>; requires a generator.
    Polynomial via_pairing(std::span<const Polynomial> fs) const;
    /// (df_1 ^ ... ^ df_k ^ a) / W as a quotient of top coefficients.
    RationalExpr via_forms(std::span<const Polynomial> fs) const;

private:
    void check_arguments(std::span<const Polynomial> fs) const;

    Form volume_;
    Form alpha_;
    std::size_t arity_;
    std::optional<Multivector> generator_;
};

/// Evaluates both routes and throws ConsistencyError if they differ.
/// Requires a constant volume coefficient.
Polynomial bracket(const BracketDef& def, std::span<const Polynomial> fs);
/// Form route only; valid for any nowhere-zero volume coefficient.
RationalExpr bracket_rational(const BracketDef& def, std::span<const Polynomial> fs);

/// L^k for the Poisson bivector L of S.
Multivector omega_power_generator(const SymplecticData& s, unsigned k);

/// Volume w^n/n! and form k! w^{n-k}/(n-k)!.
BracketDef omega_power_definition(const SymplecticData& s, unsigned k);

/// The 2k-bracket {f_1, ..., f_2k} w^n/n! = k! df_1 ^ ... ^ df_2k ^ w^{n-k}/(n-k)!,
/// cross-checked against the pairing with L^k.
Polynomial omega_power_bracket(const SymplecticData& s, unsigned k, std::span<const Polynomial> fs);

/// Ordinary Poisson bracket {f, g} = L(f, g) of S.
Polynomial poisson_bracket(const SymplecticData& s, const Polynomial& f, const Polynomial& g);

/// {f_1, ..., f_m} W = gamma df_1 ^ ... ^ df_m for a constant-coefficient volume W.
/// Also computed as gamma det(df_i/dx_j) / coeff(W); the two must agree.
Polynomial nambu_top_bracket(const Form& volume, const Polynomial& gamma, std::span<const Polynomial> fs);

/// X_f with i_{X_f} w = -df, so that X_f(g) = {f, g}.
Multivector hamiltonian_vf(const SymplecticData& s, const Polynomial& f);

/// Vector field g -> {f_1, ..., f_{2k-1}, g} / k!, free slot last.
///
/// The 1/k! makes it the bracket generated by L^k / k!, the normalization in
/// which X_{f1,f2,f3} = {f1,f2} X_f3 + {f2,f3} X_f1 + {f3,f1} X_f2 holds; for
/// k = 1 it is the Hamiltonian vector field.
Multivector derived_vf(const SymplecticData& s, unsigned k, std::span<const Polynomial> fs);

/// A bivector and a vector field with the structure-check outcome attached.
class JacobiDef {
public:
    JacobiDef(Multivector lambda, Multivector field);

    const Multivector& bivector() const noexcept { return lambda_; }
    const Multivector& field() const noexcept { return field_; }
    const ChartPtr& chart() const noexcept { return lambda_.chart(); }
    /// Outcome of jacobi_pair_check, computed at construction.
    bool is_jacobi() const noexcept { return is_jacobi_; }

private:
    Multivector lambda_;
    Multivector field_;
    bool is_jacobi_;
};

/// {f, g} = L(f, g) + f X(g) - g X(f)
Polynomial jacobi_bracket(const JacobiDef& def, const Polynomial& f, const Polynomial& g);

/// e^{-2s} (L + d/ds ^ X)(e^s f, e^s g) on M x R, with s appended to the chart
/// (or taken from it, if present, in which case nothing may depend on s).
ExpPoly homogenized_bracket(const JacobiDef& def, const Polynomial& f, const Polynomial& g,
                            std::string_view s_name = "s");

/// homogenized_bracket == jacobi_bracket, exactly.
bool homogenization_check(const JacobiDef& def, const Polynomial& f, const Polynomial& g,
                          std::string_view s_name = "s");

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} for any binary bracket.
template <typename Bracket>
    requires std::invocable<Bracket&, const Polynomial&, const Polynomial&>
Polynomial jacobiator(Bracket&& br, const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g));
}

Polynomial jacobiator(const SymplecticData& s, const Polynomial& f, const Polynomial& g, const Polynomial& h);
Polynomial jacobiator(const BracketDef& def, const Polynomial& f, const Polynomial& g, const Polynomial& h);
Polynomial jacobiator(const JacobiDef& def, const Polynomial& f, const Polynomial& g, const Polynomial& h);

/// Coordinate functions x_0..x_{m-1} of a chart.
std::vector<Polynomial> coordinate_functions(const ChartPtr& chart);

} // namespace npoisson
