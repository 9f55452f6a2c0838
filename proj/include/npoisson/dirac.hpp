#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "npoisson/exterior.hpp"
#include "npoisson/poly_matrix.hpp"
#include "npoisson/rational_expr.hpp"

namespace npoisson {

/// Constraints theta_1..theta_2k on a symplectic chart, with the bracket
/// matrix C_ij = {theta_i, theta_j}, its determinant and adjugate cached.
class ConstraintSet {
public:
    ConstraintSet(SymplecticData symplectic, std::vector<Polynomial> thetas);

    const SymplecticData& symplectic() const noexcept { return s_; }
    const ChartPtr& chart() const noexcept { return s_.chart(); }
    const std::vector<Polynomial>& constraints() const noexcept { return thetas_; }
    std::size_t half_count() const noexcept { return thetas_.size() / 2; }
    const PolyMatrix& matrix() const noexcept { return c_; }
    const PolyMatrix& adjugate() const noexcept { return adj_; }
    const Polynomial& determinant() const noexcept { return det_; }
    /// d theta_1 ^ ... ^ d theta_2k
    const Form& differentials() const noexcept { return dthetas_; }

private:
    SymplecticData s_;
    std::vector<Polynomial> thetas_;
    PolyMatrix c_;
    PolyMatrix adj_;
    Polynomial det_;
    Form dthetas_;
};

/// d theta_1 ^ ... ^ d theta_2k != 0 and det C != 0, symbolically.
bool regularity_check(const ConstraintSet& cs);

/// {f,g} - {f,theta_i} c_ij {theta_j,g} with c = adj(C)/det C.
RationalExpr dirac_bracket_matrix(const ConstraintSet& cs, const Polynomial& f, const Polynomial& g);

/// Raw quotient q in
///   df ^ dg ^ dtheta ^ w^{n-k-1} = q dtheta ^ w^{n-k},
/// where dtheta = dtheta_1 ^ ... ^ dtheta_2k. Requires k < n.
RationalExpr dirac_form_quotient(const ConstraintSet& cs, const Polynomial& f, const Polynomial& g);

/// The constant c with form quotient = c * matrix bracket, measured on a
/// reference pair.
struct DiracNormalization {
    Rational c_norm;
    Polynomial reference_f;
    Polynomial reference_g;
};

/// Searches pairs of monomials of degree <= 2 in grlex order for the first
/// pair with nonzero matrix bracket and measures c on it. Throws DomainError
/// if none exists and ConsistencyError if the quotient is not constant.
DiracNormalization calibrate_normalization(const ConstraintSet& cs);

/// dirac_form_quotient / c_norm.
RationalExpr dirac_bracket_form(const ConstraintSet& cs, const DiracNormalization& norm, const Polynomial& f,
                                const Polynomial& g);

} // namespace npoisson
