#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "npoisson/poly_matrix.hpp"
#include "npoisson/polynomial.hpp"

namespace npoisson {

/// Strictly increasing list of coordinate indices.
using IndexTuple = std::vector<std::size_t>;

enum class TensorKind { Form, Multivector };

/// Homogeneous antisymmetric tensor field with polynomial coefficients:
/// a differential form (covariant) or a multivector field (contravariant).
///
/// Terms are keyed by strictly increasing index tuples; add() accepts any
/// ordering and folds the permutation parity into the coefficient.
template <TensorKind Kind>
class GradedTensor {
public:
    using TermMap = std::map<IndexTuple, Polynomial>;

    GradedTensor(ChartPtr chart, std::size_t grade);
    /// Grade-0 tensor equal to the given function.
    explicit GradedTensor(const Polynomial& scalar);

    /// dx_i for forms, d/dx_i for multivectors.
    static GradedTensor basis(const ChartPtr& chart, std::size_t index);

    const ChartPtr& chart() const noexcept { return chart_; }
    std::size_t grade() const noexcept { return grade_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient on a strictly increasing tuple, zero when absent.
    Polynomial coefficient(const IndexTuple& tuple) const;
    /// The function a grade-0 tensor represents.
    Polynomial scalar() const;

    void add(IndexTuple tuple, const Polynomial& coefficient);

    GradedTensor& operator+=(const GradedTensor& other);
    GradedTensor& operator-=(const GradedTensor& other);
    friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
    friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
    GradedTensor operator-() const;

    friend GradedTensor operator*(const Polynomial& f, const GradedTensor& t) { return t.scaled(f); }
    friend GradedTensor operator*(const GradedTensor& t, const Polynomial& f) { return t.scaled(f); }
    friend GradedTensor operator*(const Rational& r, const GradedTensor& t) { return t.scaled(r); }

    GradedTensor scaled(const Polynomial& f) const;
    GradedTensor scaled(const Rational& r) const;

    GradedTensor embed(const ChartPtr& target) const;

    friend bool operator==(const GradedTensor& a, const GradedTensor& b)
    {
        return same_chart(a.chart_, b.chart_) && a.grade_ == b.grade_ && a.terms_ == b.terms_;
    }

    /// e.g. "(q1 + 1)*d(q1)^d(p1) - 2*d(q2)^d(p2)"; grade-0 tensors print as plain expressions.
    std::string to_string() const;

private:
    ChartPtr chart_;
    std::size_t grade_;
    TermMap terms_;
};

using Form = GradedTensor<TensorKind::Form>;
using Multivector = GradedTensor<TensorKind::Multivector>;

extern template class GradedTensor<TensorKind::Form>;
extern template class GradedTensor<TensorKind::Multivector>;

/// Sign of the permutation sorting `tuple`, or 0 if an index repeats.
int sort_with_parity(IndexTuple& tuple);

template <TensorKind Kind>
GradedTensor<Kind> wedge(const GradedTensor<Kind>& a, const GradedTensor<Kind>& b);

/// k-fold wedge power; k = 0 gives the constant 1.
template <TensorKind Kind>
GradedTensor<Kind> wedge_power(const GradedTensor<Kind>& a, unsigned k);

/// Product of the given tensors in order, or the constant 1 for an empty list.
template <TensorKind Kind>
GradedTensor<Kind> wedge_all(std::span<const GradedTensor<Kind>> factors, const ChartPtr& chart);

Form form_power(const Form& omega, unsigned k);

Form differential(const Polynomial& f);
Form exterior_derivative(const Form& a);

/// df_1 ^ ... ^ df_k
Form differential_wedge(std::span<const Polynomial> fs, const ChartPtr& chart);

/// Interior product. For a decomposable X_1^...^X_j the contraction inserts
/// X_1 first, then X_2, and so on; i_{d/dp ^ d/dq}(dp^dq) = +1.
Form contract(const Multivector& lambda, const Form& a);

/// Full pairing of equal grades. With the contraction convention above this is
/// the diagonal pairing <dx_I, d/dx_J> = delta_IJ, the unique choice making
/// <df_1^...^df_k, L> W = df_1^...^df_k ^ (i_L W) hold for every volume W.
Polynomial pair(const Form& a, const Multivector& lambda);

/// Checks <df_1^..^df_k, L> W = df_1^..^df_k ^ (i_L W) on a fixed 4-dimensional
/// reference chart for every grade; throws ConsistencyError on failure.
void verify_pairing_convention();

/// L(f_1, ..., f_k) = <df_1^...^df_k, L>.
Polynomial apply_multivector(const Multivector& lambda, std::span<const Polynomial> fs);

/// Lie derivative via Cartan's formula i_X d + d i_X.
Form lie_derivative(const Multivector& field, const Form& a);

/// Coefficient of dx_1^...^dx_m of a top-grade form.
Polynomial top_coefficient(const Form& top);

/// The unique L with contract(L, volume) = a. The volume must be a top form
/// with a nonzero constant coefficient.
Multivector mv_from_form(const Form& volume, const Form& a);

/// Antisymmetric coefficient matrix W with w = sum_{i<j} W_ij dx_i ^ dx_j.
PolyMatrix coefficient_matrix(const Form& two_form);

/// Inverse bivector of a nondegenerate 2-form: L(f, g) = L^{ij} f_i g_j with
/// L = -W^{-1}, so sum dp_j^dq_j maps to sum d/dp_j ^ d/dq_j and i_{X_f} w = -df
/// for X_f = L(df, .).
Multivector poisson_bivector(const Form& omega);

/// A nondegenerate 2-form with constant coefficient determinant on an even
/// chart, together with its Poisson bivector. Closedness is recorded rather
/// than required so non-closed magnetic-type forms can be studied.
class SymplecticData {
public:
    explicit SymplecticData(Form omega);

    /// Standard form sum_j dp_j ^ dq_j on a Darboux chart (q1..qn, p1..pn).
    static SymplecticData darboux(std::size_t n);
    static Form darboux_form(const ChartPtr& chart, std::size_t n);

    const ChartPtr& chart() const noexcept { return omega_.chart(); }
    const Form& omega() const noexcept { return omega_; }
    const Multivector& bivector() const noexcept { return lambda_; }
    std::size_t half_dimension() const noexcept { return n_; }
    bool is_closed() const noexcept { return closed_; }

    /// w^n / n!
    Form liouville_volume() const;

private:
    Form omega_;
    Multivector lambda_;
    std::size_t n_;
    bool closed_;
};

/// Requires dw = 0 in addition to the SymplecticData invariants.
SymplecticData make_symplectic(Form omega);

/// X(f) = sum X^i df/dx_i
Polynomial apply_vector_field(const Multivector& field, const Polynomial& f);

} // namespace npoisson
