#include "npoisson/exterior.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "npoisson/error.hpp"

namespace npoisson {

int sort_with_parity(IndexTuple& tuple)
{
    int sign = 1;
    // insertion sort; tuples are short
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j]) return 0;
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i - 1] == tuple[i]) return 0;
    return sign;
}

template <TensorKind Kind>
GradedTensor<Kind>::GradedTensor(ChartPtr chart, std::size_t grade) : chart_(std::move(chart)), grade_(grade)
{
    if (!chart_) throw DomainError("tensor requires a chart");
}

template <TensorKind Kind>
GradedTensor<Kind>::GradedTensor(const Polynomial& scalar) : GradedTensor(scalar.chart(), 0)
{
    add({}, scalar);
}

template <TensorKind Kind>
GradedTensor<Kind> GradedTensor<Kind>::basis(const ChartPtr& chart, std::size_t index)
{
    if (index >= chart->dimension()) throw DomainError("coordinate index out of range");
    GradedTensor t(chart, 1);
    t.add({index}, Polynomial(chart, Rational(1)));
    return t;
}

template <TensorKind Kind>
Polynomial GradedTensor<Kind>::coefficient(const IndexTuple& tuple) const
{
    auto it = terms_.find(tuple);
    return it == terms_.end() ? Polynomial(chart_) : it->second;
}

template <TensorKind Kind>
Polynomial GradedTensor<Kind>::scalar() const
{
    if (grade_ != 0) throw DomainError("tensor of grade " + std::to_string(grade_) + " is not a function");
    return coefficient({});
}

template <TensorKind Kind>
void GradedTensor<Kind>::add(IndexTuple tuple, const Polynomial& coefficient)
{
    require_same_chart(chart_, coefficient.chart());
    if (tuple.size() != grade_) throw DomainError("index tuple length differs from tensor grade");
    for (auto i : tuple)
        if (i >= chart_->dimension()) throw DomainError("coordinate index out of range");
    int sign = sort_with_parity(tuple);
    if (sign == 0 || coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(tuple, sign > 0 ? coefficient : -coefficient);
    if (!inserted) {
        if (sign > 0)
            it->second += coefficient;
        else
            it->second -= coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <TensorKind Kind>
GradedTensor<Kind>& GradedTensor<Kind>::operator+=(const GradedTensor& other)
{
    require_same_chart(chart_, other.chart_);
    if (grade_ != other.grade_) throw DomainError("cannot add tensors of different grades");
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

template <TensorKind Kind>
GradedTensor<Kind>& GradedTensor<Kind>::operator-=(const GradedTensor& other)
{
    require_same_chart(chart_, other.chart_);
    if (grade_ != other.grade_) throw DomainError("cannot subtract tensors of different grades");
    for (const auto& [t, c] : other.terms_) add(t, -c);
    return *this;
}

template <TensorKind Kind>
GradedTensor<Kind> GradedTensor<Kind>::operator-() const
{
    GradedTensor r = *this;
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
}

template <TensorKind Kind>
GradedTensor<Kind> GradedTensor<Kind>::scaled(const Polynomial& f) const
{
    GradedTensor r(chart_, grade_);
    for (const auto& [t, c] : terms_) r.add(t, c * f);
    return r;
}

template <TensorKind Kind>
GradedTensor<Kind> GradedTensor<Kind>::scaled(const Rational& factor) const
{
    GradedTensor r(chart_, grade_);
    for (const auto& [t, c] : terms_) r.add(t, c * factor);
    return r;
}

template <TensorKind Kind>
GradedTensor<Kind> GradedTensor<Kind>::embed(const ChartPtr& target) const
{
    GradedTensor r(target, grade_);
    for (const auto& [t, c] : terms_) {
        IndexTuple mapped;
        for (auto i : t) mapped.push_back(target->index_of(chart_->name(i)));
        r.add(mapped, c.embed(target));
    }
    return r;
}

template <TensorKind Kind>
std::string GradedTensor<Kind>::to_string() const
{
    if (grade_ == 0) return scalar().to_string();
    if (terms_.empty()) return "0";
    const char* prefix = Kind == TensorKind::Form ? "d(" : "e(";
    std::string out;
    for (const auto& [tuple, c] : terms_) {
        std::string basis;
        for (auto i : tuple) {
            if (!basis.empty()) basis += '^';
            basis += prefix + chart_->name(i) + ")";
        }
        std::string body;
        if (c.terms().size() > 1) {
            body = "(" + c.to_string() + ")*" + basis;
        } else if (auto k = c.as_constant(); k && abs(*k) == 1) {
            body = (*k < 0 ? "-" : "") + basis;
        } else {
            body = c.to_string() + "*" + basis;
        }
        if (out.empty())
            out = body;
        else if (body[0] == '-')
            out += " - " + body.substr(1);
        else
            out += " + " + body;
    }
    return out;
}

template class GradedTensor<TensorKind::Form>;
template class GradedTensor<TensorKind::Multivector>;

template <TensorKind Kind>
GradedTensor<Kind> wedge(const GradedTensor<Kind>& a, const GradedTensor<Kind>& b)
{
    require_same_chart(a.chart(), b.chart());
    GradedTensor<Kind> r(a.chart(), a.grade() + b.grade());
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            IndexTuple merged = ta;
            merged.insert(merged.end(), tb.begin(), tb.end());
            if (merged.size() > a.chart()->dimension()) continue;
            r.add(std::move(merged), ca * cb);
        }
    }
    return r;
}

template <TensorKind Kind>
GradedTensor<Kind> wedge_power(const GradedTensor<Kind>& a, unsigned k)
{
    GradedTensor<Kind> r(Polynomial(a.chart(), Rational(1)));
    for (unsigned i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

template <TensorKind Kind>
GradedTensor<Kind> wedge_all(std::span<const GradedTensor<Kind>> factors, const ChartPtr& chart)
{
    GradedTensor<Kind> r(Polynomial(chart, Rational(1)));
    for (const auto& f : factors) r = wedge(r, f);
    return r;
}

template Form wedge(const Form&, const Form&);
template Multivector wedge(const Multivector&, const Multivector&);
template Form wedge_power(const Form&, unsigned);
template Multivector wedge_power(const Multivector&, unsigned);
template Form wedge_all(std::span<const Form>, const ChartPtr&);
template Multivector wedge_all(std::span<const Multivector>, const ChartPtr&);

Form form_power(const Form& omega, unsigned k)
{
    if (omega.grade() != 2) throw DomainError("form_power expects a 2-form");
    return wedge_power(omega, k);
}

Form differential(const Polynomial& f)
{
    Form r(f.chart(), 1);
    for (std::size_t i = 0; i < f.chart()->dimension(); ++i) r.add({i}, partial_derivative(f, i));
    return r;
}

Form exterior_derivative(const Form& a)
{
    Form r(a.chart(), a.grade() + 1);
    for (const auto& [tuple, c] : a.terms()) {
        for (std::size_t i = 0; i < a.chart()->dimension(); ++i) {
            IndexTuple t;
            t.reserve(tuple.size() + 1);
            t.push_back(i);
            t.insert(t.end(), tuple.begin(), tuple.end());
            r.add(std::move(t), partial_derivative(c, i));
        }
    }
    return r;
}

Form differential_wedge(std::span<const Polynomial> fs, const ChartPtr& chart)
{
    Form r(Polynomial(chart, Rational(1)));
    for (const auto& f : fs) r = wedge(r, differential(f));
    return r;
}

namespace {

/// Removes the indices of `inner` from `outer` one at a time, in order, and
/// returns the accumulated sign (-1)^{position}; 0 if some index is absent.
int remove_in_order(const IndexTuple& inner, IndexTuple& outer)
{
    int sign = 1;
    for (auto j : inner) {
        auto it = std::find(outer.begin(), outer.end(), j);
        if (it == outer.end()) return 0;
        if ((it - outer.begin()) % 2 != 0) sign = -sign;
        outer.erase(it);
    }
    return sign;
}

} // namespace

Form contract(const Multivector& lambda, const Form& a)
{
    require_same_chart(lambda.chart(), a.chart());
    if (lambda.grade() > a.grade())
        throw DomainError("cannot contract a grade-" + std::to_string(lambda.grade()) + " multivector into a grade-" +
                          std::to_string(a.grade()) + " form");
    Form r(a.chart(), a.grade() - lambda.grade());
    for (const auto& [tl, cl] : lambda.terms()) {
        for (const auto& [ta, ca] : a.terms()) {
            IndexTuple rest = ta;
            int sign = remove_in_order(tl, rest);
            if (sign == 0) continue;
            Polynomial c = cl * ca;
            r.add(std::move(rest), sign > 0 ? c : -c);
        }
    }
    return r;
}

Polynomial pair(const Form& a, const Multivector& lambda)
{
    require_same_chart(a.chart(), lambda.chart());
    if (a.grade() != lambda.grade()) throw DomainError("pairing requires equal grades");
    Polynomial r(a.chart());
    for (const auto& [t, c] : a.terms()) {
        auto it = lambda.terms().find(t);
        if (it != lambda.terms().end()) r += c * it->second;
    }
    return r;
}

void verify_pairing_convention()
{
    auto chart = make_chart({"a", "b", "c", "d"});
    auto x = [&](std::size_t i) { return Polynomial::variable(chart, i); };
    Form volume(chart, 4);
    volume.add({0, 1, 2, 3}, Polynomial(chart, Rational(3)));
    const std::vector<Polynomial> fs{x(0) * x(1) + x(2), x(3) * x(3) - x(0), x(1) + Polynomial(chart, Rational(2)),
                                     x(2) * x(3)};
    for (std::size_t k = 1; k <= 4; ++k) {
        Multivector lambda(chart, k);
        // every k-subset of the coordinates with a distinct coefficient
        for (unsigned mask = 0, n = 0; mask < 16u; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
            IndexTuple t;
            for (std::size_t i = 0; i < 4; ++i)
                if (mask & (1u << i)) t.push_back(i);
            ++n;
            lambda.add(t, x(n % 4) + Polynomial(chart, Rational(static_cast<long>(n))));
        }
        Form dfs = differential_wedge(std::span(fs).first(k), chart);
        if (volume.scaled(pair(dfs, lambda)) != wedge(dfs, contract(lambda, volume)))
            throw ConsistencyError("pairing and contraction conventions disagree at grade " + std::to_string(k));
    }
}

Polynomial apply_multivector(const Multivector& lambda, std::span<const Polynomial> fs)
{
    if (fs.size() != lambda.grade()) throw DomainError("multivector of grade " + std::to_string(lambda.grade()) +
                                                       " applied to " + std::to_string(fs.size()) + " functions");
    return pair(differential_wedge(fs, lambda.chart()), lambda);
}

Polynomial apply_vector_field(const Multivector& field, const Polynomial& f)
{
    require_same_chart(field.chart(), f.chart());
    if (field.grade() != 1) throw DomainError("expected a vector field");
    Polynomial r(f.chart());
    for (const auto& [t, c] : field.terms()) r += c * partial_derivative(f, t[0]);
    return r;
}

Form lie_derivative(const Multivector& field, const Form& a)
{
    if (field.grade() != 1) throw DomainError("Lie derivative expects a vector field");
    Form r = contract(field, exterior_derivative(a));
    if (a.grade() > 0) r += exterior_derivative(contract(field, a));
    return r;
}

Polynomial top_coefficient(const Form& top)
{
    const std::size_t m = top.chart()->dimension();
    if (top.grade() != m) throw DomainError("expected a top-grade form");
    IndexTuple full(m);
    std::iota(full.begin(), full.end(), 0);
    return top.coefficient(full);
}

Multivector mv_from_form(const Form& volume, const Form& a)
{
    require_same_chart(volume.chart(), a.chart());
    const std::size_t m = volume.chart()->dimension();
    if (volume.grade() != m) throw DomainError("volume must be a top-grade form");
    auto c = top_coefficient(volume).as_constant();
    if (!c || *c == 0) throw DomainError("volume coefficient must be a nonzero constant");
    if (a.grade() > m) throw DomainError("form grade exceeds chart dimension");
    IndexTuple full(m);
    std::iota(full.begin(), full.end(), 0);
    Multivector r(a.chart(), m - a.grade());
    for (const auto& [tk, coeff] : a.terms()) {
        IndexTuple complement;
        std::set_difference(full.begin(), full.end(), tk.begin(), tk.end(), std::back_inserter(complement));
        IndexTuple rest = full;
        int sign = remove_in_order(complement, rest);
        r.add(complement, coeff * Rational(1 / (*c * sign)));
    }
    return r;
}

PolyMatrix coefficient_matrix(const Form& two_form)
{
    if (two_form.grade() != 2) throw DomainError("expected a 2-form");
    const std::size_t m = two_form.chart()->dimension();
    PolyMatrix w(m, std::vector<Polynomial>(m, Polynomial(two_form.chart())));
    for (const auto& [t, c] : two_form.terms()) {
        w[t[0]][t[1]] = c;
        w[t[1]][t[0]] = -c;
    }
    return w;
}

Multivector poisson_bivector(const Form& omega)
{
    const std::size_t m = omega.chart()->dimension();
    if (m % 2 != 0) throw DomainError("symplectic structure requires an even-dimensional chart");
    PolyMatrix w = coefficient_matrix(omega);
    auto det = determinant(w).as_constant();
    if (!det || *det == 0) throw DomainError("2-form is degenerate or has a non-constant determinant");
    PolyMatrix adj = adjugate(w);
    Rational factor = -1 / *det;
    Multivector lambda(omega.chart(), 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) lambda.add({i, j}, adj[i][j] * factor);
    return lambda;
}

SymplecticData::SymplecticData(Form omega)
    : omega_(std::move(omega)), lambda_(poisson_bivector(omega_)), n_(omega_.chart()->dimension() / 2),
      closed_(exterior_derivative(omega_).is_zero())
{
    // i_L w = n is the k = 1 case of i_L w^k = k(n-k+1) w^{k-1}
    Form check = contract(lambda_, omega_);
    if (check.scalar() != Polynomial(chart(), Rational(static_cast<long>(n_))))
        throw ConsistencyError("contraction of the Poisson bivector with its 2-form is not n");
}

Form SymplecticData::darboux_form(const ChartPtr& chart, std::size_t n)
{
    if (chart->dimension() != 2 * n) throw DomainError("Darboux chart must have dimension 2n");
    Form omega(chart, 2);
    for (std::size_t j = 0; j < n; ++j) {
        const std::string idx = std::to_string(j + 1);
        omega.add({chart->index_of("p" + idx), chart->index_of("q" + idx)}, Polynomial(chart, Rational(1)));
    }
    return omega;
}

SymplecticData SymplecticData::darboux(std::size_t n)
{
    return SymplecticData(darboux_form(make_darboux_chart(n), n));
}

Form SymplecticData::liouville_volume() const
{
    mpz_class factorial = 1;
    for (std::size_t i = 2; i <= n_; ++i) factorial *= static_cast<unsigned long>(i);
    return form_power(omega_, static_cast<unsigned>(n_)).scaled(Rational(1, factorial));
}

SymplecticData make_symplectic(Form omega)
{
    SymplecticData s(std::move(omega));
    if (!s.is_closed()) throw DomainError("2-form is not closed");
    return s;
}

} // namespace npoisson
