#include <doctest.h>

#include <algorithm>
#include <vector>

#include "npoisson/error.hpp"
#include "npoisson/exterior.hpp"
#include "npoisson/models.hpp"
#include "npoisson/random.hpp"
#include "support.hpp"

using namespace npoisson;
using testing::form;
using testing::multivector;
using testing::poly;

namespace {

Rational factorial(unsigned n)
{
    Rational r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// Pairing of one-forms with vector fields, then the determinant over all
// permutations: the textbook definition of <a1^...^ak, X1^...^Xk>.
Polynomial determinant_pairing(const std::vector<Form>& ones, const std::vector<Multivector>& vecs)
{
    const std::size_t k = ones.size();
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    const ChartPtr& chart = ones.front().chart();
    Polynomial total(chart);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Polynomial term(chart, sign);
        for (std::size_t i = 0; i < k; ++i) {
            Polynomial entry(chart);
            for (const auto& [ti, ci] : ones[i].terms())
                entry += ci * vecs[perm[i]].coefficient(ti);
            term *= entry;
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST_CASE("wedge of coordinate differentials")
{
    const ChartPtr c = make_darboux_chart(1);
    const Form dq = differential(poly("q1", c)), dp = differential(poly("p1", c));
    CHECK(wedge(dq, dq).is_zero());
    const Form qp = wedge(dq, dp);
    REQUIRE(qp.terms().size() == 1);
    CHECK(qp.coefficient({c->index_of("q1"), c->index_of("p1")}) == poly("1", c));
    CHECK(wedge(dp, dq) == -qp);
}

TEST_CASE("powers of the symplectic form")
{
    const ChartPtr c = make_darboux_chart(2);
    const Form w = form("d(p1)^d(q1) + d(p2)^d(q2)", c);
    CHECK(form_power(w, 2) == form("2*d(p1)^d(q1)^d(p2)^d(q2)", c));
    CHECK(form_power(w, 3).is_zero());

    const ChartPtr c3 = make_darboux_chart(3);
    auto v = [&](const char* name) { return Polynomial::variable(c3, name); };
    const Form wb = magnetic_form({v("q2"), v("q3"), v("q1")});
    CHECK(form_power(wb, 3) == form_power(SymplecticData::darboux_form(c3, 3), 3));
}

TEST_CASE("exterior derivative")
{
    const ChartPtr c = make_darboux_chart(1);
    CHECK(exterior_derivative(form("q1*d(p1)", c)) == form("d(q1)^d(p1)", c));
    Random rng(21);
    const ChartPtr c2 = make_darboux_chart(2);
    for (int i = 0; i < 20; ++i) CHECK(exterior_derivative(differential(rng.polynomial(c2, 3, 4))).is_zero());
}

TEST_CASE("contraction examples")
{
    const ChartPtr c = make_darboux_chart(2);
    const SymplecticData s = SymplecticData::darboux(2);
    const Form& w = s.omega();
    const Multivector& L = s.bivector();
    CHECK(contract(L, w) == Form(poly("2", s.chart())));
    CHECK(contract(L, form_power(w, 2)) == Rational(2) * w);
    const ChartPtr c1 = make_darboux_chart(1);
    CHECK(contract(multivector("e(q1)", c1), form("d(q1)^d(p1)", c1)) == form("d(p1)", c1));
}

TEST_CASE("pairing examples")
{
    const ChartPtr c1 = make_darboux_chart(1);
    const SymplecticData s1 = SymplecticData::darboux(1);
    // {q1,p1} w = dq1^dp1 fixes the pairing at n = 1.
    const Polynomial qp = pair(form("d(q1)^d(p1)", c1), s1.bivector());
    CHECK(wedge(Form(qp), s1.omega()) == form("d(q1)^d(p1)", c1));

    const ChartPtr c = make_darboux_chart(2);
    const Multivector lam = multivector("e(q1)^e(q2) + e(p1)^e(p2)", c);
    const Polynomial value = pair(form("d(q1)^d(q2)", c), lam);
    std::vector<Form> ones = {form("d(q1)", c), form("d(q2)", c)};
    // Only the first term of lam matches; decompose it into vector fields.
    const Polynomial oracle =
        determinant_pairing(ones, {multivector("e(q1)", c), multivector("e(q2)", c)}) +
        determinant_pairing(ones, {multivector("e(p1)", c), multivector("e(p2)", c)});
    CHECK(value == oracle);
    CHECK(value == poly("1", c));
}

TEST_CASE("pairing agrees with the determinant definition on random decomposable inputs")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(22);
    for (int t = 0; t < 30; ++t) {
        const std::size_t k = static_cast<std::size_t>(rng.integer(1, 3));
        std::vector<Form> ones;
        std::vector<Multivector> vecs;
        for (std::size_t i = 0; i < k; ++i) {
            ones.push_back(rng.form(c, 1));
            vecs.push_back(rng.multivector(c, 1));
        }
        if (std::ranges::any_of(ones, [](const Form& f) { return f.is_zero(); })) continue;
        if (std::ranges::any_of(vecs, [](const Multivector& v) { return v.is_zero(); })) continue;
        const Form a = wedge_all<TensorKind::Form>(ones, c);
        const Multivector x = wedge_all<TensorKind::Multivector>(vecs, c);
        CHECK(pair(a, x) == determinant_pairing(ones, vecs));
    }
}

TEST_CASE("volume isomorphism")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const Form vol = s.liouville_volume();
    CHECK(mv_from_form(vol, vol) == Multivector(Polynomial(s.chart(), 1)));
    CHECK(vol == Rational(1, 2) * form_power(s.omega(), 2));
}

TEST_CASE("Poisson bivector of the Darboux form")
{
    const ChartPtr c1 = make_darboux_chart(1);
    CHECK(poisson_bivector(SymplecticData::darboux_form(c1, 1)) == multivector("e(p1)^e(q1)", c1));
    CHECK_THROWS_AS(poisson_bivector(Form(c1, 2)), DomainError);
    CHECK_THROWS_AS(SymplecticData(Form(c1, 2)), DomainError);
}

TEST_CASE("Lie derivative")
{
    const ChartPtr c = make_darboux_chart(1);
    CHECK(lie_derivative(multivector("e(q1)", c), form("q1*d(p1)", c)) == form("d(p1)", c));
}

TEST_CASE("wedge is associative and graded commutative")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(23);
    for (int t = 0; t < 40; ++t) {
        const std::size_t j = rng.integer(0, 2), k = rng.integer(0, 2), l = rng.integer(0, 2);
        const Form a = rng.form(c, j), b = rng.form(c, k), d = rng.form(c, l);
        CHECK(wedge(wedge(a, b), d) == wedge(a, wedge(b, d)));
        CHECK(wedge(a, b) == ((j * k) % 2 ? -wedge(b, a) : wedge(b, a)));
        const Multivector x = rng.multivector(c, j), y = rng.multivector(c, k);
        CHECK(wedge(x, y) == ((j * k) % 2 ? -wedge(y, x) : wedge(y, x)));
    }
}

TEST_CASE("d squared vanishes on every grade")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(24);
    for (std::size_t g = 0; g <= 4; ++g)
        for (int t = 0; t < 10; ++t) CHECK(exterior_derivative(exterior_derivative(rng.form(c, g, 3, 4))).is_zero());
}

TEST_CASE("d is an anti-derivation")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(25);
    for (int t = 0; t < 30; ++t) {
        const std::size_t j = rng.integer(0, 2);
        const Form a = rng.form(c, j), b = rng.form(c, rng.integer(0, 2));
        const Form rhs = wedge(exterior_derivative(a), b) +
                         (j % 2 ? -wedge(a, exterior_derivative(b)) : wedge(a, exterior_derivative(b)));
        CHECK(exterior_derivative(wedge(a, b)) == rhs);
    }
}

TEST_CASE("contraction with a vector field is an anti-derivation")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(26);
    for (int t = 0; t < 40; ++t) {
        const Multivector x = rng.multivector(c, 1);
        const std::size_t j = rng.integer(1, 2);
        const Form a = rng.form(c, j), b = rng.form(c, rng.integer(1, 2));
        const Form rhs = wedge(contract(x, a), b) + (j % 2 ? -wedge(a, contract(x, b)) : wedge(a, contract(x, b)));
        CHECK(contract(x, wedge(a, b)) == rhs);
    }
}

TEST_CASE("pairing times volume equals wedge with the contracted volume")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(27);
    for (int t = 0; t < 50; ++t) {
        const std::size_t k = static_cast<std::size_t>(rng.integer(1, 4));
        const Multivector lam = rng.multivector(c, k);
        Form vol(c, 4);
        vol.add({0, 1, 2, 3}, Polynomial(c, rng.nonzero_rational()));
        std::vector<Polynomial> fs;
        for (std::size_t i = 0; i < k; ++i) fs.push_back(rng.polynomial(c));
        const Form df = differential_wedge(fs, c);
        CHECK(pair(df, lam) * vol == wedge(df, contract(lam, vol)));
    }
}

TEST_CASE("contraction with powers of the symplectic form")
{
    for (unsigned n = 1; n <= 3; ++n) {
        const SymplecticData s = SymplecticData::darboux(n);
        for (unsigned k = 1; k <= n; ++k) {
            const Rational factor = Rational(k * (n - k + 1));
            CHECK(contract(s.bivector(), form_power(s.omega(), k)) == factor * form_power(s.omega(), k - 1));
        }
    }
}

TEST_CASE("volume isomorphism round-trips on random multivectors")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(28);
    Form vol(c, 4);
    vol.add({0, 1, 2, 3}, Polynomial(c, Rational(-3, 2)));
    for (int t = 0; t < 40; ++t) {
        const Multivector lam = rng.multivector(c, rng.integer(0, 4));
        CHECK(mv_from_form(vol, contract(lam, vol)) == lam);
    }
}

TEST_CASE("power of the form and factorials")
{
    // w^n / n! is the Liouville volume for each n.
    for (unsigned n = 1; n <= 3; ++n) {
        const SymplecticData s = SymplecticData::darboux(n);
        CHECK(s.liouville_volume() == Rational(1 / factorial(n)) * form_power(s.omega(), n));
    }
}
