#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "npoisson/brackets.hpp"
#include "npoisson/error.hpp"
#include "npoisson/models.hpp"
#include "npoisson/random.hpp"
#include "npoisson/schouten.hpp"
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

int parity(const std::vector<std::size_t>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

// 2x2 and 3x3 Jacobians written out, for the Nambu oracle.
Polynomial jacobian(const std::vector<Polynomial>& fs)
{
    auto d = [&](std::size_t i, std::size_t j) { return partial_derivative(fs[i], j); };
    if (fs.size() == 2) return d(0, 0) * d(1, 1) - d(0, 1) * d(1, 0);
    REQUIRE(fs.size() == 3);
    return d(0, 0) * (d(1, 1) * d(2, 2) - d(1, 2) * d(2, 1)) - d(0, 1) * (d(1, 0) * d(2, 2) - d(1, 2) * d(2, 0)) +
           d(0, 2) * (d(1, 0) * d(2, 1) - d(1, 1) * d(2, 0));
}

SymplecticData magnetic(const char* b1, const char* b2, const char* b3)
{
    const ChartPtr c = make_darboux_chart(3);
    return SymplecticData(magnetic_form({poly(b1, c), poly(b2, c), poly(b3, c)}));
}

} // namespace

TEST_CASE("form-defined bracket examples")
{
    const SymplecticData s = SymplecticData::darboux(1);
    const auto& c = s.chart();
    const BracketDef def(s.omega(), Form(Polynomial(c, 1)));
    const std::vector<Polynomial> pq = {poly("p1", c), poly("q1", c)};
    CHECK(bracket(def, pq) == poly("1", c));
    const std::vector<Polynomial> one = {poly("1", c), poly("q1*p1", c)};
    CHECK(bracket(def, one).is_zero());
    CHECK_THROWS_AS(bracket(def, std::vector<Polynomial>{poly("p1", c)}), DomainError);

    const SymplecticData s2 = SymplecticData::darboux(2);
    const auto& c2 = s2.chart();
    const BracketDef quaternary(s2.liouville_volume(), Form(Polynomial(c2, 2)));
    const std::vector<Polynomial> repeated = {poly("q1*p2", c2), poly("q1*p2", c2), poly("p1", c2), poly("q2", c2)};
    CHECK(bracket(quaternary, repeated).is_zero());
}

TEST_CASE("omega-power bracket examples")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    const std::vector<Polynomial> fs = {poly("q1", c), poly("p1", c), poly("q2", c), poly("p2", c)};
    const Polynomial value = omega_power_bracket(s, 2, fs);
    CHECK(value == poly("2", c));
    // Oracle: k!/(n-k)! times the ratio of df1^...^df4 to w^2/2!, read off by hand.
    const Form top = differential_wedge(fs, c);
    const Form vol = Rational(1, 2) * form_power(s.omega(), 2);
    const Rational ratio = *top_coefficient(top).as_constant() / *top_coefficient(vol).as_constant();
    CHECK(value == Polynomial(c, factorial(2) / factorial(0) * ratio));

    for (unsigned n = 1; n <= 3; ++n) {
        const SymplecticData sn = SymplecticData::darboux(n);
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned j = 1; j <= n; ++j) {
                const auto p = Polynomial::variable(sn.chart(), "p" + std::to_string(i));
                const auto q = Polynomial::variable(sn.chart(), "q" + std::to_string(j));
                CHECK(omega_power_bracket(sn, 1, std::vector{p, q}) == Polynomial(sn.chart(), i == j ? 1 : 0));
            }
    }
    CHECK_THROWS_AS(omega_power_bracket(s, 3, fs), DomainError);
    CHECK_THROWS_AS(omega_power_bracket(s, 1, fs), DomainError);

    const SymplecticData m = magnetic("q2", "q3", "q1");
    const auto& mc = m.chart();
    CHECK(omega_power_bracket(m, 1, std::vector{poly("p1", mc), poly("p2", mc)}) == poly("q1", mc));
}

TEST_CASE("Nambu top bracket")
{
    const ChartPtr c = make_chart({"x", "y"});
    Form vol(c, 2);
    vol.add({0, 1}, Polynomial(c, 1));
    CHECK(nambu_top_bracket(vol, poly("1", c), std::vector{poly("x", c), poly("y", c)}) == poly("1", c));
    CHECK(nambu_top_bracket(vol, poly("x", c), std::vector{poly("x", c), poly("y", c)}) == poly("x", c));
    CHECK_THROWS_AS(nambu_top_bracket(vol, poly("1", c), std::vector{poly("x", c)}), DomainError);

    const ChartPtr c3 = make_chart({"x", "y", "z"});
    Form vol3(c3, 3);
    vol3.add({0, 1, 2}, Polynomial(c3, Rational(1, 2)));
    const Polynomial gamma = poly("x*y + 1", c3);
    CHECK(nambu_top_bracket(vol3, gamma, std::vector{poly("y", c3), poly("x", c3), poly("z", c3)}) ==
          Rational(-2) * gamma);
    Random rng(41);
    for (int t = 0; t < 20; ++t) {
        std::vector<Polynomial> fs = {rng.polynomial(c3), rng.polynomial(c3), rng.polynomial(c3)};
        CHECK(nambu_top_bracket(vol3, gamma, fs) == Rational(2) * gamma * jacobian(fs));
    }
}

TEST_CASE("Hamiltonian vector fields")
{
    const SymplecticData s = SymplecticData::darboux(1);
    const auto& c = s.chart();
    CHECK(apply_vector_field(hamiltonian_vf(s, poly("p1", c)), poly("q1", c)) == poly("1", c));
    CHECK(hamiltonian_vf(s, poly("7/3", c)).is_zero());
    const SymplecticData s2 = SymplecticData::darboux(2);
    Random rng(42);
    for (int t = 0; t < 20; ++t) {
        const auto f = rng.polynomial(s2.chart()), g = rng.polynomial(s2.chart());
        const Multivector x = hamiltonian_vf(s2, f);
        CHECK(contract(x, s2.omega()) == -differential(f));
        CHECK(apply_vector_field(x, g) == poisson_bracket(s2, f, g));
        CHECK(lie_derivative(x, s2.omega()).is_zero());
    }
}

TEST_CASE("derived vector fields on the magnetic chart")
{
    const SymplecticData m = magnetic("q2", "q3", "q1");
    const auto& c = m.chart();
    const std::vector<Polynomial> ps = {poly("p1", c), poly("p2", c), poly("p3", c)};
    CHECK(derived_vf(m, 2, ps) == multivector("q2*e(q1) + q3*e(q2) + q1*e(q3)", c));
    const SymplecticData m0 = SymplecticData::darboux(3);
    CHECK(derived_vf(m0, 2, ps).is_zero());
    CHECK_THROWS_AS(derived_vf(m0, 4, ps), DomainError);
}

TEST_CASE("X_{f1,f2,f3} decomposes into Hamiltonian fields")
{
    for (unsigned n = 2; n <= 3; ++n) {
        const SymplecticData s = SymplecticData::darboux(n);
        Random rng(43 + n);
        for (int t = 0; t < 10; ++t) {
            const auto f1 = rng.polynomial(s.chart()), f2 = rng.polynomial(s.chart()), f3 = rng.polynomial(s.chart());
            const Multivector rhs = poisson_bracket(s, f1, f2) * hamiltonian_vf(s, f3) +
                                    poisson_bracket(s, f2, f3) * hamiltonian_vf(s, f1) +
                                    poisson_bracket(s, f3, f1) * hamiltonian_vf(s, f2);
            CHECK(derived_vf(s, 2, std::vector{f1, f2, f3}) == rhs);
        }
    }
}

TEST_CASE("Jacobi bracket")
{
    const JacobiDef contact = contact_pair();
    const auto& c = contact.chart();
    const auto x = poly("x", c), y = poly("y", c), z = poly("z", c);
    // Hand expansion: L(f,g) + f X(g) - g X(f) with L = (e(x) + y e(z))^e(y), X = e(z).
    CHECK(jacobi_bracket(contact, x, y) == poly("1", c));
    CHECK(jacobi_bracket(contact, x, z) == poly("x", c));
    CHECK(jacobi_bracket(contact, y, z).is_zero());
    CHECK(jacobi_bracket(contact, x * z, x * z).is_zero());

    const SymplecticData s = SymplecticData::darboux(2);
    const JacobiDef plain(s.bivector(), Multivector(s.chart(), 1));
    Random rng(45);
    for (int t = 0; t < 10; ++t) {
        const auto f = rng.polynomial(s.chart()), g = rng.polynomial(s.chart());
        CHECK(jacobi_bracket(plain, f, g) == poisson_bracket(s, f, g));
    }
}

TEST_CASE("homogenization")
{
    const JacobiDef contact = contact_pair();
    const auto& c = contact.chart();
    CHECK(homogenization_check(contact, poly("1", c), poly("1", c)));
    const JacobiDef zero(Multivector(c, 2), Multivector(c, 1));
    CHECK(homogenization_check(zero, poly("x", c), poly("y*z", c)));
    CHECK(homogenized_bracket(zero, poly("x", c), poly("y*z", c)).is_zero());

    Random rng(46);
    for (int t = 0; t < 20; ++t) {
        const auto f = rng.polynomial(c), g = rng.polynomial(c);
        CHECK(homogenization_check(contact, f, g));
        const ExpPoly lhs = homogenized_bracket(contact, f, g);
        const Polynomial formula = apply_multivector(contact.bivector(), std::vector{f, g}) +
                                   f * apply_vector_field(contact.field(), g) -
                                   g * apply_vector_field(contact.field(), f);
        REQUIRE(lhs.terms().size() <= 1);
        if (!formula.is_zero()) CHECK(lhs.terms().at(0).embed(c) == formula);
    }
    CHECK_THROWS_AS(homogenization_check(contact, poly("x", c), poly("y", c), "x"), DomainError);
}

TEST_CASE("jacobiator examples")
{
    const SymplecticData s = SymplecticData::darboux(2);
    Random rng(47);
    for (int t = 0; t < 5; ++t)
        CHECK(jacobiator(s, rng.polynomial(s.chart()), rng.polynomial(s.chart()), rng.polynomial(s.chart())).is_zero());
    const SymplecticData good = magnetic("q2", "q3", "q1");
    const auto& c = good.chart();
    CHECK(jacobiator(good, poly("p1", c), poly("p2", c), poly("p3", c)).is_zero());
    const SymplecticData bad = magnetic("q1", "0", "0");
    // By hand: {p2,p3} = q1, {p1,q1} = 1, the other two terms vanish.
    CHECK(jacobiator(bad, poly("p1", c), poly("p2", c), poly("p3", c)) == poly("1", c));
    const JacobiDef contact = contact_pair();
    const auto& cc = contact.chart();
    CHECK(jacobiator(contact, poly("x", cc), poly("y", cc), poly("z", cc)).is_zero());
}

TEST_CASE("brackets are totally antisymmetric")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    Random rng(48);
    for (int t = 0; t < 10; ++t) {
        std::vector<Polynomial> fs = {rng.polynomial(c), rng.polynomial(c), rng.polynomial(c), rng.polynomial(c)};
        const Polynomial base = omega_power_bracket(s, 2, fs);
        std::vector<std::size_t> perm = {0, 1, 2, 3};
        for (int r = 0; r < 4; ++r) {
            std::shuffle(perm.begin(), perm.end(), std::mt19937_64(1000 + 10 * t + r));
            std::vector<Polynomial> permuted;
            for (auto i : perm) permuted.push_back(fs[i]);
            CHECK(omega_power_bracket(s, 2, permuted) == Rational(parity(perm)) * base);
        }
        CHECK(poisson_bracket(s, fs[0], fs[1]) == -poisson_bracket(s, fs[1], fs[0]));
    }
}

TEST_CASE("Leibniz rule in each slot")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    Random rng(49);
    for (int t = 0; t < 10; ++t) {
        std::vector<Polynomial> fs = {rng.polynomial(c), rng.polynomial(c), rng.polynomial(c), rng.polynomial(c)};
        const auto a = rng.polynomial(c), b = rng.polynomial(c);
        const std::size_t slot = static_cast<std::size_t>(rng.integer(0, 3));
        auto with = [&](const Polynomial& v) {
            auto copy = fs;
            copy[slot] = v;
            return omega_power_bracket(s, 2, copy);
        };
        CHECK(with(a * b) == a * with(b) + b * with(a));
    }
}

TEST_CASE("pairing and form division agree")
{
    const ChartPtr c = make_chart({"a", "b", "c", "d"});
    Random rng(50);
    for (int t = 0; t < 20; ++t) {
        const std::size_t k = static_cast<std::size_t>(rng.integer(1, 3));
        Form vol(c, 4);
        vol.add({0, 1, 2, 3}, Polynomial(c, rng.nonzero_rational()));
        const BracketDef def(vol, rng.form(c, 4 - k));
        std::vector<Polynomial> fs;
        for (std::size_t i = 0; i < k; ++i) fs.push_back(rng.polynomial(c));
        CHECK(RationalExpr(def.via_pairing(fs)) == def.via_forms(fs));
    }
}

TEST_CASE("omega-power bracket equals the normalized form definition")
{
    for (unsigned n = 1; n <= 3; ++n) {
        const SymplecticData s = SymplecticData::darboux(n);
        const auto& c = s.chart();
        Random rng(51 + n);
        for (unsigned k = 1; k <= n; ++k) {
            const Form vol = Rational(1 / factorial(n)) * form_power(s.omega(), n);
            const Form alpha = Rational(factorial(k) / factorial(n - k)) * form_power(s.omega(), n - k);
            const BracketDef def(vol, alpha);
            const Multivector lk = wedge_power(s.bivector(), k);
            CHECK(schouten(lk, lk).is_zero());
            for (int t = 0; t < 3; ++t) {
                std::vector<Polynomial> fs;
                for (unsigned i = 0; i < 2 * k; ++i) fs.push_back(rng.polynomial(c));
                const Polynomial value = omega_power_bracket(s, k, fs);
                CHECK(value == bracket(def, fs));
                CHECK(value == pair(differential_wedge(fs, c), lk));
            }
        }
    }
}

TEST_CASE("the binary bracket of a symplectic form satisfies Jacobi")
{
    const ChartPtr c = make_darboux_chart(2);
    const SymplecticData s(form("d(p1)^d(q1) + d(p2)^d(q2) + q1*d(q1)^d(q2) + p2*d(p2)^d(q1)", c));
    REQUIRE(s.is_closed());
    Random rng(55);
    for (int t = 0; t < 5; ++t) {
        const auto f = rng.polynomial(c, 2, 2), g = rng.polynomial(c, 2, 2), h = rng.polynomial(c, 2, 2);
        CHECK(jacobiator(s, f, g, h).is_zero());
    }
}

TEST_CASE("derived fields do not preserve the binary bracket")
{
    const SymplecticData m = magnetic("q2", "q3", "q1");
    const auto& c = m.chart();
    const Multivector x = derived_vf(m, 2, std::vector{poly("p1", c), poly("p2", c), poly("p3", c)});
    const auto f = poly("p3", c), g = poly("p2", c);
    const Polynomial defect = apply_vector_field(x, poisson_bracket(m, f, g)) -
                              poisson_bracket(m, apply_vector_field(x, f), g) -
                              poisson_bracket(m, f, apply_vector_field(x, g));
    CHECK(defect == poly("-q3", c));
}
