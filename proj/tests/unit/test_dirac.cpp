#include <doctest.h>

#include "npoisson/brackets.hpp"
#include "npoisson/dirac.hpp"
#include "npoisson/error.hpp"
#include "npoisson/random.hpp"
#include "support.hpp"

using namespace npoisson;
using testing::poly;

namespace {

// Two constraints: C = [[0, c], [-c, 0]], so C^-1 = [[0, -1/c], [1/c, 0]] and
// {f,g}_D = {f,g} + ({f,t1}{t2,g} - {f,t2}{t1,g}) / c.
RationalExpr two_constraint_oracle(const SymplecticData& s, const Polynomial& t1, const Polynomial& t2,
                                   const Polynomial& f, const Polynomial& g)
{
    auto pb = [&](const Polynomial& a, const Polynomial& b) { return poisson_bracket(s, a, b); };
    const Polynomial c = pb(t1, t2);
    return RationalExpr(pb(f, g) * c + pb(f, t1) * pb(t2, g) - pb(f, t2) * pb(t1, g), c);
}

} // namespace

TEST_CASE("regularity")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    CHECK(regularity_check(ConstraintSet(s, {poly("q2", c), poly("p2", c)})));
    CHECK_FALSE(regularity_check(ConstraintSet(s, {poly("q2", c), poly("q1", c)})));
    const ConstraintSet curved(s, {poly("q1", c), poly("q1*p1", c)});
    CHECK(regularity_check(curved));
    CHECK(curved.determinant() == poly("q1^2", c));
    CHECK_FALSE(curved.differentials().is_zero());
    CHECK_THROWS_AS(ConstraintSet(s, {poly("q1", c)}), DomainError);
    CHECK_THROWS_AS(ConstraintSet(s, {}), DomainError);
    CHECK_THROWS_AS(dirac_bracket_matrix(ConstraintSet(s, {poly("q2", c), poly("q1", c)}), poly("p1", c),
                                         poly("p2", c)),
                    DomainError);
}

TEST_CASE("matrix Dirac bracket examples")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    const ConstraintSet canonical(s, {poly("q2", c), poly("p2", c)});
    CHECK(dirac_bracket_matrix(canonical, poly("q1", c), poly("p1", c)) ==
          RationalExpr(poisson_bracket(s, poly("q1", c), poly("p1", c))));
    const ConstraintSet sheared(s, {poly("q2", c), poly("p2 - q1", c)});
    // Hand expansion: C12 = {q2, p2 - q1} = -1; the only correction is -{p1,t2} C^-1_21 {t1,p2} = -1.
    CHECK(dirac_bracket_matrix(sheared, poly("p1", c), poly("p2", c)) == RationalExpr(poly("1", c)));
}

TEST_CASE("matrix Dirac bracket matches the two-constraint formula")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    Random rng(61);
    const std::pair<const char*, const char*> sets[] = {{"q2", "p2"}, {"q1", "q1*p1"}, {"q2 + p1", "p2 + q1^2"}};
    for (const auto& [a, b] : sets) {
        const ConstraintSet cs(s, {poly(a, c), poly(b, c)});
        for (int t = 0; t < 10; ++t) {
            const auto f = rng.polynomial(c), g = rng.polynomial(c);
            CHECK(dirac_bracket_matrix(cs, f, g) == two_constraint_oracle(s, poly(a, c), poly(b, c), f, g));
        }
    }
}

TEST_CASE("form quotient examples")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    const ConstraintSet canonical(s, {poly("q2", c), poly("p2", c)});
    const auto norm = calibrate_normalization(canonical);
    CHECK(dirac_bracket_form(canonical, norm, poly("q1", c), poly("p1", c)) ==
          dirac_bracket_matrix(canonical, poly("q1", c), poly("p1", c)));
    CHECK(dirac_form_quotient(canonical, poly("q1*p1", c), poly("q1*p1", c)).is_zero());
    CHECK(dirac_form_quotient(canonical, poly("q2", c), poly("p1^2", c)).is_zero());
    const ConstraintSet full(s, {poly("q1", c), poly("p1", c), poly("q2", c), poly("p2", c)});
    CHECK_THROWS_AS(dirac_form_quotient(full, poly("q1", c), poly("p1", c)), DomainError);
}

TEST_CASE("calibration constant per (n, k)")
{
    struct Grid {
        unsigned n, k;
        Rational expected;
    };
    for (const Grid& grid : {Grid{2, 1, 1}, Grid{3, 1, Rational(1, 2)}, Grid{3, 2, 1}}) {
        const SymplecticData s = SymplecticData::darboux(grid.n);
        const auto& c = s.chart();
        std::vector<Polynomial> thetas;
        for (unsigned j = grid.n - grid.k + 1; j <= grid.n; ++j) {
            thetas.push_back(Polynomial::variable(c, "q" + std::to_string(j)));
            thetas.push_back(Polynomial::variable(c, "p" + std::to_string(j)) + poly("q1^2", c));
        }
        const ConstraintSet cs(s, thetas);
        const auto norm = calibrate_normalization(cs);
        CHECK(norm.c_norm == grid.expected);
        CHECK(norm.c_norm == Rational(1, grid.n - grid.k));
        Random rng(62 + grid.n * 10 + grid.k);
        for (int t = 0; t < 20; ++t) {
            const auto f = rng.polynomial(c), g = rng.polynomial(c);
            const RationalExpr matrix = dirac_bracket_matrix(cs, f, g);
            CHECK(dirac_form_quotient(cs, f, g) == RationalExpr(Polynomial(c, norm.c_norm)) * matrix);
        }
    }
}

TEST_CASE("constraints are Casimirs of the Dirac bracket")
{
    const SymplecticData s = SymplecticData::darboux(3);
    const auto& c = s.chart();
    const ConstraintSet cs(s, {poly("q3", c), poly("q3*p3 + q1", c)});
    const auto norm = calibrate_normalization(cs);
    Random rng(63);
    for (const auto& theta : cs.constraints())
        for (int t = 0; t < 10; ++t) {
            const auto f = rng.polynomial(c);
            CHECK(dirac_bracket_matrix(cs, theta, f).is_zero());
            CHECK(dirac_bracket_form(cs, norm, f, theta).is_zero());
        }
}

TEST_CASE("Dirac bracket is antisymmetric and Leibniz")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    const ConstraintSet cs(s, {poly("q1", c), poly("q1*p1 + q2", c)});
    Random rng(64);
    for (int t = 0; t < 15; ++t) {
        const auto f = rng.polynomial(c), g = rng.polynomial(c), h = rng.polynomial(c);
        CHECK(dirac_bracket_matrix(cs, f, g) == -dirac_bracket_matrix(cs, g, f));
        CHECK(dirac_bracket_matrix(cs, f * g, h) ==
              RationalExpr(f) * dirac_bracket_matrix(cs, g, h) + RationalExpr(g) * dirac_bracket_matrix(cs, f, h));
    }
}

TEST_CASE("Jacobi identity when det C is constant")
{
    const SymplecticData s = SymplecticData::darboux(2);
    const auto& c = s.chart();
    const ConstraintSet cs(s, {poly("q2 + p1^2", c), poly("p2", c)});
    REQUIRE(cs.determinant().as_constant().has_value());
    auto bracket = [&](const Polynomial& a, const Polynomial& b) {
        auto value = dirac_bracket_matrix(cs, a, b).as_polynomial();
        REQUIRE(value.has_value());
        return *value;
    };
    Random rng(65);
    for (int t = 0; t < 10; ++t) {
        const auto f = rng.polynomial(c, 2, 2), g = rng.polynomial(c, 2, 2), h = rng.polynomial(c, 2, 2);
        CHECK(jacobiator(bracket, f, g, h).is_zero());
    }
}

TEST_CASE("canonical constraints reduce to the smaller chart")
{
    const SymplecticData s = SymplecticData::darboux(3);
    const SymplecticData reduced = SymplecticData::darboux(2);
    const auto& c = s.chart();
    const ConstraintSet cs(s, {poly("q3", c), poly("p3", c)});
    Random rng(66);
    for (int t = 0; t < 15; ++t) {
        const auto f = rng.polynomial(reduced.chart()), g = rng.polynomial(reduced.chart());
        CHECK(dirac_bracket_matrix(cs, f.embed(c), g.embed(c)) ==
              RationalExpr(poisson_bracket(reduced, f, g).embed(c)));
    }
}
