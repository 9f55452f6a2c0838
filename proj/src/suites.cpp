#include "npoisson/suites.hpp"

#include <array>
#include <functional>
#include <map>

#include "npoisson/brackets.hpp"
#include "npoisson/dirac.hpp"
#include "npoisson/error.hpp"
#include "npoisson/models.hpp"
#include "npoisson/random.hpp"
#include "npoisson/schouten.hpp"

namespace npoisson {

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { out_.name = std::move(name); }

    void check(bool ok, const std::string& what)
    {
        ++out_.checks;
        if (!ok) {
            ++out_.failures;
            out_.details.push_back("FAIL " + what);
        }
    }

    /// Runs body; a library error counts as one failed check.
    void guarded(const std::string& what, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const Error& e) {
            ++out_.checks;
            ++out_.failures;
            out_.details.push_back("FAIL " + what + ": " + e.what());
        }
    }

    void note(std::string line) { out_.details.push_back(std::move(line)); }

    SuiteOutcome finish() { return std::move(out_); }

private:
    SuiteOutcome out_;
};

std::vector<unsigned> half_dimensions(std::optional<unsigned> n, unsigned lo, unsigned hi)
{
    if (!n) {
        std::vector<unsigned> all;
        for (unsigned i = lo; i <= hi; ++i) all.push_back(i);
        return all;
    }
    if (*n < lo || *n > hi)
        throw DomainError("n must be between " + std::to_string(lo) + " and " + std::to_string(hi));
    return {*n};
}

void reject_n(std::optional<unsigned> n, std::string_view suite)
{
    if (n) throw DomainError("suite '" + std::string(suite) + "' takes no n parameter");
}

std::string str(const Rational& r) { return to_string(r); }

int epsilon(std::size_t i, std::size_t j, std::size_t k)
{
    if (i == j || j == k || i == k) return 0;
    return ((j + 3 - i) % 3 == 1) ? 1 : -1;
}

Form four_volume(const ChartPtr& chart, const Polynomial& coefficient)
{
    Form vol(chart, 4);
    vol.add({0, 1, 2, 3}, coefficient);
    return vol;
}

SuiteOutcome lemma2(std::optional<unsigned> n)
{
    Recorder rec("lemma2");
    for (unsigned dim : half_dimensions(n, 1, 3)) {
        const auto s = SymplecticData::darboux(dim);
        for (unsigned k = 1; k <= dim; ++k) {
            Form lhs = contract(s.bivector(), form_power(s.omega(), k));
            Form rhs = form_power(s.omega(), k - 1).scaled(Rational(k * (dim - k + 1)));
            rec.check(lhs == rhs, "n = " + std::to_string(dim) + ", k = " + std::to_string(k));
        }
        rec.note("n = " + std::to_string(dim) + ": i_L w^k = k(n-k+1) w^(k-1) checked for k = 1.." +
                 std::to_string(dim));
    }
    return rec.finish();
}

SuiteOutcome pairing_suite(std::optional<unsigned> n)
{
    reject_n(n, "pairing");
    Recorder rec("pairing");
    rec.guarded("reference self-test", [] { verify_pairing_convention(); });
    auto chart = make_chart({"a", "b", "c", "d"});
    Random rng(1001);
    const int instances = 60;
    for (int i = 0; i < instances; ++i) {
        const std::size_t k = 1 + static_cast<std::size_t>(i) % 4;
        const std::string tag = "instance " + std::to_string(i) + " (k = " + std::to_string(k) + ")";
        const Form vol = four_volume(chart, Polynomial(chart, rng.nonzero_rational()));
        const Multivector lambda = rng.multivector(chart, k);
        std::vector<Polynomial> fs;
        for (std::size_t j = 0; j < k; ++j) fs.push_back(rng.polynomial(chart));
        rec.guarded(tag, [&] {
            const Form dfs = differential_wedge(fs, chart);
            rec.check(vol.scaled(pair(dfs, lambda)) == wedge(dfs, contract(lambda, vol)), tag + ": wedge identity");
            BracketDef def(vol, contract(lambda, vol));
            rec.check(def.generator() && *def.generator() == lambda, tag + ": generator round trip");
            rec.check(RationalExpr(def.via_pairing(fs)) == def.via_forms(fs), tag + ": pairing vs division");
        });
    }
    rec.note(std::to_string(instances) + " random instances, k = 1..4, chart (a, b, c, d)");
    return rec.finish();
}

SuiteOutcome power_bracket_suite(std::optional<unsigned> n)
{
    Recorder rec("power-bracket");
    Random rng(2002);
    for (unsigned dim : half_dimensions(n, 1, 3)) {
        const auto s = SymplecticData::darboux(dim);
        const auto& chart = s.chart();
        for (unsigned k = 1; k <= dim; ++k) {
            const std::string tag = "n = " + std::to_string(dim) + ", k = " + std::to_string(k);
            rec.guarded(tag, [&] {
                const Multivector lk = omega_power_generator(s, k);
                const BracketDef def = omega_power_definition(s, k);
                rec.check(def.generator() && *def.generator() == lk, tag + ": i_{L^k} w^n/n! = k! w^(n-k)/(n-k)!");
                rec.check(schouten(lk, lk).is_zero(), tag + ": [L^k, L^k] = 0");
                for (int i = 0; i < 3; ++i) {
                    std::vector<Polynomial> fs;
                    for (unsigned j = 0; j < 2 * k; ++j) fs.push_back(rng.polynomial(chart, 2, 2));
                    const Polynomial value = omega_power_bracket(s, k, fs);
                    rec.check(value == pair(differential_wedge(fs, chart), lk), tag + ": pairing with L^k");
                    rec.check(RationalExpr(value) == def.via_forms(fs), tag + ": form definition");
                }
            });
        }
        rec.note("n = " + std::to_string(dim) + ": bracket = <df, L^k> = form definition, [L^k, L^k] = 0 for k = 1.." +
                 std::to_string(dim));
    }
    return rec.finish();
}

SuiteOutcome magnetic(std::optional<unsigned> n)
{
    reject_n(n, "magnetic");
    Recorder rec("magnetic");
    const auto chart = make_darboux_chart(3);
    auto v = [&](const std::string& name) { return Polynomial::variable(chart, name); };
    auto c = [&](long num, long den) { return Polynomial(chart, Rational(num, den)); };
    const std::array<Polynomial, 3> q{v("q1"), v("q2"), v("q3")};
    const std::array<Polynomial, 3> p{v("p1"), v("p2"), v("p3")};
    const SymplecticData s0(SymplecticData::darboux_form(chart, 3));

    const std::vector<std::pair<std::string, std::array<Polynomial, 3>>> cases{
        {"B = (1, -2, 3/2)", {c(1, 1), c(-2, 1), c(3, 2)}},
        {"B = (q2, q3, q1)", {q[1], q[2], q[0]}},
    };
    for (const auto& [label, b] : cases) {
        rec.guarded(label, [&] {
            const Form wb = magnetic_form(b);
            const SymplecticData sb(wb);
            rec.check(form_power(wb, 3) == form_power(s0.omega(), 3), label + ": w_B^3 = w_0^3");
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
                    rec.check(poisson_bracket(sb, q[i], q[j]).is_zero(), label + ": {q" + ij + "} = 0");
                    rec.check(poisson_bracket(sb, p[i], q[j]) == c(i == j ? 1 : 0, 1), label + ": {p,q}" + ij);
                    Polynomial expected(chart);
                    for (std::size_t k = 0; k < 3; ++k) expected += b[k] * Rational(epsilon(i, j, k));
                    rec.check(poisson_bracket(sb, p[i], p[j]) == expected, label + ": {p,p}" + ij + " = eps B");
                }
            }
            const Multivector x = derived_vf(sb, 2, p);
            Multivector expected(chart, 1);
            for (std::size_t i = 0; i < 3; ++i) expected.add({chart->index_of("q" + std::to_string(i + 1))}, b[i]);
            rec.check(x == expected, label + ": X_{p1,p2,p3} = B^i d/dq^i");
            rec.note(label + ": {p1,p2} = " + poisson_bracket(sb, p[0], p[1]).to_string() +
                     ", X_{p1,p2,p3} = " + x.to_string());
        });
    }
    rec.guarded("w_0", [&] {
        const Multivector x0 = derived_vf(s0, 2, p);
        rec.check(x0.is_zero(), "w_0: X_{p1,p2,p3} = 0");
        rec.note("w_0: X_{p1,p2,p3} = " + x0.to_string());
    });
    return rec.finish();
}

SuiteOutcome jacobi_div(std::optional<unsigned> n)
{
    reject_n(n, "jacobi-div");
    Recorder rec("jacobi-div");
    const auto chart = make_darboux_chart(3);
    auto v = [&](const std::string& name) { return Polynomial::variable(chart, name); };
    const Polynomial zero(chart);
    const auto coords = coordinate_functions(chart);
    Random rng(5005);

    rec.guarded("solenoidal", [&] {
        const std::array<Polynomial, 3> b{v("q2"), v("q3"), v("q1")};
        const SymplecticData sb(magnetic_form(b));
        rec.check(divergence(b).is_zero(), "B = (q2, q3, q1): div B = 0");
        rec.check(sb.is_closed() && is_poisson(sb.bivector()), "B = (q2, q3, q1): closed and Poisson");
        std::size_t triples = 0;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j)
                for (std::size_t k = j + 1; k < 6; ++k, ++triples)
                    rec.check(jacobiator(sb, coords[i], coords[j], coords[k]).is_zero(),
                              "B = (q2, q3, q1): coordinate triple jacobiator");
        for (int t = 0; t < 10; ++t, ++triples) {
            auto f = rng.polynomial(chart, 2, 2), g = rng.polynomial(chart, 2, 2), h = rng.polynomial(chart, 2, 2);
            rec.check(jacobiator(sb, f, g, h).is_zero(), "B = (q2, q3, q1): random jacobiator");
        }
        rec.note("B = (q2, q3, q1): div B = 0, jacobiator = 0 on " + std::to_string(triples) + " triples");
    });
    rec.guarded("non-solenoidal", [&] {
        const std::array<Polynomial, 3> b{v("q1"), zero, zero};
        const SymplecticData sb(magnetic_form(b));
        const Polynomial div = divergence(b);
        const Polynomial jac = jacobiator(sb, v("p1"), v("p2"), v("p3"));
        const auto value = jac.as_constant();
        rec.check(value && *value != 0, "B = (q1, 0, 0): jacobiator(p1, p2, p3) is a nonzero constant");
        rec.check(jac == div || jac == -div, "B = (q1, 0, 0): jacobiator = +-div B");
        rec.check(!sb.is_closed() && !is_poisson(sb.bivector()), "B = (q1, 0, 0): not closed, not Poisson");
        rec.note("B = (q1, 0, 0): div B = " + div.to_string() + ", jacobiator(p1, p2, p3) = " + jac.to_string());
    });
    return rec.finish();
}

SuiteOutcome xf_identity(std::optional<unsigned> n)
{
    Recorder rec("xf-identity");
    for (unsigned dim : half_dimensions(n, 2, 3)) {
        const auto s = SymplecticData::darboux(dim);
        const auto& chart = s.chart();
        Random rng(3000 + dim);
        const int triples = 20;
        for (int t = 0; t < triples; ++t) {
            const std::array<Polynomial, 3> f{rng.polynomial(chart, 2, 2), rng.polynomial(chart, 2, 2),
                                              rng.polynomial(chart, 2, 2)};
            const std::string tag = "n = " + std::to_string(dim) + ", triple " + std::to_string(t);
            rec.guarded(tag, [&] {
                const Multivector lhs = derived_vf(s, 2, f);
                std::array<Multivector, 3> x{hamiltonian_vf(s, f[0]), hamiltonian_vf(s, f[1]),
                                             hamiltonian_vf(s, f[2])};
                const Multivector rhs = poisson_bracket(s, f[0], f[1]) * x[2] +
                                        poisson_bracket(s, f[1], f[2]) * x[0] +
                                        poisson_bracket(s, f[2], f[0]) * x[1];
                rec.check(lhs == rhs, tag);
            });
        }
        rec.note("n = " + std::to_string(dim) + ": X_{f1,f2,f3} = {f1,f2}X_f3 + {f2,f3}X_f1 + {f3,f1}X_f2 on " +
                 std::to_string(triples) + " random triples");
    }
    return rec.finish();
}

SuiteOutcome casimir(std::optional<unsigned> n)
{
    reject_n(n, "casimir");
    Recorder rec("casimir");
    rec.guarded("so(3)", [&] {
        const auto s = SymplecticData::darboux(3);
        const auto j = angular_momenta(s.chart());
        const Polynomial c = j[0] * j[0] + j[1] * j[1] + j[2] * j[2];
        const Polynomial j12 = poisson_bracket(s, j[0], j[1]);
        rec.check(j12 == j[2] || j12 == -j[2], "{J1, J2} = +-J3");
        rec.check(poisson_bracket(s, j[1], j[2]) == (j12 == j[2] ? j[0] : -j[0]), "{J2, J3} = +-J1, same sign");
        rec.check(poisson_bracket(s, j[2], j[0]) == (j12 == j[2] ? j[1] : -j[1]), "{J3, J1} = +-J2, same sign");
        for (const auto& ji : j) rec.check(poisson_bracket(s, c, ji).is_zero(), "{C, J_i} = 0");

        const Multivector xj = derived_vf(s, 2, j);
        const Multivector xc = hamiltonian_vf(s, c);
        if (xc.is_zero()) {
            rec.check(false, "X_C is nonzero");
            return;
        }
        const auto& [tuple, coeff] = *xc.terms().begin();
        const auto ratio = RationalExpr(xj.coefficient(tuple), coeff).as_constant();
        rec.check(ratio.has_value(), "X_{J1,J2,J3} / X_C is constant on the first component");
        if (!ratio) return;
        rec.check(xj == xc.scaled(*ratio), "X_{J1,J2,J3} = c X_C");
        rec.check(abs(*ratio) == Rational(1, 2), "|c| = 1/2");
        rec.note("{J1, J2} = " + j12.to_string());
        rec.note("X_{J1,J2,J3} = c X_C with c = " + str(*ratio));
    });
    return rec.finish();
}

struct NamedConstraints {
    std::string label;
    std::vector<Polynomial> thetas;
    bool constant_det;
};

std::vector<NamedConstraints> constraint_families(const ChartPtr& chart, unsigned n, unsigned k)
{
    auto q = [&](unsigned i) { return Polynomial::variable(chart, "q" + std::to_string(i)); };
    auto p = [&](unsigned i) { return Polynomial::variable(chart, "p" + std::to_string(i)); };
    NamedConstraints canonical{"canonical", {}, true};
    NamedConstraints sheared{"sheared", {}, true};
    NamedConstraints curved{"curved", {}, false};
    for (unsigned j = n - k + 1; j <= n; ++j) {
        canonical.thetas.insert(canonical.thetas.end(), {q(j), p(j)});
        sheared.thetas.insert(sheared.thetas.end(), {q(j), p(j) + q(1) * p(1)});
        curved.thetas.insert(curved.thetas.end(), {q(j), q(j) * p(j) + q(1)});
    }
    return {canonical, sheared, curved};
}

SuiteOutcome dirac(std::optional<unsigned> n)
{
    Recorder rec("dirac");
    for (unsigned dim : half_dimensions(n, 2, 3)) {
        const auto s = SymplecticData::darboux(dim);
        const auto& chart = s.chart();
        for (unsigned k = 1; k < dim; ++k) {
            const std::string grid = "(n, k) = (" + std::to_string(dim) + ", " + std::to_string(k) + ")";
            Random rng(4000 + 10 * dim + k);
            std::optional<Rational> grid_constant;
            bool stable = true;
            for (const auto& family : constraint_families(chart, dim, k)) {
                const std::string tag = grid + " " + family.label;
                rec.guarded(tag, [&] {
                    const ConstraintSet cs(s, family.thetas);
                    rec.check(regularity_check(cs), tag + ": regular");
                    rec.check(family.constant_det == cs.determinant().as_constant().has_value(),
                              tag + ": det C constancy");
                    const DiracNormalization norm = calibrate_normalization(cs);
                    if (!grid_constant) grid_constant = norm.c_norm;
                    if (*grid_constant != norm.c_norm) stable = false;
                    rec.check(*grid_constant == norm.c_norm, tag + ": same constant as other constraint sets");

                    for (int t = 0; t < 20; ++t) {
                        const Polynomial f = rng.polynomial(chart, 2, 2), g = rng.polynomial(chart, 2, 2);
                        rec.check(dirac_bracket_form(cs, norm, f, g) == dirac_bracket_matrix(cs, f, g),
                                  tag + ": form = matrix, pair " + std::to_string(t));
                    }
                    for (const auto& theta : cs.constraints()) {
                        for (int t = 0; t < 3; ++t) {
                            const Polynomial f = rng.polynomial(chart, 2, 2);
                            rec.check(dirac_bracket_matrix(cs, theta, f).is_zero() &&
                                          dirac_bracket_matrix(cs, f, theta).is_zero() &&
                                          dirac_bracket_form(cs, norm, theta, f).is_zero(),
                                      tag + ": constraint is a Casimir");
                        }
                    }
                    if (family.constant_det) {
                        auto bracket = [&](const Polynomial& a, const Polynomial& b) {
                            auto value = dirac_bracket_matrix(cs, a, b).as_polynomial();
                            if (!value) throw ConsistencyError("Dirac bracket with constant det C is not polynomial");
                            return *value;
                        };
                        const int triples = (dim == 2 ? 10 : 5);
                        for (int t = 0; t < triples; ++t) {
                            auto f = rng.polynomial(chart, 2, 2), g = rng.polynomial(chart, 2, 2),
                                 h = rng.polynomial(chart, 2, 2);
                            rec.check(jacobiator(bracket, f, g, h).is_zero(), tag + ": Jacobi identity");
                        }
                    }
                    if (family.label == "canonical") {
                        const auto reduced = SymplecticData::darboux(dim - k);
                        for (int t = 0; t < 5; ++t) {
                            const Polynomial f = rng.polynomial(reduced.chart(), 2, 2);
                            const Polynomial g = rng.polynomial(reduced.chart(), 2, 2);
                            const Polynomial expected = poisson_bracket(reduced, f, g).embed(chart);
                            rec.check(dirac_bracket_matrix(cs, f.embed(chart), g.embed(chart)) ==
                                          RationalExpr(expected),
                                      tag + ": reduction to the reduced chart");
                        }
                    }
                });
            }
            if (grid_constant && stable) {
                const Rational inverse(1, dim - k);
                std::string reading = *grid_constant == inverse && inverse == 1 ? "matches 1 = 1/(n-k)"
                                      : *grid_constant == inverse                ? "matches 1/(n-k)"
                                      : *grid_constant == 1                      ? "matches 1"
                                                                                 : "matches neither 1 nor 1/(n-k)";
                rec.note(grid + ": c = " + str(*grid_constant) + " (" + reading + ")");
            }
        }
    }
    return rec.finish();
}

SuiteOutcome jacobi_manifold(std::optional<unsigned> n)
{
    reject_n(n, "jacobi-manifold");
    Recorder rec("jacobi-manifold");
    rec.guarded("contact pair", [&] {
        const JacobiDef def = contact_pair();
        const auto& chart = def.chart();
        rec.check(def.is_jacobi(), "contact pair passes the Jacobi-pair check");
        Random rng(6006);
        const int samples = 20;
        for (int t = 0; t < samples; ++t) {
            auto f = rng.polynomial(chart, 2, 2), g = rng.polynomial(chart, 2, 2), h = rng.polynomial(chart, 2, 2);
            rec.check(jacobiator(def, f, g, h).is_zero(), "Jacobi identity, triple " + std::to_string(t));
        }
        for (int t = 0; t < samples; ++t) {
            auto f = rng.polynomial(chart, 2, 2), g = rng.polynomial(chart, 2, 2);
            rec.check(homogenization_check(def, f, g), "homogenization, pair " + std::to_string(t));
        }
        const auto xs = coordinate_functions(chart);
        rec.note("contact pair: {x, y} = " + jacobi_bracket(def, xs[0], xs[1]).to_string() +
                 ", {x, z} = " + jacobi_bracket(def, xs[0], xs[2]).to_string() +
                 ", {y, z} = " + jacobi_bracket(def, xs[1], xs[2]).to_string());
        rec.note("Jacobi identity on " + std::to_string(samples) + " triples, homogenization on " +
                 std::to_string(samples) + " pairs");

        const JacobiDef control(wedge(Multivector::basis(chart, 0), Multivector::basis(chart, 1)),
                                Multivector::basis(chart, 2));
        rec.check(!control.is_jacobi(), "d/dx ^ d/dy with d/dz is rejected");
    });
    return rec.finish();
}

SuiteOutcome volume_criteria(std::optional<unsigned> n)
{
    reject_n(n, "volume-criteria");
    Recorder rec("volume-criteria");
    const auto chart = make_chart({"a", "b", "c", "d"});
    const auto cd = make_chart({"c", "d"});
    auto x = [&](std::size_t i) { return Polynomial::variable(chart, i); };
    auto e = [&](std::size_t i) { return Multivector::basis(chart, i); };
    const Form vol = four_volume(chart, Polynomial(chart, Rational(1)));
    Random rng(7007);
    std::size_t poisson = 0, non_poisson = 0;
    const int bivectors = 35;
    for (int t = 0; t < bivectors; ++t) {
        Multivector lambda(chart, 2);
        switch (t % 5) {
        case 0: lambda = rng.multivector(chart, 2, 2, 6); break;
        case 1: lambda = rng.multivector(chart, 2, 0, 4); break;
        case 2: lambda = rng.polynomial(cd, 2, 3).embed(chart) * wedge(e(0), e(1)); break;
        case 3: lambda = rng.multivector(chart, 2, 1, 6); break;
        default:
            lambda = rng.nonzero_rational() *
                     (x(2) * wedge(e(0), e(1)) + x(0) * wedge(e(1), e(2)) + x(1) * wedge(e(2), e(0)));
        }
        rec.guarded("bivector " + std::to_string(t), [&] {
            const bool p = is_poisson(lambda);
            (p ? poisson : non_poisson)++;
            rec.check(volume_poisson_criterion(lambda, vol) == p, "criterion = is_poisson, bivector " +
                                                                      std::to_string(t));
        });
    }
    rec.check(poisson > 0 && non_poisson > 0, "sample contains Poisson and non-Poisson bivectors");
    rec.note(std::to_string(bivectors) + " bivectors (" + std::to_string(poisson) + " Poisson, " +
             std::to_string(non_poisson) + " not): criterion agrees with [L, L] = 0");

    const int pairs = 32;
    for (int t = 0; t < pairs; ++t) {
        const Multivector l1 = rng.multivector(chart, 2), l2 = rng.multivector(chart, 2);
        // every other pair uses a non-constant volume coefficient
        const Polynomial coeff = t % 2 == 0 ? Polynomial(chart, rng.nonzero_rational())
                                            : Polynomial(chart, Rational(1)) + x(0) * x(0);
        rec.guarded("pair " + std::to_string(t), [&] {
            rec.check(schouten_volume_identity_check(l1, l2, four_volume(chart, coeff)),
                      "volume identity, pair " + std::to_string(t));
        });
    }
    rec.note(std::to_string(pairs) + " bivector pairs satisfy the contraction identity for [L1, L2]");
    return rec.finish();
}

SuiteOutcome non_derivation(std::optional<unsigned> n)
{
    reject_n(n, "non-derivation");
    Recorder rec("non-derivation");
    rec.guarded("witness search", [&] {
        const auto chart = make_darboux_chart(3);
        auto v = [&](const std::string& name) { return Polynomial::variable(chart, name); };
        const SymplecticData sb(magnetic_form({v("q2"), v("q3"), v("q1")}));
        const Multivector x = derived_vf(sb, 2, std::array{v("p1"), v("p2"), v("p3")});
        auto defect = [&](const Polynomial& f, const Polynomial& g) {
            return apply_vector_field(x, poisson_bracket(sb, f, g)) -
                   poisson_bracket(sb, apply_vector_field(x, f), g) - poisson_bracket(sb, f, apply_vector_field(x, g));
        };
        const auto monomials = monomials_up_to(chart, 2);
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            for (std::size_t j = i + 1; j < monomials.size(); ++j) {
                const Polynomial d = defect(monomials[i], monomials[j]);
                if (d.is_zero()) continue;
                rec.check(true, "witness found");
                rec.note("B = (q2, q3, q1), X = X_{p1,p2,p3} = " + x.to_string());
                rec.note("witness f = " + monomials[i].to_string() + ", g = " + monomials[j].to_string() +
                         ": X{f,g} - {Xf,g} - {f,Xg} = " + d.to_string());
                return;
            }
        }
        rec.check(false, "no derivation witness among monomials of degree <= 2");
    });
    return rec.finish();
}

using SuiteFn = SuiteOutcome (*)(std::optional<unsigned>);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"lemma2", lemma2},
        {"pairing", pairing_suite},
        {"power-bracket", power_bracket_suite},
        {"magnetic", magnetic},
        {"jacobi-div", jacobi_div},
        {"xf-identity", xf_identity},
        {"casimir", casimir},
        {"dirac", dirac},
        {"jacobi-manifold", jacobi_manifold},
        {"volume-criteria", volume_criteria},
        {"non-derivation", non_derivation},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> r;
        for (const auto& [name, fn] : registry()) r.push_back(name);
        return r;
    }();
    return names;
}

SuiteOutcome run_suite(std::string_view name, std::optional<unsigned> n)
{
    for (const auto& [suite, fn] : registry())
        if (suite == name) return fn(n);
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

} // namespace npoisson
