#include "npoisson/models.hpp"

#include "npoisson/error.hpp"

namespace npoisson {

namespace {

const ChartPtr& magnetic_chart(const std::array<Polynomial, 3>& b)
{
    const ChartPtr& chart = b[0].chart();
    require_same_chart(chart, b[1].chart());
    require_same_chart(chart, b[2].chart());
    if (chart->dimension() != 6) throw DomainError("magnetic form needs the Darboux chart q1 q2 q3 p1 p2 p3");
    for (const char* name : {"q1", "q2", "q3", "p1", "p2", "p3"})
        if (!chart->find(name)) throw DomainError("magnetic form needs the Darboux chart q1 q2 q3 p1 p2 p3");
    return chart;
}

} // namespace

Form magnetic_form(const std::array<Polynomial, 3>& b)
{
    const ChartPtr& chart = magnetic_chart(b);
    Form w = SymplecticData::darboux_form(chart, 3);
    const std::size_t q[] = {chart->index_of("q1"), chart->index_of("q2"), chart->index_of("q3")};
    for (std::size_t i = 0; i < 3; ++i) w.add({q[(i + 1) % 3], q[(i + 2) % 3]}, -b[i]);
    return w;
}

Polynomial divergence(const std::array<Polynomial, 3>& b)
{
    const ChartPtr& chart = magnetic_chart(b);
    Polynomial r(chart);
    for (std::size_t i = 0; i < 3; ++i) r += partial_derivative(b[i], chart->index_of("q" + std::to_string(i + 1)));
    return r;
}

std::array<Polynomial, 3> angular_momenta(const ChartPtr& chart)
{
    auto v = [&](const char* name) { return Polynomial::variable(chart, name); };
    return {v("q2") * v("p3") - v("q3") * v("p2"), v("q3") * v("p1") - v("q1") * v("p3"),
            v("q1") * v("p2") - v("q2") * v("p1")};
}

JacobiDef contact_pair()
{
    auto chart = make_chart({"x", "y", "z"});
    Multivector dx = Multivector::basis(chart, 0);
    Multivector dy = Multivector::basis(chart, 1);
    Multivector dz = Multivector::basis(chart, 2);
    return JacobiDef(wedge(dx + Polynomial::variable(chart, 1) * dz, dy), dz);
}

} // namespace npoisson
