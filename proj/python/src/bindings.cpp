// Python bindings for the main operations. Polynomials, forms and multivectors
// cross the boundary as wrapped objects that print in the library's canonical
// syntax; rational constants become fractions.Fraction.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "npoisson/brackets.hpp"
#include "npoisson/dirac.hpp"
#include "npoisson/error.hpp"
#include "npoisson/models.hpp"
#include "npoisson/parser.hpp"
#include "npoisson/scenario.hpp"
#include "npoisson/schouten.hpp"
#include "npoisson/suites.hpp"
#include "npoisson/tensor_parser.hpp"

namespace py = pybind11;
using namespace npoisson;

namespace {

// Charts are shared immutable objects; pybind11 cannot hold shared_ptr<const T>
// directly, so they travel in a small handle.
struct ChartHandle {
    ChartPtr ptr;
};

py::object fraction(const Rational& r)
{
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

template <class T>
T tensor_from_text(const std::string& text, const ChartHandle& chart)
{
    auto value = parse_tensor(text, chart.ptr);
    if (auto* p = std::get_if<Polynomial>(&value)) return T(*p);
    if (auto* t = std::get_if<T>(&value)) return *t;
    throw DomainError("'" + text + "' is a " + describe(value));
}

template <class T>
void bind_tensor(py::module_& m, const char* name)
{
    py::class_<T>(m, name)
        .def(py::init(&tensor_from_text<T>), py::arg("text"), py::arg("chart"))
        .def_property_readonly("grade", &T::grade)
        .def_property_readonly("chart", [](const T& t) { return ChartHandle{t.chart()}; })
        .def("is_zero", &T::is_zero)
        .def("__add__", [](const T& a, const T& b) { return a + b; })
        .def("__sub__", [](const T& a, const T& b) { return a - b; })
        .def("__neg__", [](const T& a) { return -a; })
        .def("__mul__", [](const T& a, const Polynomial& f) { return a * f; })
        .def("__rmul__", [](const T& a, const Polynomial& f) { return f * a; })
        .def("__xor__", [](const T& a, const T& b) { return wedge(a, b); })
        .def("__eq__", [](const T& a, const T& b) { return a == b; })
        .def("__str__", &T::to_string)
        .def("__repr__", [name](const T& t) { return std::string(name) + "('" + t.to_string() + "')"; });
}

py::dict suite_dict(const SuiteOutcome& out)
{
    py::dict d;
    d["name"] = out.name;
    d["passed"] = out.passed();
    d["checks"] = out.checks;
    d["failures"] = out.failures;
    d["details"] = out.details;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact exterior calculus for generalized Poisson, Nambu, Jacobi and Dirac brackets";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<ChartHandle>(m, "Chart")
        .def(py::init([](std::vector<std::string> names) { return ChartHandle{make_chart(std::move(names))}; }))
        .def_static("darboux", [](std::size_t n) { return ChartHandle{make_darboux_chart(n)}; })
        .def_property_readonly("names", [](const ChartHandle& c) { return c.ptr->names(); })
        .def_property_readonly("dimension", [](const ChartHandle& c) { return c.ptr->dimension(); })
        .def("__eq__", [](const ChartHandle& a, const ChartHandle& b) { return same_chart(a.ptr, b.ptr); })
        .def("__repr__", [](const ChartHandle& c) {
            std::string s = "Chart([";
            for (std::size_t i = 0; i < c.ptr->dimension(); ++i) s += (i ? ", '" : "'") + c.ptr->name(i) + "'";
            return s + "])";
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text, const ChartHandle& chart) { return parse_expr(text, chart.ptr); }),
             py::arg("text"), py::arg("chart"))
        .def_property_readonly("chart", [](const Polynomial& p) { return ChartHandle{p.chart()}; })
        .def_property_readonly("degree", &Polynomial::total_degree)
        .def("is_zero", &Polynomial::is_zero)
        .def("constant", [](const Polynomial& p) -> py::object {
            auto c = p.as_constant();
            return c ? fraction(*c) : py::none();
        })
        .def("diff", [](const Polynomial& p, const std::string& var) {
            return partial_derivative(p, p.chart()->index_of(var));
        })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__pow__", [](const Polynomial& a, unsigned e) { return a.pow(e); })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

    py::class_<RationalExpr>(m, "RationalExpr")
        .def_property_readonly("numerator", &RationalExpr::numerator)
        .def_property_readonly("denominator", &RationalExpr::denominator)
        .def("is_zero", &RationalExpr::is_zero)
        .def("polynomial", &RationalExpr::as_polynomial)
        .def("__eq__", [](const RationalExpr& a, const RationalExpr& b) { return a == b; })
        .def("__str__", &RationalExpr::to_string)
        .def("__repr__", [](const RationalExpr& r) { return "RationalExpr('" + r.to_string() + "')"; });

    bind_tensor<Form>(m, "Form");
    bind_tensor<Multivector>(m, "Multivector");

    m.def("d", &differential, "Differential of a function.");
    m.def("exterior_derivative", &exterior_derivative);
    m.def("contract", &contract, py::arg("multivector"), py::arg("form"));
    m.def("pair", &pair, py::arg("form"), py::arg("multivector"));
    m.def("form_power", &form_power);

    py::class_<SymplecticData>(m, "Symplectic")
        .def(py::init<Form>(), py::arg("omega"))
        .def_static("darboux", &SymplecticData::darboux)
        .def_property_readonly("chart", [](const SymplecticData& s) { return ChartHandle{s.chart()}; })
        .def_property_readonly("omega", &SymplecticData::omega)
        .def_property_readonly("bivector", &SymplecticData::bivector)
        .def_property_readonly("n", &SymplecticData::half_dimension)
        .def_property_readonly("closed", &SymplecticData::is_closed)
        .def("volume", &SymplecticData::liouville_volume);

    m.def("poisson_bracket", &poisson_bracket);
    m.def("omega_power_bracket",
          [](const SymplecticData& s, unsigned k, const std::vector<Polynomial>& fs) {
              return omega_power_bracket(s, k, fs);
          });
    m.def("derived_vf", [](const SymplecticData& s, unsigned k, const std::vector<Polynomial>& fs) {
        return derived_vf(s, k, fs);
    });
    m.def("hamiltonian_vf", &hamiltonian_vf);
    m.def("nambu_bracket", [](const Form& volume, const Polynomial& gamma, const std::vector<Polynomial>& fs) {
        return nambu_top_bracket(volume, gamma, fs);
    });
    m.def("form_bracket", [](const Form& volume, const Form& alpha, const std::vector<Polynomial>& fs) {
        return bracket_rational(BracketDef(volume, alpha), fs);
    });
    m.def("jacobiator", [](const SymplecticData& s, const Polynomial& f, const Polynomial& g,
                           const Polynomial& h) { return jacobiator(s, f, g, h); });

    m.def("schouten", &schouten);
    m.def("is_poisson", &is_poisson);
    m.def("volume_poisson_criterion", &volume_poisson_criterion);
    m.def("jacobi_pair_check", &jacobi_pair_check);
    m.def("jacobi_bracket", [](const Multivector& lambda, const Multivector& field, const Polynomial& f,
                               const Polynomial& g) { return jacobi_bracket(JacobiDef(lambda, field), f, g); });
    m.def("homogenization_check", [](const Multivector& lambda, const Multivector& field, const Polynomial& f,
                                     const Polynomial& g) {
        return homogenization_check(JacobiDef(lambda, field), f, g);
    });

    m.def("magnetic_form", [](const Polynomial& b1, const Polynomial& b2, const Polynomial& b3) {
        return magnetic_form({b1, b2, b3});
    });

    py::class_<ConstraintSet>(m, "Constraints")
        .def(py::init<SymplecticData, std::vector<Polynomial>>(), py::arg("symplectic"), py::arg("thetas"))
        .def_property_readonly("determinant", &ConstraintSet::determinant)
        .def("regular", [](const ConstraintSet& cs) { return regularity_check(cs); })
        .def("matrix_bracket", &dirac_bracket_matrix)
        .def("form_quotient", &dirac_form_quotient)
        .def("calibrate", [](const ConstraintSet& cs) { return fraction(calibrate_normalization(cs).c_norm); })
        .def("form_bracket", [](const ConstraintSet& cs, const Polynomial& f, const Polynomial& g) {
            return dirac_bracket_form(cs, calibrate_normalization(cs), f, g);
        });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::optional<unsigned> n) { return suite_dict(run_suite(name, n)); },
        py::arg("name"), py::arg("n") = py::none());
    m.def(
        "run_scenario",
        [](const std::string& text, bool machine) {
            const Report report = run_scenario(parse_scenario(text));
            std::ostringstream out;
            if (machine)
                write_machine_report(out, report);
            else
                write_report(out, report);
            return py::make_tuple(report.success(), out.str());
        },
        py::arg("text"), py::arg("machine") = false,
        "Parse and run a scenario given as text; returns (success, report).");
}
