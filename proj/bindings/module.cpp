#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liemc/serialize.hpp"
#include "liemc/solver.hpp"
#include "liemc/verify.hpp"

namespace py = pybind11;
using namespace liemc;

namespace {

Element elem_from_json_str(const std::string& s) { return element_from_json(Json::parse(s)); }
std::string elem_to_json_str(const Element& e) { return element_to_json(e).dump(); }

}  // namespace

PYBIND11_MODULE(_liemc, m) {
    m.doc() = "exact Maurer-Cartan calculus on truncated free graded Lie algebras";

    py::class_<Rational>(m, "Rational")
        .def(py::init<long>())
        .def(py::init<long, long>())
        .def_static("parse", [](const std::string& s) { return Rational::parse(s); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("is_zero", &Rational::is_zero);

    py::class_<Generator>(m, "Generator")
        .def(py::init<std::string, int>(), py::arg("name"), py::arg("degree"))
        .def_readonly("name", &Generator::name)
        .def_readonly("degree", &Generator::degree);

    py::class_<AlgebraContext, ContextPtr>(m, "AlgebraContext")
        .def_static("make", &AlgebraContext::make, py::arg("generators"), py::arg("truncation"))
        .def_property_readonly("truncation", &AlgebraContext::truncation)
        .def("__len__", &AlgebraContext::size);

    py::class_<Element>(m, "Element")
        .def_static("zero", &Element::zero)
        .def_static("unit", &Element::unit)
        .def_static("generator",
                    [](const ContextPtr& ctx, const std::string& name) {
                        return Element::generator(ctx, name);
                    })
        .def_property_readonly("context", &Element::context)
        .def("is_zero", &Element::is_zero)
        .def("term_count", &Element::term_count)
        .def("min_length", &Element::min_length)
        .def("homogeneous_part", &Element::homogeneous_part)
        .def("degree_part", &Element::degree_part)
        .def("truncate_length", &Element::truncate_length)
        .def("constant_term", &Element::constant_term)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__rmul__", [](const Element& e, const Rational& c) { return c * e; })
        .def("scale", [](const Element& e, const Rational& c) { return c * e; })
        .def("__str__", &Element::str)
        .def("__repr__", [](const Element& e) { return "<Element " + e.str() + ">"; })
        .def("to_json", &elem_to_json_str)
        .def_static("from_json", &elem_from_json_str);

    m.def("bracket", &bracket);
    m.def("ad_power", &ad_power);
    m.def("exp", [](const Element& x) { return liemc::exp(x); });
    m.def("log", [](const Element& g) { return liemc::log(g); });
    m.def("bch", &bch);
    m.def("bch_multi", [](const std::vector<Element>& xs) {
        return bch_multi(std::span<const Element>(xs.data(), xs.size()));
    });
    m.def("exp_ad", &exp_ad);
    m.def("is_primitive", &is_primitive);
    m.def("bernoulli", &bernoulli);

    py::class_<Derivation>(m, "Derivation")
        .def("__call__", &Derivation::operator())
        .def("image", &Derivation::image)
        .def("component", &Derivation::component);

    py::class_<Cdgl>(m, "Cdgl")
        .def_readonly("ctx", &Cdgl::ctx)
        .def_readonly("d", &Cdgl::d);

    py::class_<McCheck>(m, "McCheck")
        .def_readonly("ok", &McCheck::ok)
        .def_readonly("residual", &McCheck::residual);

    m.def("check_d_squared", [](const Cdgl& L) { return check_d_squared(L).ok; });
    m.def("is_mc", &is_mc);
    m.def("gauge", &gauge);
    m.def("path_check", &path_check);

    py::class_<GroupMorphism>(m, "GroupMorphism")
        .def("__call__", &GroupMorphism::operator())
        .def("after", &GroupMorphism::after)
        .def("inverse", &GroupMorphism::inverse)
        .def("pow", &GroupMorphism::pow)
        .def(py::self == py::self);

    py::class_<LsInterval>(m, "LsInterval")
        .def_readonly("cdgl", &LsInterval::cdgl)
        .def("a", &LsInterval::a_elem)
        .def("b", &LsInterval::b_elem)
        .def("x", &LsInterval::x_elem);
    m.def("ls_interval", &ls_interval, py::arg("truncation"));

    py::class_<CircuitModel>(m, "CircuitModel")
        .def_readonly("cdgl", &CircuitModel::cdgl)
        .def_readonly("k", &CircuitModel::k)
        .def_readonly("sigma", &CircuitModel::sigma)
        .def_readonly("tau", &CircuitModel::tau)
        .def("v", &CircuitModel::v)
        .def("x", &CircuitModel::x)
        .def("loop", &CircuitModel::loop)
        .def("to_json", [](const CircuitModel& c) { return circuit_to_json(c).dump(); });
    m.def("circuit_model", &circuit_model, py::arg("k"), py::arg("truncation"));

    py::class_<TriangleModel>(m, "TriangleModel")
        .def_readonly("cdgl", &TriangleModel::cdgl)
        .def_readonly("sigma", &TriangleModel::sigma)
        .def_readonly("tau", &TriangleModel::tau)
        .def_readonly("omega", &TriangleModel::omega)
        .def_readonly("beta", &TriangleModel::beta)
        .def("v", &TriangleModel::v)
        .def("x", &TriangleModel::x)
        .def("e", &TriangleModel::e_elem)
        .def("loop", &TriangleModel::loop)
        .def("to_json", [](const TriangleModel& t) { return triangle_to_json(t).dump(); });
    m.def("triangle_model", &triangle_model, py::arg("truncation"));
    m.def("symmetric_triangle", &symmetric_triangle, py::arg("omega"), py::arg("beta"),
          py::arg("truncation"));

    py::class_<SolveD1Result>(m, "SolveD1Result")
        .def_property_readonly("exact", &SolveD1Result::exact)
        .def_readonly("solution", &SolveD1Result::solution)
        .def_readonly("obstruction", &SolveD1Result::obstruction);
    m.def("solve_d1", &solve_d1, py::arg("cdgl"), py::arg("rhs"), py::arg("length"),
          py::arg("degree"));
    m.def("d1_cycles", &d1_cycles, py::arg("cdgl"), py::arg("length"), py::arg("degree"));

    py::class_<GaugePathResult>(m, "GaugePathResult")
        .def_property_readonly("found", &GaugePathResult::found)
        .def_readonly("path", &GaugePathResult::path)
        .def_readonly("obstruction", &GaugePathResult::obstruction);
    m.def("gauge_path", &gauge_path, py::arg("cdgl"), py::arg("A"), py::arg("B"));
    m.def("loop_coefficient", &loop_coefficient);

    py::class_<NamedResidual>(m, "NamedResidual")
        .def_readonly("name", &NamedResidual::name)
        .def_readonly("residual", &NamedResidual::residual)
        .def_property_readonly("ok", &NamedResidual::ok);

    py::class_<InvariantMcResult>(m, "InvariantMcResult")
        .def_readonly("P", &InvariantMcResult::P)
        .def_readonly("w", &InvariantMcResult::w)
        .def_readonly("alpha", &InvariantMcResult::alpha)
        .def_readonly("omega", &InvariantMcResult::omega)
        .def_readonly("beta", &InvariantMcResult::beta)
        .def_readonly("checks", &InvariantMcResult::checks)
        .def("all_ok", &InvariantMcResult::all_ok);
    m.def("sigma_invariant_mc", [](const CircuitModel& c) { return sigma_invariant_mc(c).P; });
    m.def("full_invariant_mc", &full_invariant_mc);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("anchor", &CheckResult::anchor)
        .def_property_readonly("ok", [](const CheckResult& c) { return c.pass; })
        .def_readonly("residual", &CheckResult::residual);
    m.def(
        "run_verify",
        [](uint64_t seed, int truncation, int trials) {
            return run_verify(VerifyOptions{seed, truncation, trials});
        },
        py::arg("seed") = 12345, py::arg("truncation") = 4, py::arg("trials") = 20);
}
