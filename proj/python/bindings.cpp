#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rdelab/closedform.hpp"
#include "rdelab/engine.hpp"
#include "rdelab/errors.hpp"
#include "rdelab/invariants.hpp"
#include "rdelab/symmetry.hpp"

namespace py = pybind11;
using namespace rdelab;

namespace {

// Rationals cross the boundary as text: anything whose str() is "p" or "p/q"
// (int, str, fractions.Fraction) comes in, fractions.Fraction goes out.
Rational to_rational(const py::handle& value) {
    return Rational::parse(py::str(value).cast<std::string>());
}

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.to_string());
}

py::list to_fractions(const std::vector<Rational>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_fraction(v));
    return out;
}

InitialConditions to_initial(const py::sequence& seeds) {
    if (py::len(seeds) != 5) throw py::value_error("expected five initial values x_{-4}, ..., x_0");
    std::array<Rational, 5> values;
    for (std::size_t i = 0; i < 5; ++i) values[i] = to_rational(seeds[i]);
    return InitialConditions(values);
}

// A CoefficientSpec, a list (periodic) or a scalar (constant).
CoefficientSpec to_spec(const py::handle& value) {
    if (py::isinstance<CoefficientSpec>(value)) return value.cast<CoefficientSpec>();
    if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
        std::vector<Rational> values;
        for (const auto& item : value) values.push_back(to_rational(item));
        return CoefficientSpec::periodic(std::move(values));
    }
    return CoefficientSpec::constant(to_rational(value));
}

ExponentPattern to_pattern(const py::handle& value) {
    if (py::isinstance<py::str>(value)) return ExponentPattern::parse(value.cast<std::string>());
    const auto items = value.cast<std::vector<std::int64_t>>();
    if (items.size() != 4) throw py::value_error("expected four integer exponents");
    return ExponentPattern{{items[0], items[1], items[2], items[3]}};
}

py::list seeds_list(const InitialConditions& ic) {
    return to_fractions(std::vector<Rational>(ic.seeds().begin(), ic.seeds().end()));
}

}  // namespace

PYBIND11_MODULE(_rdelab, m) {
    m.doc() = "Exact rational evaluation, closed forms and symmetries of a fifth-order difference equation";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<IndexBeyondExplicitData>(m, "IndexBeyondExplicitData", base);
    py::register_exception<ValueUnavailable>(m, "ValueUnavailable", base);
    py::register_exception<ZeroProduct>(m, "ZeroProduct", base);
    auto violated = py::register_exception<ConditionViolated>(m, "ConditionViolated", base);
    py::register_exception<SeedZero>(m, "SeedZero", violated);
    py::register_exception<FormulaDenominatorZero>(m, "FormulaDenominatorZero", base);
    py::register_exception<DegenerateScale>(m, "DegenerateScale", base);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base);

    py::class_<CoefficientSpec>(m, "CoefficientSpec")
        .def_static("constant", [](const py::handle& v) { return CoefficientSpec::constant(to_rational(v)); })
        .def_static("periodic", [](const py::sequence& vs) {
            std::vector<Rational> values;
            for (const auto& v : vs) values.push_back(to_rational(v));
            return CoefficientSpec::periodic(std::move(values));
        })
        .def_static("explicit_list", [](const py::sequence& vs) {
            std::vector<Rational> values;
            for (const auto& v : vs) values.push_back(to_rational(v));
            return CoefficientSpec::explicit_list(std::move(values));
        })
        .def_property_readonly("kind", [](const CoefficientSpec& s) { return to_string(s.kind()); })
        .def_property_readonly("values", [](const CoefficientSpec& s) { return to_fractions(s.values()); })
        .def_property_readonly("period", &CoefficientSpec::period)
        .def("at", [](const CoefficientSpec& s, std::int64_t n) { return to_fraction(s.at(n)); })
        .def("__eq__", [](const CoefficientSpec& a, const CoefficientSpec& b) { return a == b; })
        .def("__repr__", [](const CoefficientSpec& s) {
            std::string text = "CoefficientSpec." + to_string(s.kind()) + "([";
            for (std::size_t i = 0; i < s.values().size(); ++i) text += (i ? ", " : "") + s.values()[i].to_string();
            return text + "])";
        });

    py::class_<Trajectory>(m, "Trajectory")
        .def_property_readonly_static("first_index", [](const py::object&) { return Trajectory::first_index; })
        .def_property_readonly("last_index", &Trajectory::last_index)
        .def_property_readonly("values", [](const Trajectory& t) { return to_fractions(t.values()); })
        .def_property_readonly("singularity",
                               [](const Trajectory& t) -> py::object {
                                   if (!t.singularity()) return py::none();
                                   return py::make_tuple(t.singularity()->index, to_string(t.singularity()->reason));
                               })
        .def("x", [](const Trajectory& t, std::int64_t n) { return to_fraction(t.x(n)); })
        .def("u", [](const Trajectory& t, std::int64_t m) { return to_fraction(t.u(m)); })
        .def("__len__", [](const Trajectory& t) { return t.values().size(); });

    m.def(
        "iterate",
        [](const py::sequence& initial, const py::handle& a, const py::handle& b, std::int64_t steps) {
            return iterate(to_initial(initial), to_spec(a), to_spec(b), steps);
        },
        py::arg("initial"), py::arg("a"), py::arg("b"), py::arg("steps"),
        "Iterate from x_{-4}..x_0 for `steps` steps; stops early at a singular step.");

    m.def("residue_index", &residue_index, py::arg("n"), py::arg("j"));
    m.def(
        "x_general",
        [](const py::sequence& initial, const py::handle& a, const py::handle& b, std::int64_t n, int j) {
            return to_fraction(x_general(to_initial(initial), to_spec(a), to_spec(b), n, j));
        },
        py::arg("initial"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("j"));
    m.def(
        "residue_class",
        [](const py::sequence& initial, const py::handle& a, const py::handle& b, int j, std::int64_t n_max) {
            GeneralSolution solution(to_initial(initial), to_spec(a), to_spec(b));
            return to_fractions(solution.residue_class(j, n_max));
        },
        py::arg("initial"), py::arg("a"), py::arg("b"), py::arg("j"), py::arg("n_max"));
    m.def(
        "x_const_coeff",
        [](const py::sequence& initial, const py::handle& a, const py::handle& b, std::int64_t n, int j) {
            return to_fraction(x_const_coeff(to_initial(initial), to_rational(a), to_rational(b), n, j));
        },
        py::arg("initial"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("j"));
    m.def(
        "x_two_periodic",
        [](const py::sequence& initial, const py::handle& a0, const py::handle& a1, const py::handle& b0,
           const py::handle& b1, std::int64_t n, int j) {
            return to_fraction(x_two_periodic(to_initial(initial), to_rational(a0), to_rational(a1), to_rational(b0),
                                              to_rational(b1), n, j));
        },
        py::arg("initial"), py::arg("a0"), py::arg("a1"), py::arg("b0"), py::arg("b1"), py::arg("n"), py::arg("j"));
    m.def(
        "forbidden_check",
        [](const py::sequence& initial, const py::handle& a, const py::handle& b, std::int64_t n) {
            py::list out;
            for (const auto& v : forbidden_check(to_initial(initial), to_spec(a), to_spec(b), n)) {
                py::dict entry;
                entry["family"] = to_string(v.family);
                entry["description"] = v.description;
                entry["tag"] = v.tag ? py::object(py::make_tuple(v.tag->s, v.tag->parity, to_string(v.tag->side)))
                                     : py::object(py::none());
                out.append(entry);
            }
            return out;
        },
        py::arg("initial"), py::arg("a"), py::arg("b"), py::arg("n"));

    m.def(
        "v_sequence", [](const Trajectory& traj) { return to_fractions(v_sequence(traj).entries); },
        py::arg("trajectory"));
    m.def(
        "v_closed_form",
        [](const py::handle& v0, const py::handle& v1, const py::handle& a, const py::handle& b, std::int64_t n,
           int j) { return to_fraction(v_closed_form(to_rational(v0), to_rational(v1), to_spec(a), to_spec(b), n, j)); },
        py::arg("v0"), py::arg("v1"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("j"),
        "V_{2n+j} from V_0 and V_1.");
    m.def("weight", &weight, py::arg("m"));

    m.def(
        "constraint_check", [](const py::handle& pattern) { return constraint_check(to_pattern(pattern)); },
        py::arg("pattern"));
    m.def(
        "scale_ics",
        [](const py::sequence& initial, const py::handle& pattern, const py::handle& t) {
            return seeds_list(scale_ics(to_initial(initial), to_pattern(pattern), to_rational(t)));
        },
        py::arg("initial"), py::arg("pattern"), py::arg("t"));
    m.def(
        "verify_group_invariance",
        [](const py::sequence& initial, const py::handle& a, const py::handle& b, const py::handle& pattern,
           const py::handle& t, std::int64_t steps) {
            const auto report =
                verify_group_invariance(to_initial(initial), to_spec(a), to_spec(b), to_pattern(pattern),
                                        to_rational(t), steps);
            py::dict out;
            out["pattern"] = report.pattern.to_string();
            out["t"] = to_fraction(report.t);
            out["accepted"] = report.accepted;
            out["status"] = to_string(report.status);
            out["first_index"] = report.first_index;
            out["residuals"] = to_fractions(report.residuals);
            out["first_failure"] = report.first_failure;
            out["incomparable_from"] = report.incomparable_from;
            return out;
        },
        py::arg("initial"), py::arg("a"), py::arg("b"), py::arg("pattern"), py::arg("t"), py::arg("steps"));
}
