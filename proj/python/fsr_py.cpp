#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsr/cartier.hpp"
#include "fsr/cli.hpp"
#include "fsr/errors.hpp"
#include "fsr/io.hpp"
#include "fsr/regularity.hpp"
#include "fsr/threshold.hpp"

namespace py = pybind11;
using namespace fsr;

namespace {

py::object fraction(const RationalValue& v) {
    static const py::object cls = py::module_::import("fractions").attr("Fraction");
    const py::object to_int = py::module_::import("builtins").attr("int");
    return cls(to_int(v.numerator().get_str()), to_int(v.denominator().get_str()));
}

std::vector<std::string> names(const MonomialIdeal& a, const RingSpec& spec) {
    return ideal_to_json(a, spec.variables).get<std::vector<std::string>>();
}

} // namespace

PYBIND11_MODULE(fsrpy, m) {
    m.doc() = "F-thresholds, Cartier cores and regularity limits of Stanley-Reisner rings";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the fsr command line in-process; returns (exit code, stdout, stderr).");

    m.def(
        "min_primes",
        [](const std::string& ring) {
            const auto spec = load_ring(ring);
            std::vector<std::vector<std::string>> out;
            for (const auto& p : spec.ring.minimal_primes())
                out.push_back(varset_to_json(p.variables, spec.variables).get<std::vector<std::string>>());
            return out;
        },
        py::arg("ring"));

    m.def(
        "nu",
        [](const std::string& ring, const std::string& a, const std::string& j, unsigned e) {
            const auto spec = load_ring(ring);
            return nu_value(spec.ring, parse_ideal(a, spec.variables), parse_ideal(j, spec.variables),
                            spec.ring.level(e))
                .nu;
        },
        py::arg("ring"), py::arg("a"), py::arg("j"), py::arg("e"));

    m.def(
        "f_threshold",
        [](const std::string& ring, const std::string& a, const std::string& j) {
            const auto spec = load_ring(ring);
            return fraction(
                f_threshold(spec.ring, parse_ideal(a, spec.variables), parse_ideal(j, spec.variables)).value);
        },
        py::arg("ring"), py::arg("a"), py::arg("j"));

    m.def(
        "contraction",
        [](const std::string& ring, const std::string& j, unsigned e) {
            const auto spec = load_ring(ring);
            return names(contraction_ideal({spec.ring, parse_ideal(j, spec.variables), spec.ring.level(e)}), spec);
        },
        py::arg("ring"), py::arg("j"), py::arg("e"), "Generators of J_e as monomial strings.");

    m.def(
        "cartier_core",
        [](const std::string& ring, const std::string& j) {
            const auto spec = load_ring(ring);
            return names(cartier_core(spec.ring, parse_ideal(j, spec.variables)).core, spec);
        },
        py::arg("ring"), py::arg("j"));

    m.def(
        "cartier_threshold",
        [](const std::string& ring, const std::string& a, const std::string& j) {
            const auto spec = load_ring(ring);
            return fraction(
                cartier_threshold(spec.ring, parse_ideal(a, spec.variables), parse_ideal(j, spec.variables)).value);
        },
        py::arg("ring"), py::arg("a"), py::arg("j"));

    m.def(
        "regularity_limit",
        [](const std::string& ring, const std::string& j) {
            const auto spec = load_ring(ring);
            return regularity_limit(spec.ring, parse_ideal(j, spec.variables)).limit;
        },
        py::arg("ring"), py::arg("j"));

    m.def(
        "scaled_regularity",
        [](const std::string& ring, const std::string& j, unsigned e) {
            const auto spec = load_ring(ring);
            return fraction(scaled_regularity_at_level(spec.ring, parse_ideal(j, spec.variables), spec.ring.level(e)));
        },
        py::arg("ring"), py::arg("j"), py::arg("e"));
}
