#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "torex/report.hpp"

namespace py = pybind11;
using namespace torex;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2); }

ordered_json identities_json(const IdentitySummary& summary) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : summary.checks) {
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}});
    }
    ordered_json j;
    j["all_pass"] = summary.all_pass();
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Flat complex torus extremality toolkit (C++ core).";

    // Exception mapping: most specific registered last takes precedence.
    py::register_exception<Error>(m, "TorexError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "TorexParseError", PyExc_ValueError);
    py::register_exception<UnknownEntry>(m, "UnknownEntryError", PyExc_ValueError);
    py::register_exception<ParameterOutOfRange>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<SingularBasis>(m, "SingularBasisError", PyExc_ValueError);
    py::register_exception<NumericallyAmbiguous>(m, "AmbiguousVerdict", PyExc_RuntimeError);

    m.def(
        "catalog_names", []() { return catalog_names(); },
        "One-line usage summaries for the built-in lattice catalog.");
    m.def(
        "catalog_json",
        [](const std::string& spec) { return dump(lattice_json(catalog_lookup(spec))); },
        py::arg("spec"), "A catalog lattice in its JSON file form.");

    py::class_<TorusInput>(m, "Torus", "A flat torus ready for analysis.")
        .def_static(
            "from_catalog",
            [](const std::string& spec, double tol) { return torus_from_catalog(spec, tol); },
            py::arg("spec"), py::arg("tol") = 1e-9)
        .def_static(
            "from_file",
            [](const std::string& path, double tol) { return torus_from_file(path, tol); },
            py::arg("path"), py::arg("tol") = 1e-9)
        .def_readonly("label", &TorusInput::label)
        .def_property_readonly("exact", &TorusInput::exact_mode)
        .def_property_readonly("complex_structure", &TorusInput::complex_structure)
        .def_readonly("notes", &TorusInput::notes)
        .def(
            "dual_json", [](const TorusInput& t) { return dump(dual_json(t)); },
            "Dual lattice basis (columns are generators).")
        .def(
            "spectrum_json",
            [](const TorusInput& t, int levels) { return dump(spectrum_json(t, levels)); },
            py::arg("levels") = 3, "The smallest eigenvalue levels with representatives.")
        .def(
            "check_kahler_json",
            [](const TorusInput& t, int k, bool oracle) {
                return dump(kahler_check_at(t, k, oracle).json);
            },
            py::arg("k") = 1, py::arg("oracle") = true,
            "Extremality feasibility system at lambda_k with an embedded certificate.")
        .def(
            "check_immersion_json",
            [](const TorusInput& t, bool oracle) {
                return dump(immersion_check_first(t, oracle).json);
            },
            py::arg("oracle") = true,
            "First-eigenfunction immersion system with an embedded certificate.")
        .def(
            "verify_identities_json",
            [](const TorusInput& t, int combos) {
                return dump(identities_json(identity_suite_first(t, combos)));
            },
            py::arg("combos") = 5, "Eigenfunction identity suite on the first level.")
        .def(
            "derivative_check_json",
            [](const TorusInput& t, const std::string& alpha, int k, double step) {
                return dump(
                    derivative_check_json(t, parse_alpha_json(ordered_json::parse(alpha)), k,
                                          step));
            },
            py::arg("alpha"), py::arg("k") = 1, py::arg("step") = 1e-4,
            "One-sided eigenvalue derivatives against the Q-form extremes; `alpha` is the "
            "JSON text of a deformation direction file.")
        .def(
            "report_json",
            [](const TorusInput& t, int k, int levels, int combos, bool oracle,
               bool identities) {
                ReportOptions opts;
                opts.k = k;
                opts.levels = levels;
                opts.identity_combos = combos;
                opts.run_oracle = oracle;
                opts.run_identities = identities;
                return dump(emit_report(t, opts).json);
            },
            py::arg("k") = 1, py::arg("levels") = 1, py::arg("combos") = 5,
            py::arg("oracle") = true, py::arg("identities") = true,
            "Full analysis report as JSON.")
        .def(
            "report_text",
            [](const TorusInput& t, int k, int levels, int combos, bool oracle,
               bool identities) {
                ReportOptions opts;
                opts.k = k;
                opts.levels = levels;
                opts.identity_combos = combos;
                opts.run_oracle = oracle;
                opts.run_identities = identities;
                return emit_report(t, opts).text;
            },
            py::arg("k") = 1, py::arg("levels") = 1, py::arg("combos") = 5,
            py::arg("oracle") = true, py::arg("identities") = true,
            "Full analysis report as human-readable text.")
        .def("__repr__", [](const TorusInput& t) {
            return "<torex.Torus '" + t.label + "' (" +
                   (t.exact_mode() ? "exact" : "float") + ")>";
        });
}
