#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commalg/commute.hpp"
#include "commalg/constructions.hpp"
#include "commalg/error.hpp"
#include "commalg/length.hpp"
#include "commalg/radical.hpp"
#include "commalg/verify.hpp"
#include "commalg/wire.hpp"

namespace py = pybind11;
using namespace commalg;

namespace {

// Reports cross the boundary as JSON text and are decoded by the Python side,
// so the dict layout is the one the CLI writes.
py::object to_python(const json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

GeneratingSystem system_from(const py::object& doc) {
    const auto text = py::module_::import("json").attr("dumps")(doc).cast<std::string>();
    return generator_set_from_json(json::parse(text));
}

GeneratingSystem family_system(const std::string& family, long n, long m, long l, long k, bool witness,
                               const std::string& field) {
    const auto f = Field::parse(field);
    if (family == "bkml") {
        const ConstructionParams p{n, m, l, k};
        return witness ? witness_system(p, f) : build_bkml(p, f);
    }
    if (family == "bkm") {
        const BkmParams p{n, m, k};
        return witness ? bkm_witness_system(p, f) : build_bkm(p, f);
    }
    throw Error(ErrorKind::InvalidParams, "unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact linear algebra for commutative matrix subalgebras and their lengths.";

    static py::exception<Error> error_type(mod, "CommalgError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    mod.def(
        "construct",
        [](const std::string& family, long n, long m, long l, long k, bool witness, const std::string& field) {
            return to_python(generator_set_to_json(family_system(family, n, m, l, k, witness, field)));
        },
        py::arg("family"), py::arg("n"), py::arg("m"), py::arg("l") = 0, py::arg("k"), py::arg("witness") = false,
        py::arg("field") = "rational", "Generator set of a construction as a dict in the generator-file schema.");

    mod.def(
        "dimension_formula",
        [](const std::string& family, long n, long m, long l, long k) {
            if (family == "bkm") return dimension_formula(BkmParams{n, m, k});
            return dimension_formula(ConstructionParams{n, m, l, k});
        },
        py::arg("family"), py::arg("n"), py::arg("m"), py::arg("l") = 0, py::arg("k"));

    mod.def(
        "closure_dimension", [](const py::object& doc) { return algebra_closure(system_from(doc)).dimension(); },
        py::arg("generators"));

    mod.def(
        "li_chain", [](const py::object& doc) { return to_python(to_json(li_chain(system_from(doc)))); },
        py::arg("generators"), "Per-step dims, stabilization step and length against the closure.");

    mod.def(
        "length_of_system",
        [](const py::object& doc, const py::object& target) {
            const auto s = system_from(doc);
            const auto t = target.is_none() ? algebra_closure(s) : algebra_closure(system_from(target));
            return length_of_system(s, t);
        },
        py::arg("generators"), py::arg("target") = py::none(),
        "Length of a system against the closure of `target` (default: its own closure).");

    mod.def(
        "is_maximal_commutative",
        [](const py::object& doc) { return to_python(to_json(is_maximal_commutative(system_from(doc)))); },
        py::arg("generators"));

    mod.def(
        "centralizer_dimension",
        [](const py::object& doc) { return centralizer(system_from(doc).matrices()).dimension(); },
        py::arg("generators"));

    mod.def(
        "bound_check", [](const py::object& doc) { return to_python(to_json(bound_check(system_from(doc)))); },
        py::arg("generators"));

    mod.def(
        "verify",
        [](const std::string& family, long n, long m, long l, long k, const std::string& field, std::size_t samples,
           std::uint64_t seed) {
            const VerifyOptions opts{Field::parse(field), samples, seed};
            const auto report = family == "bkm" ? verify_bkm(BkmParams{n, m, k}, opts)
                                                : verify_bkml(ConstructionParams{n, m, l, k}, opts);
            return to_python(to_json(report, false));
        },
        py::arg("family"), py::arg("n"), py::arg("m"), py::arg("l") = 0, py::arg("k"), py::arg("field") = "rational",
        py::arg("samples") = 25, py::arg("seed") = 0, "Full verification report, without timing.");
}
