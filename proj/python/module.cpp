// Python bindings: every operation takes and returns JSON text so the schemas
// stay identical to the command-line front end.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thf/excision.hpp"
#include "thf/serialize.hpp"
#include "thf/verify.hpp"

#include <json.hpp>

namespace py = pybind11;
using json = nlohmann::json;

namespace {

std::string family_name(const thf::FamilySpec& spec) {
    static const char* kNames[] = {"twist-knot", "whitehead", "borromean", "two-bridge"};
    return kNames[spec.family.index()];
}

std::string report(const thf::FamilySpec& spec) {
    thf::DerivationLog log;
    thf::GradedModule m = thf::run_family(spec, &log);
    json out;
    out["family"] = family_name(spec);
    out["module"] = thf::module_to_json(m);
    out["derivation_log"] = thf::log_to_json(log);
    return out.dump(2);
}

thf::TwistClass twist(const std::string& d) { return {thf::parse_rational(d)}; }

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact twisted Heegaard Floer computations for genus-one excision families";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const thf::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    mod.def(
        "run_family",
        [](const std::string& text, bool toml) {
            return report(thf::parse_family_spec(text, toml));
        },
        py::arg("spec_text"), py::arg("toml") = true,
        "run a family pipeline from a TOML or JSON spec; returns the JSON report");

    mod.def(
        "twist_knot",
        [](long n, const std::string& d) {
            return report({thf::TwistKnotZeroSurgery{n}, twist(d)});
        },
        py::arg("n"), py::arg("d") = "1");

    mod.def(
        "whitehead",
        [](long n, const std::string& d) {
            return report({thf::WhiteheadZeroSurgery{n}, twist(d)});
        },
        py::arg("n"), py::arg("d") = "1");

    mod.def(
        "borromean",
        [](long m, long n, const std::string& d) {
            return report({thf::BorromeanZeroSurgery{m, n}, twist(d)});
        },
        py::arg("m"), py::arg("n"), py::arg("d") = "1");

    mod.def(
        "two_bridge",
        [](long m, int clasp, long n, const std::string& d) {
            return report({thf::TwoBridge{m, clasp, n}, twist(d)});
        },
        py::arg("m"), py::arg("clasp"), py::arg("n"), py::arg("d") = "1");

    mod.def(
        "snf",
        [](const std::string& matrix_json) {
            return thf::snf_to_json(thf::parse_matrix_json(json::parse(matrix_json))).dump(2);
        },
        py::arg("matrix_json"),
        "Smith normal form of a matrix document; returns the JSON report");

    mod.def(
        "complex_homology",
        [](const std::string& complex_json) {
            return thf::homology_to_json(thf::parse_complex_json(json::parse(complex_json)))
                .dump(2);
        },
        py::arg("complex_json"),
        "homology of a chain-complex document; returns the JSON report");

    mod.def(
        "non_relatedness",
        [](long n, long m) {
            thf::NonRelatednessReport r = thf::non_relatedness_check(n, m);
            json out;
            out["obstructed"] = r.obstructed;
            out["first"] = thf::module_to_json(r.first);
            out["second"] = thf::module_to_json(r.second);
            return out.dump(2);
        },
        py::arg("n"), py::arg("m"));

    mod.def("verify", [] {
        py::list out;
        for (const auto& r : thf::run_verification()) {
            py::dict d;
            d["name"] = r.name;
            d["anchor"] = r.anchor;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });
}
