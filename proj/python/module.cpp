#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asakit/body_io.hpp"
#include "asakit/coarea.hpp"
#include "asakit/verify.hpp"

namespace py = pybind11;

namespace {

struct PyBody {
    asakit::BodyPtr ptr;
};

py::dict report_to_dict(const asakit::AsaReport& r) {
    py::dict d;
    d["p"] = r.p;
    d["n"] = r.n;
    d["value_boundary"] = r.value_boundary;
    d["value_sphere"] = r.value_sphere;
    d["value_cm_inf"] = r.value_cm_inf;
    d["value_lutwak_inf"] = r.value_lutwak_inf;
    d["max_pairwise_rel_gap"] = r.max_pairwise_rel_gap;
    d["resolution"] = r.resolution;
    d["seed"] = r.seed;
    d["cm_converged"] = r.cm_converged;
    d["lutwak_converged"] = r.lutwak_converged;
    return d;
}

int resolve(const PyBody& body, int resolution) {
    return resolution > 0 ? resolution : asakit::default_resolution(body.ptr->dim());
}

}  // namespace

PYBIND11_MODULE(_asakit, m) {
    m.doc() = "L_p affine surface area of convex bodies";

    py::register_exception<asakit::SpecParseError>(m, "SpecParseError");
    py::register_exception<asakit::OriginNotInterior>(m, "OriginNotInterior");

    py::class_<PyBody>(m, "Body")
        .def_property_readonly("dim", [](const PyBody& b) { return b.ptr->dim(); })
        .def_property_readonly("smooth", [](const PyBody& b) { return b.ptr->smooth(); })
        .def("support", [](const PyBody& b, const asakit::Vec& u) {
            return asakit::support(*b.ptr, asakit::Direction::of(u));
        });

    m.def("body_from_json", [](const std::string& text) {
        nlohmann::json spec;
        try {
            spec = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw asakit::SpecParseError(std::string("invalid JSON: ") + e.what());
        }
        return PyBody{asakit::parse_body(spec)};
    });
    m.def("load_body", [](const std::string& path) { return PyBody{asakit::load_body(path)}; });

    m.def(
        "asa_boundary",
        [](const PyBody& b, double p, int resolution, std::uint64_t seed) {
            return asakit::asa_boundary(*b.ptr, p, resolve(b, resolution), seed);
        },
        py::arg("body"), py::arg("p") = 1.0, py::arg("resolution") = 0, py::arg("seed") = 0);
    m.def(
        "asa_sphere",
        [](const PyBody& b, double p, int resolution, std::uint64_t seed) {
            return asakit::asa_sphere(*b.ptr, p, resolve(b, resolution), seed);
        },
        py::arg("body"), py::arg("p") = 1.0, py::arg("resolution") = 0, py::arg("seed") = 0);
    m.def(
        "asa_cm_infimum",
        [](const PyBody& b, double p, int resolution, std::uint64_t seed) {
            return asakit::asa_cm_infimum(*b.ptr, p, resolve(b, resolution), seed).value;
        },
        py::arg("body"), py::arg("p") = 1.0, py::arg("resolution") = 0, py::arg("seed") = 0);
    m.def(
        "asa_lutwak_infimum",
        [](const PyBody& b, double p, int resolution, std::uint64_t seed) {
            return asakit::asa_lutwak_infimum(*b.ptr, p, resolve(b, resolution), seed).value;
        },
        py::arg("body"), py::arg("p") = 1.0, py::arg("resolution") = 0, py::arg("seed") = 0);
    m.def(
        "compute_report",
        [](const PyBody& b, double p, int resolution, std::uint64_t seed) {
            return report_to_dict(
                asakit::compute_report(*b.ptr, p, resolve(b, resolution), seed));
        },
        py::arg("body"), py::arg("p") = 1.0, py::arg("resolution") = 0, py::arg("seed") = 0);
    m.def(
        "volume",
        [](const PyBody& b, int resolution, std::uint64_t seed) {
            return asakit::volume(*b.ptr, resolve(b, resolution), seed);
        },
        py::arg("body"), py::arg("resolution") = 0, py::arg("seed") = 0);
    m.def(
        "polar_volume",
        [](const PyBody& b, int resolution, std::uint64_t seed) {
            return asakit::polar_volume(*b.ptr, resolve(b, resolution), seed);
        },
        py::arg("body"), py::arg("resolution") = 0, py::arg("seed") = 0);
    m.def("unit_ball_volume", &asakit::unit_ball_volume);
    m.def("default_resolution", &asakit::default_resolution);
}
