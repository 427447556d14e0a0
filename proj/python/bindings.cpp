#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hepm/closed_forms.hpp"
#include "hepm/errors.hpp"
#include "hepm/quadrature.hpp"
#include "hepm/render.hpp"
#include "hepm/sds_polar.hpp"
#include "hepm/suite.hpp"

namespace py = pybind11;
using namespace hepm;

namespace {

Family family_or_throw(const std::string& name) {
    const auto f = family_from_name(name);
    if (!f) throw RegionSpecError("unknown family: " + name);
    return *f;
}

py::dict as_dict(const OracleResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["error_estimate"] = r.error_estimate;
    d["subdivisions"] = r.subdivisions;
    d["converged"] = r.converged;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hepm, m) {
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RegionSpecError>(m, "RegionSpecError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("focal_distance", &focal_distance, py::arg("C"));
    m.def("area_band_segment", &area_band_segment, py::arg("C"), py::arg("eta"));
    m.def("area_parabola_segment", &area_parabola_segment, py::arg("C"), py::arg("eta"));
    m.def("area_horodisk_segment", &area_horodisk_segment, py::arg("eta"));
    m.def("area_asymptotic_triangle", &area_asymptotic_triangle, py::arg("C"));
    m.def("area_diff_B_minus_E", &area_diff_B_minus_E, py::arg("C"));
    m.def("area_diff_D_minus_E", &area_diff_D_minus_E, py::arg("C"));
    m.def("alpha", &alpha, py::arg("C"));
    m.def("beta", &beta, py::arg("C"));
    m.def("beta_hat_D", &beta_hat_D, py::arg("C"));
    m.def("beta_hat_V", &beta_hat_V, py::arg("C"));
    m.def("len_band_segment_boundary", &len_band_segment_boundary, py::arg("C"), py::arg("eta"));
    m.def("len_parabola_segment_boundary", &len_parabola_segment_boundary, py::arg("C"), py::arg("eta"));
    m.def("len_horocycle_segment", &len_horocycle_segment, py::arg("eta"));
    m.def("len_M", &len_M, py::arg("C"), py::arg("eta"));
    m.def("G", &G, py::arg("C"));
    m.def("Gprime", &Gprime, py::arg("C"));
    m.def("Ghat", &Ghat, py::arg("C"));
    m.def("disk_area", &disk_area, py::arg("R"));
    m.def("disk_circumference", &disk_circumference, py::arg("R"));
    m.def("sds_area_W", &sds_area_W, py::arg("C"), py::arg("eta"));
    m.def("sds_area_E_tilde", &sds_area_E_tilde, py::arg("C"), py::arg("eta"));
    m.def("sds_area_Z", &sds_area_Z, py::arg("C"));
    m.def("circumference_diff_via_polar", &circumference_diff_via_polar, py::arg("C"));
    m.def(
        "alpha_root",
        [](double tol, double lo, double hi) {
            const RootResult r = alpha_root(tol, lo, hi);
            return py::make_tuple(r.root, r.error_bound, r.iterations);
        },
        py::arg("tol") = 1e-10, py::arg("lo") = 0.5, py::arg("hi") = 0.95);

    m.def(
        "quad_area",
        [](const std::string& family, double C, double eta) {
            return as_dict(quad_area_hyp(lineal_cut(region(family_or_throw(family), C), eta)));
        },
        py::arg("family"), py::arg("C"), py::arg("eta"));
    m.def(
        "quad_len_band_boundary", [](double C, double eta) { return as_dict(quad_len_band_boundary(C, eta)); },
        py::arg("C"), py::arg("eta"));
    m.def(
        "quad_len_parabola_boundary",
        [](double C, double eta) { return as_dict(quad_len_parabola_boundary(C, eta)); }, py::arg("C"),
        py::arg("eta"));

    m.def(
        "table",
        [](const std::vector<double>& C, const std::vector<std::string>& quantities) {
            return render_table({C, quantities});
        },
        py::arg("C"), py::arg("quantities"));
    m.def(
        "figure",
        [](const std::string& chart, const std::vector<std::string>& layers, double C, int samples) {
            FigureSpec f;
            f.chart = chart_from_name(chart);
            f.layers = layers.empty() ? chart_layers(f.chart) : layers;
            f.C = C;
            f.viewport = default_viewport(f.chart);
            f.samples_per_curve = samples;
            return render_figure(f);
        },
        py::arg("chart") = "bck", py::arg("layers") = std::vector<std::string>{}, py::arg("C") = 0.6,
        py::arg("samples") = 512);
    m.def(
        "verify",
        [](const std::string& filter, int grid, bool self_test) {
            SuiteOptions o;
            o.filter = filter;
            o.grid = grid;
            o.self_test = self_test;
            py::list out;
            for (const auto& r : run_suite(o)) {
                py::dict d;
                d["id"] = r.id;
                d["module"] = r.module;
                d["pass"] = r.pass;
                d["closed_form"] = r.closed_form;
                d["oracle"] = r.oracle;
                d["abs_err"] = r.abs_err;
                out.append(d);
            }
            return out;
        },
        py::arg("filter") = "", py::arg("grid") = 9, py::arg("self_test") = false);
}
