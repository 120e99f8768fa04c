#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "deltabeta/delta_kernels.hpp"
#include "deltabeta/errors.hpp"
#include "deltabeta/gamma_suite.hpp"
#include "deltabeta/quadrature.hpp"
#include "deltabeta/regularized_beta.hpp"
#include "deltabeta/run.hpp"
#include "deltabeta/special_functions.hpp"
#include "deltabeta/test_functions.hpp"
#include "deltabeta/weak_limits.hpp"

namespace py = pybind11;
using namespace deltabeta;

namespace {

void bind_errors(py::module_& m) {
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SupportError>(m, "SupportError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());
}

void bind_special(py::module_& m) {
    m.attr("EULER_GAMMA") = kEulerGamma;
    m.def("gamma", &deltabeta::gamma, py::arg("z"), py::arg("pole_radius") = kDefaultPoleRadius);
    m.def("log_gamma", &deltabeta::log_gamma, py::arg("z"), py::arg("pole_radius") = kDefaultPoleRadius);
    m.def("digamma", &digamma, py::arg("z"), py::arg("pole_radius") = kDefaultPoleRadius);
    m.def("trigamma", &trigamma, py::arg("z"), py::arg("pole_radius") = kDefaultPoleRadius);

    py::class_<PropertyCheck>(m, "PropertyCheck")
        .def_readonly("name", &PropertyCheck::name)
        .def_readonly("measured", &PropertyCheck::measured)
        .def_readonly("tolerance", &PropertyCheck::tolerance)
        .def_readonly("points", &PropertyCheck::points)
        .def_property_readonly("passed", &PropertyCheck::passed);
    m.def("run_gamma_suite", &run_gamma_suite);
}

void bind_beta(py::module_& m) {
    m.def("beta", &deltabeta::beta, py::arg("alpha"), py::arg("beta"),
          py::arg("pole_radius") = kDefaultPoleRadius);
    m.def("beta_diag_regularized", &beta_diag_regularized, py::arg("eps"), py::arg("x"));
    m.def("beta_shifted_regularized", &beta_shifted_regularized, py::arg("eps"), py::arg("x"),
          py::arg("n"), py::arg("k"));
    m.def("beta_offdiag_regularized", &beta_offdiag_regularized, py::arg("a"), py::arg("b"),
          py::arg("x"), py::arg("y"));
    m.def("smooth_factor", &smooth_factor, py::arg("eps"), py::arg("x"));

    py::class_<FactorizedBeta>(m, "FactorizedBeta")
        .def_readonly("smooth_factor", &FactorizedBeta::smooth_factor)
        .def_readonly("lorentz_factor", &FactorizedBeta::lorentz_factor)
        .def_readonly("second_derivative_bound", &FactorizedBeta::second_derivative_bound)
        .def("product", &FactorizedBeta::product);
    m.def("factorize_diag", &factorize_diag, py::arg("eps"), py::arg("x"));
}

void bind_quadrature(py::module_& m) {
    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init([](double abs_tol, double rel_tol, int max_subdivisions, double pv_excision) {
                 QuadratureConfig c{abs_tol, rel_tol, max_subdivisions, pv_excision};
                 c.validate();
                 return c;
             }),
             py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-10,
             py::arg("max_subdivisions") = 200000, py::arg("pv_excision") = 1e-3)
        .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
        .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
        .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions)
        .def_readwrite("pv_excision", &QuadratureConfig::pv_excision);

    py::class_<TruncationParams>(m, "TruncationParams")
        .def(py::init([](double mu, double lam) {
                 TruncationParams t{mu, lam};
                 t.validate();
                 return t;
             }),
             py::arg("mu") = 0.0, py::arg("lam") = 0.0)
        .def_static("from_cuts", &TruncationParams::from_cuts)
        .def_readonly("mu", &TruncationParams::mu)
        .def_readonly("lam", &TruncationParams::lam)
        .def_property_readonly("alpha_cut", &TruncationParams::alpha_cut)
        .def_property_readonly("beta_cut", &TruncationParams::beta_cut);

    m.def("beta_integral_direct", &beta_integral_direct, py::arg("a"), py::arg("b"), py::arg("x"),
          py::arg("y"), py::arg("trunc") = TruncationParams{}, py::arg("cfg") = QuadratureConfig{});
    m.def("truncated_fourier", &truncated_fourier, py::arg("x"), py::arg("alpha_cut"),
          py::arg("beta_cut"));
}

void bind_limits(py::module_& m) {
    py::class_<TestFunction>(m, "TestFunction")
        .def(py::init([](std::function<double(double)> f, double lo, double hi,
                         std::string label) {
                 const double at_zero = (lo <= 0.0 && 0.0 <= hi) ? f(0.0) : 0.0;
                 return TestFunction{std::move(f), lo, hi, at_zero, std::move(label)};
             }),
             py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("label") = "custom")
        .def("__call__", &TestFunction::operator())
        .def_readonly("lo", &TestFunction::lo)
        .def_readonly("hi", &TestFunction::hi)
        .def_readonly("value_at_zero", &TestFunction::value_at_zero)
        .def_readonly("label", &TestFunction::label);
    m.def("registry_labels", &registry_labels);
    m.def("registry_function", &registry_function, py::arg("label"));

    py::class_<ConvergenceRecord>(m, "ConvergenceRecord")
        .def_readonly("reg_a", &ConvergenceRecord::reg_a)
        .def_readonly("reg_b", &ConvergenceRecord::reg_b)
        .def_readonly("action", &ConvergenceRecord::action)
        .def_readonly("target", &ConvergenceRecord::target)
        .def_readonly("abs_err", &ConvergenceRecord::abs_err)
        .def_readonly("rel_err", &ConvergenceRecord::rel_err)
        .def_readonly("failure", &ConvergenceRecord::failure);

    const QuadratureConfig dflt;
    m.def("action_theorem", &action_theorem, py::arg("eps"), py::arg("phi"),
          py::arg("cfg") = dflt);
    m.def("action_truncated", &action_truncated, py::arg("mu"), py::arg("phi"),
          py::arg("cfg") = dflt);
    m.def("verify_sokhotski", &verify_sokhotski, py::arg("alpha"), py::arg("phi"),
          py::arg("cfg") = dflt);
    m.def("verify_diag_limit", &verify_diag_limit, py::arg("a"), py::arg("b"), py::arg("phi"),
          py::arg("cfg") = dflt);
    m.def("verify_offdiag_limit", &verify_offdiag_limit, py::arg("a"), py::arg("b"), py::arg("g"),
          py::arg("h"), py::arg("cfg") = dflt);
    m.def(
        "verify_corollary3",
        [](double eps, int n, int k, const TestFunction& phi, const QuadratureConfig& cfg) {
            const auto r = verify_corollary3(eps, n, k, phi, cfg);
            return py::make_tuple(r.record, r.swap_max_rel_diff, r.swap_symmetric);
        },
        py::arg("eps"), py::arg("n"), py::arg("k"), py::arg("phi"), py::arg("cfg") = dflt);
    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
}

void bind_run(py::module_& m) {
    m.def(
        "run_table",
        [](const std::string& command, const std::string& phi, std::vector<double> schedule,
           int n, int k) {
            RunSpec spec;
            spec.command = parse_command(command);
            spec.phi_label = phi;
            spec.schedule = std::move(schedule);
            spec.n = n;
            spec.k = k;
            RunReport report;
            {
                py::gil_scoped_release release;
                report = execute(spec);
            }
            return py::make_tuple(to_csv(report.rows), report.passed());
        },
        py::arg("command"), py::arg("phi") = "", py::arg("schedule") = std::vector<double>{},
        py::arg("n") = 1, py::arg("k") = 1,
        "Runs a CLI command in-process; returns (csv_table, all_assertions_passed).");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Regularized Euler beta function and its weak limits";
    bind_errors(m);
    bind_special(m);
    bind_beta(m);
    bind_quadrature(m);
    bind_limits(m);
    bind_run(m);
}
