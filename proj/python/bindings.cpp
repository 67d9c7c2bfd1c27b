#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermspace/errors.hpp"
#include "hermspace/hermite.hpp"
#include "hermspace/numerics.hpp"
#include "hermspace/operators.hpp"
#include "hermspace/phase_space.hpp"
#include "hermspace/poisson_poly.hpp"
#include "hermspace/zak_gabor.hpp"

namespace py = pybind11;
using namespace hermspace;

namespace {

QuadratureSpec spec_for(double tol, int max_doublings) {
    QuadratureSpec spec;
    spec.relative_tolerance = tol;
    spec.max_doublings = max_doublings;
    spec.validate();
    return spec;
}

phase::HermiteCoeffs coeffs_from(std::vector<std::complex<double>> c) {
    if (c.empty()) throw DomainError("coefficient list must not be empty");
    return phase::HermiteCoeffs{std::move(c)};
}

py::dict report_dict(const BoundReport& r) {
    py::dict d;
    d["lower"] = r.lower;
    d["measured"] = r.measured;
    d["upper"] = r.upper;
    d["quad_tolerance"] = r.quad_tolerance;
    d["pass"] = r.pass;
    return d;
}

zak::Lattice2D lattice_from(const std::string& name) {
    if (name == "z2") return zak::Lattice2D::integer();
    if (name == "half") return zak::Lattice2D::rectangular(0.5, 1.0);
    if (name == "hex") return zak::Lattice2D::hexagonal();
    throw DomainError("unknown lattice '" + name + "' (z2, half, hex)");
}

}  // namespace

PYBIND11_MODULE(_hermspace, m) {
    m.doc() = "Hermite expansions, Poisson polynomials and phase-space norms";
    m.attr("__version__") = HERMSPACE_VERSION;

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError", numerical.ptr());
    (void)domain;

    const auto tol = py::arg("tol") = 1e-8;
    const auto doublings = py::arg("max_doublings") = 16;

    m.def("hermite_values", [](std::size_t n_max, double t) { return hermite::hermite_batch(n_max, t).values; },
          py::arg("n_max"), py::arg("t"), "h_0(t) ... h_n_max(t)");
    m.def("poisson_weights", [](double t, std::size_t n_max) { return poisson::poisson_weights(t, n_max).p; },
          py::arg("t"), py::arg("n_max"));
    m.def("l1_norm_pn",
          [](double t, std::size_t N, double tol, int d) { return poisson::l1_norm_pn(t, N, spec_for(tol, d)); },
          py::arg("t"), py::arg("N"), tol, doublings);
    m.def("check_sandwich",
          [](double t, std::size_t N, double tol, int d) {
              return report_dict(poisson::check_sandwich(t, N, spec_for(tol, d)));
          },
          py::arg("t"), py::arg("N"), tol, doublings);
    m.def("stft_hermite_gauss",
          [](double x, double omega, std::size_t n) { return phase::stft_hermite_gauss({x, omega}, n); },
          py::arg("x"), py::arg("omega"), py::arg("n"));
    m.def("mp_norm",
          [](std::vector<std::complex<double>> c, double p, double tol, int d) {
              return phase::mp_norm(coeffs_from(std::move(c)), p, spec_for(tol, d));
          },
          py::arg("coeffs"), py::arg("p"), tol, doublings);
    m.def("m1_hermite_closed_form", &phase::m1_hermite_closed_form, py::arg("n"));
    m.def("shifted_gaussian_coeffs",
          [](double x, double omega) { return phase::shifted_gaussian_coeffs({x, omega}).c; }, py::arg("x"),
          py::arg("omega"));
    m.def("sn_probe_m1", [](std::size_t N, double tol, int d) { return ops::sn_probe_m1(N, spec_for(tol, d)); },
          py::arg("N"), tol, doublings);
    m.def("sn_growth_lower_bound", &ops::sn_growth_lower_bound, py::arg("N"));
    m.def("truncation_error",
          [](std::vector<std::complex<double>> c, std::size_t N, double p, double tol, int d) {
              return ops::truncation_error(coeffs_from(std::move(c)), N, p, spec_for(tol, d));
          },
          py::arg("coeffs"), py::arg("N"), py::arg("p"), tol, doublings);
    m.def("bochner_riesz_error",
          [](std::vector<std::complex<double>> c, std::size_t N, double alpha, double p, double tol, int d) {
              return ops::bochner_riesz_error(coeffs_from(std::move(c)), N, alpha, p, spec_for(tol, d));
          },
          py::arg("coeffs"), py::arg("N"), py::arg("alpha"), py::arg("p"), tol, doublings);
    m.def("dirichlet_l1", [](std::size_t N, double tol, int d) { return ops::dirichlet_l1(N, spec_for(tol, d)); },
          py::arg("N"), tol, doublings);
    m.def("torus_partial_sum_lp_ratio", &ops::torus_partial_sum_lp_ratio, py::arg("N"), py::arg("p"),
          py::arg("trials"), py::arg("seed"), py::arg("degree_factor") = 4);
    m.def("zak_hermite", &zak::zak_hermite, py::arg("n"), py::arg("x"), py::arg("omega"),
          py::arg("tail_tol") = 1e-10);
    m.def("zak_sup",
          [](std::size_t n, std::size_t grid) {
              const zak::ZakSup s = zak::zak_sup(n, grid);
              return py::make_tuple(s.sup, s.ratio);
          },
          py::arg("n"), py::arg("grid") = 256, "(sup, sup / (n+1)^(1/4))");
    m.def("rel_lattice",
          [](const std::string& name) {
              const zak::Lattice2D lattice = lattice_from(name);
              return zak::rel_lattice(lattice, lattice.is_rectangular() ? zak::RelMode::exact_rectangular
                                                                        : zak::RelMode::sliding_estimate);
          },
          py::arg("lattice"));
    m.def("bessel_sum",
          [](std::size_t n, const std::string& name, double x, double omega) {
              const phase::PhasePoint w{x, omega};
              return zak::bessel_sum(n, lattice_from(name), w, zak::bessel_min_radius(n, w) + 1.0);
          },
          py::arg("n"), py::arg("lattice"), py::arg("x") = 0.0, py::arg("omega") = 0.0);
}
