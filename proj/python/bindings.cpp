#include "symspace/bessel.hpp"
#include "symspace/fundamental_solution.hpp"
#include "symspace/oracle.hpp"
#include "symspace/quadrature.hpp"
#include "symspace/root_system.hpp"
#include "symspace/spherical.hpp"
#include "symspace/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace symspace;

namespace {

SolutionParams params_for(const RootSystem& R, double z, std::optional<int> nu) {
  if (!nu || *nu == SolutionParams::canonical_nu(R)) return SolutionParams::canonical(R, z);
  return SolutionParams::general(R, *nu, z);
}

std::vector<std::vector<int>> roots_list(const std::vector<RootCoords>& roots) { return {roots.begin(), roots.end()}; }

}  // namespace

PYBIND11_MODULE(_symspace, m) {
  m.doc() = "Fundamental solutions on complex symmetric spaces";

  static py::exception<quad::QuadratureError> quad_error(m, "QuadratureError", PyExc_RuntimeError);

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](const std::string& spec) { return build_root_system(spec); }), py::arg("spec"))
      .def_property_readonly("label", &RootSystem::label)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("num_positive", &RootSystem::num_positive)
      .def_property_readonly("weyl_order", [](const RootSystem& R) { return R.weyl().order(); })
      .def_property_readonly("positive_roots", [](const RootSystem& R) { return roots_list(R.positive_roots()); })
      .def_property_readonly("simple_roots_orthonormal", &RootSystem::simple_roots_orthonormal)
      .def_property_readonly("positive_roots_orthonormal", &RootSystem::positive_roots_orthonormal)
      .def_property_readonly("rho", [](const RootSystem& R) { return rho(R); })
      .def_property_readonly("canonical_nu", [](const RootSystem& R) { return SolutionParams::canonical_nu(R); })
      .def("to_orthonormal", &RootSystem::to_orthonormal, py::arg("root_coords"))
      .def("to_root_coords", &RootSystem::to_root_coords, py::arg("orthonormal"))
      .def("to_json", [](const RootSystem& R) { return to_json(R).dump(); })
      .def("__repr__", [](const RootSystem& R) { return "RootSystem('" + R.label() + "')"; });

  m.def("pi_plus", [](const RootSystem& R, const Eigen::VectorXd& mu) { return pi_plus(R, mu); }, py::arg("R"),
        py::arg("mu"));
  m.def("pi_plus_poly", [](const RootSystem& R) { return pi_plus_poly(R).to_string(); }, py::arg("R"));
  m.def(
      "laplacian_of_pi_plus", [](const RootSystem& R) { return laplacian_poly(R, pi_plus_poly(R)).to_string(); },
      py::arg("R"), "Exact Laplacian of pi+, as a string; '0' when harmonic.");
  m.def("pair_sum_poly", [](const RootSystem& R) { return pair_sum_poly(R).to_string(); }, py::arg("R"));

  m.def(
      "zonal_spherical",
      [](const RootSystem& R, const Eigen::VectorXd& lam, const Eigen::VectorXd& H) {
        return zonal_spherical(R, SpectralVector(lam), CartanVector(H));
      },
      py::arg("R"), py::arg("lam"), py::arg("H"));
  m.def(
      "c_function_density",
      [](const RootSystem& R, const Eigen::VectorXd& xi) { return c_function_density(R, SpectralVector(xi)); },
      py::arg("R"), py::arg("xi"));
  m.def(
      "casimir_eigenvalue",
      [](const RootSystem& R, const Eigen::VectorXd& xi) { return casimir_eigenvalue(R, SpectralVector(xi)); },
      py::arg("R"), py::arg("xi"));

  m.def("bessel_k", &bessel_k, py::arg("alpha"), py::arg("x"));
  m.def("bessel_k_quadrature", &bessel_k_quadrature, py::arg("alpha"), py::arg("x"), py::arg("z") = 1.0);
  m.def("bessel_k_asymptotic", &bessel_k_asymptotic, py::arg("alpha"), py::arg("x"), py::arg("terms") = 3);
  m.def("bessel_k_half_integer", &bessel_k_half_integer, py::arg("m"), py::arg("x"));

  m.def(
      "sinh_ratio_product",
      [](const RootSystem& R, const Eigen::VectorXd& H) { return sinh_ratio_product(R, CartanVector(H)); },
      py::arg("R"), py::arg("H"));
  m.def(
      "fundamental_solution",
      [](const RootSystem& R, const Eigen::VectorXd& H, double z, std::optional<int> nu) {
        return fundamental_solution(params_for(R, z, nu), CartanVector(H));
      },
      py::arg("R"), py::arg("H"), py::arg("z"), py::arg("nu") = py::none(),
      "u_z at H (orthonormal coordinates); nu defaults to the canonical exponent.");
  m.def(
      "u_base_point", [](const RootSystem& R, double z, std::optional<int> nu) { return u_base_point(params_for(R, z, nu)); },
      py::arg("R"), py::arg("z"), py::arg("nu") = py::none());
  m.def(
      "evaluate_ray",
      [](const RootSystem& R, const Eigen::VectorXd& direction, const std::vector<double>& s, double z,
         std::optional<int> nu) {
        const auto rows = evaluate_ray(params_for(R, z, nu), direction, s);
        std::vector<std::complex<double>> u;
        std::vector<double> ratio;
        for (const auto& r : rows) {
          u.push_back(r.u);
          ratio.push_back(r.sinh_ratio_product);
        }
        return py::make_tuple(u, ratio);
      },
      py::arg("R"), py::arg("direction"), py::arg("s"), py::arg("z"), py::arg("nu") = py::none(),
      "Returns (u, sinh_ratio_product) at H = s * direction.");

  m.def("residue_check",
        [](double z, double t) {
          const auto r = residue_check(z, t);
          return py::dict(py::arg("lhs") = r.lhs, py::arg("rhs") = r.rhs, py::arg("relative_error") = r.relative_error,
                          py::arg("passed") = r.pass);
        },
        py::arg("z"), py::arg("t"));
  m.def(
      "hecke_check",
      [](const RootSystem& R, const Eigen::VectorXd& H, double t) {
        const auto r = hecke_check(R, CartanVector(H), t);
        return py::dict(py::arg("lhs") = r.lhs, py::arg("rhs") = r.rhs, py::arg("rhs_normalized") = r.rhs_normalized,
                        py::arg("error_estimate") = r.error_estimate);
      },
      py::arg("R"), py::arg("H"), py::arg("t"));
  m.def(
      "integral_I_reduced",
      [](const RootSystem& R, const Eigen::VectorXd& H, double z, int nu, bool closed_form) {
        return integral_I_reduced(R, CartanVector(H), z, nu,
                                  closed_form ? ReducedMethod::closed_form : ReducedMethod::quadrature)
            .value;
      },
      py::arg("R"), py::arg("H"), py::arg("z"), py::arg("nu"), py::arg("closed_form") = false);
  m.def(
      "integral_I_direct",
      [](const RootSystem& R, const Eigen::VectorXd& H, double z, int nu) {
        return integral_I_direct(R, CartanVector(H), z, nu).value;
      },
      py::arg("R"), py::arg("H"), py::arg("z"), py::arg("nu"));
  m.def(
      "spectral_synthesis",
      [](const RootSystem& R, const Eigen::VectorXd& H, double z, int nu) {
        return spectral_synthesis(R, CartanVector(H), z, nu).value;
      },
      py::arg("R"), py::arg("H"), py::arg("z"), py::arg("nu"));
  m.def(
      "representation_prefactor",
      [](const RootSystem& R, const Eigen::VectorXd& H, int nu) {
        return representation_prefactor(R, CartanVector(H), nu);
      },
      py::arg("R"), py::arg("H"), py::arg("nu"));
  m.def(
      "jacobian_sqrt", [](const RootSystem& R, const Eigen::VectorXd& H) { return jacobian_sqrt(R, CartanVector(H)); },
      py::arg("R"), py::arg("H"));

  m.def("pde_residual_rank1", [](double z, double s, double h, int order) {
    return pde_residual_rank1(z, s, FDConfig{h, order});
  }, py::arg("z"), py::arg("s"), py::arg("h") = 1e-2, py::arg("order") = 4);

  m.def(
      "consistency_report",
      [](std::optional<std::vector<std::string>> systems, std::vector<std::string> suites, std::optional<double> tol,
         bool corrupt_pi_plus, bool corrupt_prefactor_sign) {
        ReportOptions opt;
        if (systems) opt.systems = *systems;
        for (const auto& s : suites) opt.suites.insert(parse_suite(s));
        opt.tolerance_override = tol;
        opt.corrupt_pi_plus = corrupt_pi_plus;
        opt.corrupt_prefactor_sign = corrupt_prefactor_sign;
        py::gil_scoped_release release;
        return consistency_report(opt).to_json().dump();
      },
      py::arg("systems") = py::none(), py::arg("suites") = std::vector<std::string>{}, py::arg("tol") = py::none(),
      py::arg("corrupt_pi_plus") = false, py::arg("corrupt_prefactor_sign") = false,
      "JSON string of the consistency report.");
}
