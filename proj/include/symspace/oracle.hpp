#pragma once

// Quadrature oracles for the integral representations behind the closed
// forms: the spectral expansion of u_z, the inversion integral
//   I(H) = int_{a*} pi+(lambda) e^{i<lambda,H>} / (|lambda|^2 + z^2)^nu d lambda,
// its reduction to a one-dimensional integral, the residue identity, the
// Fourier transform of a Gaussian times pi+, and the square root of the
// Jacobian of exp.
//
// The n-dimensional integrals (rank <= 2) are done in polar coordinates:
// a trapezoid rule in the angle (spectrally accurate for the periodic
// integrand, with the node count tied to the phase r|H|) and adaptive
// Gauss-Kronrod panels in the radius, with Wynn's epsilon algorithm on the
// oscillatory radial tail.

#include "symspace/quadrature.hpp"
#include "symspace/root_system.hpp"
#include "symspace/vectors.hpp"

#include <complex>

namespace symspace {

struct QuadratureConfig {
  /// Radius up to which the radial integral is done panel by panel.
  double truncation_radius = 40.0;
  /// Target error relative to the L1 norm of the integrand.
  double abs_tolerance = 1e-11;
  /// Bisection budget for the radial panels.
  int max_subdivisions = 20000;

  /// Radius 40 max(1, z).
  static QuadratureConfig defaults_for(double z);
  /// Throws std::invalid_argument unless radius > 0, tolerance > 0 and the
  /// budget is positive.
  void validate() const;
};

struct OracleResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  double l1 = 0.0;
};

/// (1/|W|) int_{a*} (-1)^nu / (|xi|^2 + z^2)^nu phi_{rho+i xi}(H) |c(xi)|^{-2} d xi,
/// built from zonal_spherical and c_function_density.  Rank <= 2, z > 0,
/// 2 nu > n + 2d.
OracleResult spectral_synthesis(const RootSystem& R, const CartanVector& H, double z, int nu,
                                const QuadratureConfig& cfg);
OracleResult spectral_synthesis(const RootSystem& R, const CartanVector& H, double z, int nu);

/// I(H) by n-dimensional quadrature.  Rank <= 2, z > 0, 2 nu > n + d.
OracleResult integral_I_direct(const RootSystem& R, const CartanVector& H, double z, int nu,
                               const QuadratureConfig& cfg);
OracleResult integral_I_direct(const RootSystem& R, const CartanVector& H, double z, int nu);

enum class ReducedMethod { quadrature, closed_form };

/// i^d pi+(H) pi^{(n-1)/2} Gamma(q) / Gamma(nu) int_R e^{i t |H|} / (t^2 + z^2)^q dt,
/// q = nu - d - (n-1)/2 > 1/2.  The closed_form method is available for
/// q = 1 (pi e^{-z|H|} / z) and q = 3/2 (sqrt(pi) |H| K_1(z|H|) / (Gamma(3/2) z)).
OracleResult integral_I_reduced(const RootSystem& R, const CartanVector& H, double z, int nu,
                                ReducedMethod method = ReducedMethod::quadrature);

struct ResidueCheck {
  double lhs;  // int_R e^{i lambda t} / (lambda^2 + z^2) d lambda by quadrature
  double rhs;  // pi e^{-z t} / z
  double relative_error;
  bool pass;   // relative_error <= 1e-8
};
ResidueCheck residue_check(double z, double t);

struct HeckeCheck {
  std::complex<double> lhs;  // int e^{-|l|^2} pi+(l) e^{i<l, H>/sqrt t} dl by quadrature
  std::complex<double> rhs;  // i^d t^{-d/2} pi+(H) e^{-|H|^2/t}
  /// pi^{n/2} (i/2)^d t^{-d/2} pi+(H) e^{-|H|^2/(4t)}, the transform with the
  /// Gaussian e^{-|l|^2} and Lebesgue measure.
  std::complex<double> rhs_normalized;
  double error_estimate;
};
/// Rank <= 2, t > 0.
HeckeCheck hecke_check(const RootSystem& R, const CartanVector& H, double t, const QuadratureConfig& cfg);
HeckeCheck hecke_check(const RootSystem& R, const CartanVector& H, double t);

/// prod_{alpha > 0} sinh(alpha(H)) / alpha(H).
double jacobian_sqrt(const RootSystem& R, const CartanVector& H);

/// (-1)^nu (-i)^d / (pi+(rho) prod_{alpha > 0} 2 sinh alpha(H)).  Throws
/// std::domain_error on a wall.
std::complex<double> representation_prefactor(const RootSystem& R, const CartanVector& H, int nu);

}  // namespace symspace
