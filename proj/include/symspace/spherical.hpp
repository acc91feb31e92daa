#pragma once

// Zonal spherical functions of G/K for complex G, the Plancherel density and
// the Casimir eigenvalues.
//
// For complex G every spherical function is elementary:
//
//   phi_{rho + i lambda}(exp H)
//       = pi+(rho) / pi+(i lambda) * sum_w sgn(w) e^{i <w lambda, H>}
//         / prod_{alpha > 0} 2 sinh alpha(H).
//
// Both the Weyl sum and the two products vanish on walls; the quotient is
// entire in lambda and H and is evaluated through its removable
// singularities (see zonal_spherical).

#include "symspace/root_system.hpp"
#include "symspace/vectors.hpp"

#include <complex>
#include <optional>

namespace symspace {

/// z, lambda_z = z^2 - |rho|^2 and, for spectral parameters, the Casimir
/// eigenvalue lambda_xi = -(|xi|^2 + |rho|^2).
struct EigenvalueParams {
  std::complex<double> z;
  std::complex<double> lambda_z;
  std::optional<double> lambda_xi;

  /// Throws std::invalid_argument unless Re z > 0.
  static EigenvalueParams from_z(const RootSystem& R, std::complex<double> z);
  /// z = i |xi|, so that lambda_z = lambda_xi.
  static EigenvalueParams from_spectral(const RootSystem& R, const SpectralVector& xi);
};

/// x / sinh x and sinh x / x, with a Taylor branch for |x| < 1e-4.
double x_over_sinh(double x);
double sinh_over_x(double x);

/// prod_{alpha > 0} 2 sinh(alpha(H)).
double weyl_denominator(const RootSystem& R, const CartanVector& H);

/// phi_{rho + i lambda}(exp H).  Complex in general: for real lambda the value
/// is real only when -1 is in the Weyl group.
std::complex<double> zonal_spherical(const RootSystem& R, const SpectralVector& lambda, const CartanVector& H);

/// |c(xi)|^{-2} = (pi+(xi) / pi+(rho))^2.
double c_function_density(const RootSystem& R, const SpectralVector& xi);

/// -(|xi|^2 + |rho|^2).
double casimir_eigenvalue(const RootSystem& R, const SpectralVector& xi);

}  // namespace symspace
