#pragma once

// Modified Bessel functions of the second kind K_alpha for real order.

#include <array>

namespace symspace {

/// K_alpha(x), x > 0.  Temme's series for x <= 2 and Steed's continued
/// fraction above, each giving K_mu and K_{mu+1} for |mu| <= 1/2, followed by
/// the upward recurrence in the order.  K_{-alpha} = K_alpha.
/// Throws std::domain_error for x <= 0.
double bessel_k(double alpha, double x);

/// e^x K_alpha(x); stays representable where K_alpha underflows.
double bessel_k_scaled(double alpha, double x);

/// x^mu K_mu(x) for mu > 0, including the limit 2^{mu-1} Gamma(mu) at x = 0.
/// For mu = 1 and x < 1e-3 the two-term small-argument series is used.
double power_bessel_k(double mu, double x);

/// x K_1(x) ~ 1 + (x^2/4) (2 ln(x/2) + 2 gamma - 1), for small x.
double x_bessel_k1_series(double x);

/// K_alpha(x z) from its integral representation
///   Gamma(alpha + 1/2) (2z)^alpha / (sqrt(pi) x^alpha)
///     * int_0^inf cos(x t) / (t^2 + z^2)^{alpha + 1/2} dt,
/// evaluated by quadrature in extended precision.  Requires alpha > -1/2,
/// x > 0, z > 0.  Throws quad::QuadratureError if the integral does not
/// converge.
double bessel_k_quadrature(double alpha, double x, double z);

/// sqrt(pi/(2x)) e^{-x} sum_{k < terms} a_k(alpha) / x^k with
/// a_k = prod_{j=1..k} (4 alpha^2 - (2j-1)^2) / (k! 8^k).  `terms` counts the
/// leading 1; 1 <= terms <= 4.  Throws std::domain_error for x < 5 and
/// std::invalid_argument for a bad term count.
double bessel_k_asymptotic(double alpha, double x, int terms);

/// K_{m + 1/2}(x) = sqrt(pi/2) e^{-x} / sqrt(x) sum_{j=0..m} (m+j)!/(j!(m-j)!) (2x)^{-j}.
double bessel_k_half_integer(int m, double x);

/// Coefficients c_1..c_26 of 1/Gamma(z) = sum_k c_k z^k (index 0 holds c_1).
const std::array<double, 26>& reciprocal_gamma_coefficients();

}  // namespace symspace
