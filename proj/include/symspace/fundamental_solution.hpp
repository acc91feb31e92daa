#pragma once

// The bi-K-invariant fundamental solution u_z of (Delta - lambda_z)^nu on
// G/K for complex G, lambda_z = z^2 - |rho|^2, as a function of H = log a.
//
// With n the rank, d the number of positive roots and S(H) the product
// prod_{alpha > 0} alpha(H) / (2 sinh alpha(H)):
//
//   odd n,  nu = d + (n+1)/2:
//     u = (-1)^nu pi^{(n+1)/2} / (pi+(rho) Gamma(nu)) S(H) e^{-z|H|} / z
//   even n, nu = d + n/2 + 1:
//     u = (-1)^nu pi^{n/2} / (pi+(rho) Gamma(nu)) S(H) (|H|/z) K_1(z|H|)
//   general nu with mu = nu - d - n/2 > 0:
//     u = 2 (-1)^nu pi^{n/2} / (pi+(rho) Gamma(nu)) S(H) (|H|/2z)^mu K_mu(z|H|)

#include "symspace/root_system.hpp"
#include "symspace/vectors.hpp"

#include <complex>
#include <vector>

namespace symspace {

class SolutionParams {
 public:
  /// nu = d + (n+1)/2 for odd rank, d + n/2 + 1 for even rank.
  static SolutionParams canonical(const RootSystem& R, std::complex<double> z);
  /// Any integer nu with nu - d - n/2 > 0.
  static SolutionParams general(const RootSystem& R, int nu, std::complex<double> z);

  static int canonical_nu(const RootSystem& R);
  static int odd_rank_nu(const RootSystem& R) { return R.num_positive() + (R.rank() + 1) / 2; }
  static int even_rank_nu(const RootSystem& R) { return R.num_positive() + R.rank() / 2 + 1; }

  const RootSystem& root_system() const { return R_; }
  int rank() const { return R_.rank(); }
  int num_positive() const { return R_.num_positive(); }
  int nu() const { return nu_; }
  std::complex<double> z() const { return z_; }
  /// nu - d - n/2, the order of the Bessel function.
  double bessel_order() const { return nu_ - num_positive() - rank() / 2.0; }
  bool is_canonical() const { return nu_ == canonical_nu(R_); }

 private:
  SolutionParams(RootSystem R, int nu, std::complex<double> z);

  RootSystem R_;
  int nu_;
  std::complex<double> z_;
};

/// prod_{alpha > 0} alpha(H) / (2 sinh alpha(H)); each factor tends to 1/2 on
/// its wall.
double sinh_ratio_product(const RootSystem& R, const CartanVector& H);

/// Odd rank, canonical nu.  Any Re z > 0.
std::complex<double> u_odd(const SolutionParams& p, const CartanVector& H);

/// Even rank, canonical nu.  Real z > 0.
std::complex<double> u_even(const SolutionParams& p, const CartanVector& H);

/// Any admissible nu.  Real z > 0.
std::complex<double> u_general(const SolutionParams& p, const CartanVector& H);

/// u_even with K_1(x) replaced by its leading asymptotic sqrt(pi/(2x)) e^{-x}.
std::complex<double> u_even_asymptotic(const SolutionParams& p, const CartanVector& H);

/// P(r, w) = sum_{j=0..m} (m+j)!/(j!(m-j)!) r^{m-j} 2^{-m-j} w^{m+j}.
std::complex<double> half_integer_polynomial(int m, double r, std::complex<double> w);

/// For odd rank and nu - d - n/2 = m + 1/2 the Bessel factor is elementary:
///   u = (-1)^nu pi^{(n+1)/2} / (pi+(rho) Gamma(nu)) S(H) e^{-z|H|} P(|H|, 1/z) / z.
/// Any Re z > 0.
std::complex<double> u_half_integer(const SolutionParams& p, const CartanVector& H);

/// Value at the base point, the limit of the formulas as H -> 0.
std::complex<double> u_base_point(const SolutionParams& p);

/// Dispatches to u_odd / u_even for canonical nu, u_general otherwise.
std::complex<double> fundamental_solution(const SolutionParams& p, const CartanVector& H);

struct RayPoint {
  double s;
  CartanVector H;
  std::complex<double> u;
  double sinh_ratio_product;
};

/// u along H = s * direction for each s (direction in orthonormal
/// coordinates, not normalized).
std::vector<RayPoint> evaluate_ray(const SolutionParams& p, const Eigen::VectorXd& direction,
                                   const std::vector<double>& s_values);

}  // namespace symspace
