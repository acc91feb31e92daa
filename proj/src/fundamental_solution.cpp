#include "symspace/fundamental_solution.hpp"

#include "symspace/bessel.hpp"
#include "symspace/spherical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symspace {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_point(const SolutionParams& p, const CartanVector& H) {
  if (H.dim() != p.rank()) throw std::invalid_argument("fundamental solution: H has the wrong dimension");
  if (!H.is_finite()) throw std::invalid_argument("fundamental solution: H is not finite");
}

double real_z(const SolutionParams& p, const char* who) {
  if (p.z().imag() != 0.0) throw std::invalid_argument(std::string(who) + ": the Bessel branch needs real z");
  return p.z().real();
}

// (-1)^nu / (pi+(rho) Gamma(nu)), shared by every branch.
double common_constant(const SolutionParams& p) {
  const double sign = (p.nu() % 2 == 0) ? 1.0 : -1.0;
  return sign / (pi_plus(p.root_system(), rho(p.root_system())) * std::tgamma(static_cast<double>(p.nu())));
}

}  // namespace

SolutionParams::SolutionParams(RootSystem R, int nu, std::complex<double> z) : R_(std::move(R)), nu_(nu), z_(z) {
  if (!(z_.real() > 0.0) || !std::isfinite(z_.real()) || !std::isfinite(z_.imag()))
    throw std::invalid_argument("SolutionParams: z must be finite with Re(z) > 0");
  if (!(bessel_order() > 0.0))
    throw std::invalid_argument("SolutionParams: nu = " + std::to_string(nu_) + " must exceed d + n/2 = " +
                                std::to_string(num_positive() + rank() / 2.0));
}

int SolutionParams::canonical_nu(const RootSystem& R) {
  return R.rank() % 2 == 1 ? odd_rank_nu(R) : even_rank_nu(R);
}

SolutionParams SolutionParams::canonical(const RootSystem& R, std::complex<double> z) {
  return SolutionParams(R, canonical_nu(R), z);
}

SolutionParams SolutionParams::general(const RootSystem& R, int nu, std::complex<double> z) {
  return SolutionParams(R, nu, z);
}

double sinh_ratio_product(const RootSystem& R, const CartanVector& H) {
  if (H.dim() != R.rank()) throw std::invalid_argument("sinh_ratio_product: dimension mismatch");
  const auto& roots = R.positive_roots_orthonormal();
  double p = 1.0;
  for (Eigen::Index k = 0; k < roots.rows(); ++k) p *= 0.5 * x_over_sinh(roots.row(k).dot(H.coords));
  return p;
}

cplx u_odd(const SolutionParams& p, const CartanVector& H) {
  check_point(p, H);
  if (p.rank() % 2 != 1 || p.nu() != SolutionParams::odd_rank_nu(p.root_system()))
    throw std::invalid_argument("u_odd: needs odd rank and nu = d + (n+1)/2");
  const double c = common_constant(p) * std::pow(kPi, (p.rank() + 1) / 2.0);
  const cplx z = p.z();
  return c * sinh_ratio_product(p.root_system(), H) * std::exp(-z * H.norm()) / z;
}

cplx u_even(const SolutionParams& p, const CartanVector& H) {
  check_point(p, H);
  if (p.rank() % 2 != 0 || p.nu() != SolutionParams::even_rank_nu(p.root_system()))
    throw std::invalid_argument("u_even: needs even rank and nu = d + n/2 + 1");
  const double z = real_z(p, "u_even");
  const double c = common_constant(p) * std::pow(kPi, p.rank() / 2.0);
  // (|H|/z) K_1(z|H|) = x K_1(x) / z^2 with x = z|H|.
  return c * sinh_ratio_product(p.root_system(), H) * power_bessel_k(1.0, z * H.norm()) / (z * z);
}

cplx u_general(const SolutionParams& p, const CartanVector& H) {
  check_point(p, H);
  const double z = real_z(p, "u_general");
  const double mu = p.bessel_order();
  const double c = 2.0 * common_constant(p) * std::pow(kPi, p.rank() / 2.0);
  // (|H|/2z)^mu K_mu(z|H|) = x^mu K_mu(x) / (2 z^2)^mu.
  return c * sinh_ratio_product(p.root_system(), H) * power_bessel_k(mu, z * H.norm()) / std::pow(2.0 * z * z, mu);
}

cplx u_even_asymptotic(const SolutionParams& p, const CartanVector& H) {
  check_point(p, H);
  if (p.rank() % 2 != 0 || p.nu() != SolutionParams::even_rank_nu(p.root_system()))
    throw std::invalid_argument("u_even_asymptotic: needs even rank and nu = d + n/2 + 1");
  const double z = real_z(p, "u_even_asymptotic");
  const double r = H.norm();
  if (!(r > 0.0)) throw std::domain_error("u_even_asymptotic: H must be non-zero");
  const double c = common_constant(p) * std::pow(kPi, p.rank() / 2.0);
  const double k1 = std::sqrt(kPi / (2.0 * z * r)) * std::exp(-z * r);
  return c * sinh_ratio_product(p.root_system(), H) * (r / z) * k1;
}

cplx half_integer_polynomial(int m, double r, cplx w) {
  if (m < 0) throw std::invalid_argument("half_integer_polynomial: m must be non-negative");
  cplx sum = 0.0;
  double coef = 1.0;  // (m+j)!/(j!(m-j)!)
  for (int j = 0; j <= m; ++j) {
    if (j > 0) coef *= static_cast<double>(m + j) * (m - j + 1) / j;
    sum += coef * std::pow(r, m - j) * std::pow(2.0, -(m + j)) * std::pow(w, m + j);
  }
  return sum;
}

cplx u_half_integer(const SolutionParams& p, const CartanVector& H) {
  check_point(p, H);
  const double mu = p.bessel_order();
  const int m = static_cast<int>(std::floor(mu));
  if (mu - m != 0.5) throw std::invalid_argument("u_half_integer: nu - d - n/2 must be a half-integer");
  const double c = common_constant(p) * std::pow(kPi, (p.rank() + 1) / 2.0);
  const cplx z = p.z();
  const double r = H.norm();
  return c * sinh_ratio_product(p.root_system(), H) * std::exp(-z * r) * half_integer_polynomial(m, r, 1.0 / z) / z;
}

cplx u_base_point(const SolutionParams& p) {
  const CartanVector zero(Eigen::VectorXd::Zero(p.rank()));
  if (p.is_canonical() && p.rank() % 2 == 1) return u_odd(p, zero);
  if (p.is_canonical()) return u_even(p, zero);
  const double mu = p.bessel_order();
  if (mu - std::floor(mu) == 0.5) return u_half_integer(p, zero);
  return u_general(p, zero);
}

cplx fundamental_solution(const SolutionParams& p, const CartanVector& H) {
  if (p.is_canonical()) return p.rank() % 2 == 1 ? u_odd(p, H) : u_even(p, H);
  return u_general(p, H);
}

std::vector<RayPoint> evaluate_ray(const SolutionParams& p, const Eigen::VectorXd& direction,
                                   const std::vector<double>& s_values) {
  if (direction.size() != p.rank()) throw std::invalid_argument("evaluate_ray: direction has the wrong dimension");
  if (direction.norm() == 0.0) throw std::invalid_argument("evaluate_ray: direction must be non-zero");
  std::vector<RayPoint> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    CartanVector H(Eigen::VectorXd(s * direction));
    const cplx u = fundamental_solution(p, H);
    out.push_back({s, H, u, sinh_ratio_product(p.root_system(), H)});
  }
  return out;
}

}  // namespace symspace
