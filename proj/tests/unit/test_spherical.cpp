#include "symspace/spherical.hpp"

#include <Eigen/LU>
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

using namespace symspace;
using cplx = std::complex<double>;

namespace {

// A point of the sum-zero plane in R^3 with prescribed values on e1 - e2 and
// e2 - e3.
std::array<double, 3> plane_point(double a, double b) {
  const double x3 = -(a + 2 * b) / 3.0;
  return {x3 + a + b, x3 + b, x3};
}

double dot3(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

// phi for A2 built from scratch in the e_i - e_j model, W = S_3.
cplx a2_spherical(std::array<double, 3> lam, std::array<double, 3> h) {
  std::array<int, 3> perm{0, 1, 2};
  cplx sum = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perm[i] > perm[j]) ++inversions;
    const std::array<double, 3> wl{lam[perm[0]], lam[perm[1]], lam[perm[2]]};
    sum += (inversions % 2 ? -1.0 : 1.0) * std::exp(cplx(0, dot3(wl, h)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto pi = [](const std::array<double, 3>& v) { return (v[0] - v[1]) * (v[1] - v[2]) * (v[0] - v[2]); };
  const std::array<double, 3> rho3{2, 0, -2};
  double denom = 1;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) denom *= 2 * std::sinh(h[i] - h[j]);
  const cplx i3 = cplx(0, 1) * cplx(0, 1) * cplx(0, 1);
  return pi(rho3) / (i3 * pi(lam)) * sum / denom;
}

}  // namespace

TEST_CASE("weyl denominator") {
  const auto a1 = build_root_system("A1");
  const double s = 1.0 / a1.simple_roots_orthonormal()(0, 0);  // alpha(H) = 1
  CHECK(weyl_denominator(a1, CartanVector{s}) == doctest::Approx(2 * std::sinh(1.0)));
  CHECK(weyl_denominator(a1, CartanVector{0.0}) == 0.0);

  const auto a2 = build_root_system("A2");
  const Eigen::VectorXd h = a2.simple_roots_orthonormal().fullPivLu().solve(Eigen::Vector2d(1, 1));
  const double expect = 2 * std::sinh(1.0) * 2 * std::sinh(1.0) * 2 * std::sinh(2.0);
  CHECK(weyl_denominator(a2, CartanVector(h)) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("A2 spherical function against an independent S3 evaluation") {
  const auto R = build_root_system("A2");
  const Eigen::MatrixXd S = R.simple_roots_orthonormal();
  for (auto [la, lb, ha, hb] : {std::array{0.7, 1.3, 0.4, 0.9}, std::array{2.1, 0.2, 1.5, 0.1},
                                std::array{-0.8, 1.9, -0.3, 1.2}, std::array{3.0, 3.0, 0.05, 0.07}}) {
    const Eigen::VectorXd lam = S.fullPivLu().solve(Eigen::Vector2d(la, lb));
    const Eigen::VectorXd h = S.fullPivLu().solve(Eigen::Vector2d(ha, hb));
    const cplx expect = a2_spherical(plane_point(la, lb), plane_point(ha, hb));
    const cplx got = zonal_spherical(R, SpectralVector(lam), CartanVector(h));
    CHECK(std::abs(got - expect) < 1e-11 * (1 + std::abs(expect)));
  }
}

TEST_CASE("rank-one closed form") {
  const auto R = build_root_system("A1");
  const Eigen::VectorXd r = rho(R);
  for (double t : {0.0, 0.3, 1.0, 4.5})
    for (double s : {1e-7, 1e-3, 0.5, 2.0, 7.0}) {
      const cplx phi = zonal_spherical(R, SpectralVector(Eigen::VectorXd(t * r)),
                                       CartanVector(Eigen::VectorXd(s * r / r.squaredNorm())));
      const double expect = t == 0 ? s / std::sinh(s) : std::sin(t * s) / (t * std::sinh(s));
      CHECK(std::abs(phi - expect) < 1e-10);
    }
}

TEST_CASE("normalization near the base point and on walls") {
  for (const char* spec : {"A1", "A2", "C2", "G2", "A3"}) {
    CAPTURE(spec);
    const auto R = build_root_system(spec);
    Eigen::VectorXd h = Eigen::VectorXd::LinSpaced(R.rank(), 1.0, 2.0);
    h *= 1e-6 / h.norm();
    const cplx phi = zonal_spherical(R, SpectralVector(Eigen::VectorXd(1.7 * rho(R))), CartanVector(h));
    CHECK(std::abs(phi - 1.0) < 1e-8);
    // lambda = 0 is singular everywhere; the limit is still finite and real
    const cplx phi0 = zonal_spherical(R, SpectralVector(Eigen::VectorXd::Zero(R.rank())),
                                      CartanVector(Eigen::VectorXd(rho(R).normalized())));
    CHECK(std::isfinite(phi0.real()));
    CHECK(std::abs(phi0) <= 1.0 + 1e-8);
  }
}

TEST_CASE("wall limit matches nearby regular values") {
  const auto R = build_root_system("A2");
  const Eigen::VectorXd a = R.simple_roots_orthonormal().row(0).transpose();
  Eigen::VectorXd h(2);
  h << 0.3, 0.9;
  h -= h.dot(a) / a.squaredNorm() * a;  // alpha(H) = 0
  const SpectralVector lam{0.8, 1.1};
  const cplx on_wall = zonal_spherical(R, lam, CartanVector(h));
  const cplx near = zonal_spherical(R, lam, CartanVector(Eigen::VectorXd(h + 1e-3 * a)));
  CHECK(std::abs(on_wall - near) < 1e-3);
}

TEST_CASE("c-function density and Casimir eigenvalue") {
  const auto R = build_root_system("A2");
  CHECK(c_function_density(R, SpectralVector(rho(R))) == doctest::Approx(1.0));
  CHECK(c_function_density(R, SpectralVector(Eigen::VectorXd(2 * rho(R)))) == doctest::Approx(64.0));
  CHECK(c_function_density(R, SpectralVector{0.0, 0.0}) == 0.0);
  const auto a1 = build_root_system("A1");
  CHECK(casimir_eigenvalue(a1, SpectralVector{0.0}) == doctest::Approx(-2.0));
  CHECK(casimir_eigenvalue(R, SpectralVector{1.0, 0.0}) == doctest::Approx(-1.0 - rho(R).squaredNorm()));
}

TEST_CASE("eigenvalue parameters") {
  const auto R = build_root_system("A1");
  const auto p = EigenvalueParams::from_z(R, {2.0, 0.5});
  CHECK(std::abs(p.lambda_z - (cplx(2.0, 0.5) * cplx(2.0, 0.5) - 2.0)) < 1e-14);
  CHECK_FALSE(p.lambda_xi.has_value());
  CHECK_THROWS_AS(EigenvalueParams::from_z(R, {-1.0, 0.0}), std::invalid_argument);
  const auto q = EigenvalueParams::from_spectral(R, SpectralVector{3.0});
  REQUIRE(q.lambda_xi.has_value());
  CHECK(*q.lambda_xi == doctest::Approx(-11.0));
  CHECK(std::abs(q.lambda_z - *q.lambda_xi) < 1e-12);
}

TEST_CASE("small-argument sinh ratios") {
  CHECK(x_over_sinh(0.0) == 1.0);
  CHECK(x_over_sinh(1e-5) == doctest::Approx(1e-5 / std::sinh(1e-5)).epsilon(1e-15));
  CHECK(sinh_over_x(2.0) == doctest::Approx(std::sinh(2.0) / 2.0));
}
