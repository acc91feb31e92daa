#include "symspace/bessel.hpp"
#include "symspace/quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace symspace;

namespace {

double rel(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace

TEST_CASE("K against Boost") {
  double worst = 0;
  for (double a : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.5, 7.0, 12.5, 20.0})
    for (double x = 1e-3; x <= 50.0; x *= 1.37) worst = std::max(worst, rel(bessel_k(a, x), boost::math::cyl_bessel_k(a, x)));
  CHECK(worst < 1e-10);
}

TEST_CASE("scaled K") {
  for (double x : {0.1, 3.0, 40.0, 700.0})
    CHECK(bessel_k_scaled(1.5, x) == doctest::Approx(std::exp(x) * boost::math::cyl_bessel_k(1.5, x)).epsilon(1e-12));
}

TEST_CASE("x^mu K_mu and its limit at zero") {
  CHECK(power_bessel_k(1.0, 0.0) == 1.0);
  CHECK(power_bessel_k(2.5, 0.0) == doctest::Approx(std::pow(2.0, 1.5) * std::tgamma(2.5)));
  CHECK(power_bessel_k(1.0, 1e-4) == doctest::Approx(1e-4 * boost::math::cyl_bessel_k(1.0, 1e-4)).epsilon(1e-13));
  CHECK(std::abs(1e-4 * bessel_k(1, 1e-4) - 1.0) < 1e-4);
  CHECK(x_bessel_k1_series(1e-3) == doctest::Approx(1e-3 * boost::math::cyl_bessel_k(1.0, 1e-3)).epsilon(1e-10));
}

TEST_CASE("known values") {
  CHECK(bessel_k(1, 1) == doctest::Approx(0.6019072301972346).epsilon(1e-13));
  CHECK(bessel_k(1, 2) == doctest::Approx(0.1398658818165224).epsilon(1e-13));
  CHECK(bessel_k(0.5, 1) == doctest::Approx(std::sqrt(std::numbers::pi / 2) * std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("half-integer closed form") {
  for (int m = 0; m <= 5; ++m)
    for (double x : {0.5, 1.0, 5.0}) CHECK(rel(bessel_k_half_integer(m, x), boost::math::cyl_bessel_k(m + 0.5, x)) < 1e-12);
  // m = 1: 1 + 2!/(1! 0!) (2x)^{-1} = 2 at x = 1
  CHECK(bessel_k_half_integer(1, 1.0) == doctest::Approx(2.0 * bessel_k_half_integer(0, 1.0)));
}

TEST_CASE("quadrature representation") {
  CHECK(bessel_k_quadrature(0.5, 1, 1) == doctest::Approx(std::sqrt(std::numbers::pi / 2) / std::exp(1.0)).epsilon(1e-10));
  CHECK(bessel_k_quadrature(1, 2, 1) == doctest::Approx(0.1398658818165224).epsilon(1e-9));
  // depends only on the product x z
  for (auto [x, z] : {std::pair{0.5, 3.0}, std::pair{4.0, 0.25}, std::pair{1.2, 1.5}})
    CHECK(rel(bessel_k_quadrature(1.5, x, z), bessel_k_quadrature(1.5, x * z, 1.0)) < 1e-9);
  double worst = 0;
  for (double a : {0.5, 1.0, 1.5, 2.0})
    for (int i = 0; i < 15; ++i) {
      const double x = 0.1 * std::pow(200.0, i / 14.0);
      worst = std::max(worst, rel(bessel_k_quadrature(a, x, 1.0), boost::math::cyl_bessel_k(a, x)));
    }
  CHECK(worst < 1e-8);
}

TEST_CASE("asymptotic expansion") {
  CHECK(rel(bessel_k(1, 20), bessel_k_asymptotic(1, 20, 3)) < 1e-4);
  CHECK(std::abs(bessel_k(1, 50) / bessel_k_asymptotic(1, 50, 1) - (1 + 3.0 / 400)) < 1e-3);
  // mu = 1: every correction vanishes
  CHECK(bessel_k_asymptotic(0.5, 7, 1) == doctest::Approx(bessel_k_asymptotic(0.5, 7, 4)));
  CHECK_THROWS_AS(bessel_k_asymptotic(1, 4, 2), std::domain_error);
  CHECK_THROWS_AS(bessel_k_asymptotic(1, 10, 5), std::invalid_argument);
}

TEST_CASE("recurrence, positivity, monotonicity") {
  for (double a : {1.0, 1.5, 2.0, 2.5})
    for (double x : {0.1, 1.0, 10.0}) {
      const double lhs = bessel_k(a + 1, x);
      CHECK(std::abs(lhs - bessel_k(a - 1, x) - 2 * a / x * bessel_k(a, x)) < 1e-9 * lhs);
    }
  double prev = INFINITY;
  for (double x = 1e-3; x < 50; x *= 1.5) {
    const double k = bessel_k(2, x);
    CHECK(k > 0);
    CHECK(k < prev);
    prev = k;
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_k(1, 0), std::domain_error);
  CHECK_THROWS_AS(bessel_k(1, -2), std::domain_error);
}

TEST_CASE("reciprocal gamma coefficients reproduce 1/Gamma") {
  const auto& c = reciprocal_gamma_coefficients();
  for (double x : {-0.4, -0.1, 0.05, 0.3, 0.5}) {
    double sum = 0, p = x;
    for (double ck : c) {
      sum += ck * p;
      p *= x;
    }
    CHECK(sum == doctest::Approx(1.0 / std::tgamma(x)).epsilon(1e-14));
  }
}

TEST_CASE("quadrature primitives") {
  using quad::Real;
  const quad::PanelRule rule{[](Real) { return Real(1); }};
  const auto e = quad::integrate(quad::ComplexFn([](Real t) { return quad::Complex(std::exp(-t), 0); }), 0, 10, rule);
  CHECK(static_cast<double>(e.value.real()) == doctest::Approx(1 - std::exp(-10.0)).epsilon(1e-15));

  const auto tail = quad::integrate_to_infinity(quad::ComplexFn([](Real t) { return quad::Complex(1 / (t * t), 0); }), 2);
  CHECK(static_cast<double>(tail.value.real()) == doctest::Approx(0.5).epsilon(1e-14));

  // int_0^inf cos(x t) / (t^2 + z^2) dt = pi e^{-x z} / (2 z)
  for (double x : {0.0, 0.5, 3.0}) {
    const auto c = quad::cosine_transform(1, x, 2);
    CHECK(static_cast<double>(c.value.real()) == doctest::Approx(std::numbers::pi * std::exp(-2 * x) / 4).epsilon(1e-12));
  }
  CHECK_THROWS(quad::cosine_transform(0.5, 0.0, 1.0));

  // partial sums of the alternating harmonic series
  std::vector<quad::Complex> partial;
  quad::Complex s = 0;
  for (int k = 1; k <= 12; ++k) {
    s += quad::Complex((k % 2 ? 1.0L : -1.0L) / k, 0);
    partial.push_back(s);
  }
  CHECK(static_cast<double>(quad::wynn_epsilon(partial).real()) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("budget exhaustion reports the achieved error") {
  using quad::Real;
  const quad::PanelRule rule{[](Real) { return Real(1); }, 1e-17L, 3};
  try {
    quad::integrate(quad::ComplexFn([](Real t) { return quad::Complex(std::sin(1 / (t + 1e-9L)), 0); }), 0, 1, rule);
    FAIL("expected a QuadratureError");
  } catch (const quad::QuadratureError& e) {
    CHECK(e.achieved_error() > 0);
  }
}
