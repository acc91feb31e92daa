#include "symspace/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace symspace;

TEST_CASE("finite-difference configuration") {
  CHECK_NOTHROW(FDConfig{}.validate());
  CHECK_THROWS_AS((FDConfig{1e-6, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FDConfig{1e-3, 3}.validate()), std::invalid_argument);
}

TEST_CASE("radial Laplacian on simple profiles") {
  const auto R = build_root_system("A1");
  CHECK(std::abs(radial_laplacian_rank1([](double) { return 3.0; }, 1.0, R, {})) < 1e-9);
  // f = s: |rho|^2 (0 + 2 coth s)
  CHECK(radial_laplacian_rank1([](double s) { return s; }, 1.0, R, {}) ==
        doctest::Approx(2.0 * 2.0 / std::tanh(1.0)).epsilon(1e-9));
  CHECK_THROWS_AS(radial_laplacian_rank1([](double s) { return s; }, 1e-3, R, {}), std::domain_error);
  CHECK_THROWS_AS(radial_laplacian_rank1([](double s) { return s; }, 1.0, build_root_system("A2"), {}),
                  std::invalid_argument);
}

TEST_CASE("PDE residual") {
  CHECK(pde_residual_rank1(1.0, 1.0, {1e-2, 4}) < 1e-4);
  CHECK(pde_residual_rank1(2.0, 0.5, {1e-2, 4}) < 1e-3);
  // fourth order: halving h divides the residual by about 16
  const double coarse = pde_residual_rank1(1.0, 1.0, {4e-2, 4});
  const double fine = pde_residual_rank1(1.0, 1.0, {2e-2, 4});
  CHECK(coarse / fine > 10);
  CHECK_THROWS_AS(pde_residual_rank1(1.0, 0.1, {}), std::domain_error);
  CHECK_THROWS_AS(pde_residual_rank1(1.0, 0.3, {1e-1, 4}), std::invalid_argument);
}

TEST_CASE("eigenvalue residual") {
  for (double t : {0.5, 1.0, 2.0})
    for (double s : {0.5, 1.0, 2.0}) CHECK(eigenvalue_residual_rank1(t, s, {1e-3, 4}) < 1e-6);
}

TEST_CASE("suite names") {
  for (Suite s : all_suites()) CHECK(parse_suite(suite_name(s)) == s);
  CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
}

TEST_CASE("report: exact suites pass, negative control fails") {
  ReportOptions opt;
  opt.suites = {Suite::harmonicity, Suite::weyl};
  const Report good = consistency_report(opt);
  CHECK(good.all_passed());
  CHECK(good.to_json()["status"] == "pass");

  opt.corrupt_pi_plus = true;
  opt.suites = {Suite::harmonicity};
  const Report bad = consistency_report(opt);
  CHECK_FALSE(bad.all_passed());
  const auto j = bad.to_json();
  CHECK(j["status"] == "fail");
  CHECK(j["summary"]["failed"].get<int>() > 0);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("check_id"));
    CHECK(c.contains("achieved_error"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("parameters"));
  }
}

TEST_CASE("report: PDE and residue suites") {
  ReportOptions opt;
  opt.suites = {Suite::pde, Suite::residue};
  CHECK(consistency_report(opt).all_passed());
  opt.tolerance_override = 1e-30;
  CHECK_FALSE(consistency_report(opt).all_passed());
}
