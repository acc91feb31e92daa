#pragma once

// Finite-difference checks in rank one and the repository-wide consistency
// report.

#include "symspace/root_system.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace symspace {

struct FDConfig {
  double h = 1e-3;
  int order = 4;

  /// Throws std::invalid_argument unless h is in [1e-5, 1e-1] and order is
  /// 2 or 4.
  void validate() const;
};

/// |rho|^2 (f''(s) + 2 coth(s) f'(s)) by central differences, where
/// s = rho(H) on the ray through rho.  R must have rank one; s > 2h.
double radial_laplacian_rank1(const std::function<double(double)>& f, double s, const RootSystem& R,
                              const FDConfig& cfg);

/// |(Delta_rad - lambda_z)^2 u_odd(s)| / |lambda_z^2 u_odd(s)| for A1 with
/// nu = 2, by nested finite differences.  z > 0, s in [0.2, 10], 4h < s.
/// When lambda_z = 0 the normalization uses |rho|^4 instead.
double pde_residual_rank1(double z, double s, const FDConfig& cfg);

/// |Delta_rad phi + (t^2 |rho|^2 + |rho|^2) phi| / |phi| for A1, with
/// phi = zonal_spherical(t rho, .) on the ray s = rho(H).
double eigenvalue_residual_rank1(double t, double s, const FDConfig& cfg);

enum class Suite { harmonicity, weyl, spherical, bessel, fundsol, residue, hecke, pde };

const std::vector<Suite>& all_suites();
std::string suite_name(Suite s);
/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);

struct ReportOptions {
  std::vector<std::string> systems = {"A:1", "A:2", "C:2", "G:2", "A:3"};
  /// Empty means every suite.
  std::set<Suite> suites;
  /// Replaces the tolerance of the quadrature-based checks and loosens the
  /// quadrature accordingly.
  std::optional<double> tolerance_override;
  /// Negative controls.
  bool corrupt_pi_plus = false;
  bool corrupt_prefactor_sign = false;
};

struct CheckResult {
  std::string check_id;
  bool pass = false;
  double achieved_error = 0.0;
  double tolerance = 0.0;
  nlohmann::json parameters = nlohmann::json::object();
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// {"status", "summary": {total, passed, failed}, "checks": [{check_id,
  /// status, achieved_error, tolerance, parameters}, ...]}
  nlohmann::json to_json() const;
};

Report consistency_report(const ReportOptions& options = {});

}  // namespace symspace
