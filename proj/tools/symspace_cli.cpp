#include "symspace/bessel.hpp"
#include "symspace/fundamental_solution.hpp"
#include "symspace/quadrature.hpp"
#include "symspace/root_system.hpp"
#include "symspace/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace symspace;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Rejected input that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);  // no "-0"
  return buf;
}

json vec_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

SolutionParams make_params(const RootSystem& R, double z, std::optional<int> nu) {
  if (!nu || *nu == SolutionParams::canonical_nu(R)) return SolutionParams::canonical(R, z);
  return SolutionParams::general(R, *nu, z);
}

// Simple-root coordinates to a unit vector in the orthonormal frame.
Eigen::VectorXd unit_direction(const RootSystem& R, const std::vector<double>& coords) {
  if (coords.empty()) return rho(R).normalized();
  if (static_cast<int>(coords.size()) != R.rank())
    throw UsageError("direction needs " + std::to_string(R.rank()) + " simple-root coordinates");
  const Eigen::VectorXd v = R.to_orthonormal(Eigen::Map<const Eigen::VectorXd>(coords.data(), R.rank()));
  if (!(v.norm() > 0.0) || !v.allFinite()) throw UsageError("direction must be a non-zero finite vector");
  return v / v.norm();
}

struct InfoArgs {
  std::string spec;
  std::string format = "text";
};

int cmd_info(const InfoArgs& a) {
  const RootSystem R = build_root_system(a.spec);
  const int n = R.rank();
  const int d = R.num_positive();
  json j = to_json(R);
  j["n"] = n;
  j["d"] = d;
  j["nu_odd"] = d + (n + 1) / 2.0;
  j["nu_even"] = d + n / 2.0 + 1.0;
  j["nu_canonical"] = SolutionParams::canonical_nu(R);
  j["pi_plus_rho"] = pi_plus(R, rho(R));
  if (a.format == "json") {
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "system        " << R.label() << '\n'
            << "n             " << n << '\n'
            << "d             " << d << '\n'
            << "nu_odd        " << g17(d + (n + 1) / 2.0) << '\n'
            << "nu_even       " << g17(d + n / 2.0 + 1.0) << '\n'
            << "nu_canonical  " << SolutionParams::canonical_nu(R) << '\n'
            << "rho           ";
  const Eigen::VectorXd r = rho(R);
  for (Eigen::Index i = 0; i < r.size(); ++i) std::cout << (i ? " " : "") << g17(r[i]);
  std::cout << '\n'
            << "pi_plus(rho)  " << g17(pi_plus(R, r)) << '\n'
            << "weyl_order    " << R.weyl().order() << '\n';
  return kExitOk;
}

struct EvalArgs {
  std::string spec;
  double z = 1.0;
  std::optional<int> nu;
  std::vector<double> point;
  bool orthonormal = false;
  std::string format = "json";
};

int cmd_eval(const EvalArgs& a) {
  const RootSystem R = build_root_system(a.spec);
  if (static_cast<int>(a.point.size()) != R.rank())
    throw UsageError("point needs " + std::to_string(R.rank()) + " coordinates");
  const Eigen::VectorXd raw = Eigen::Map<const Eigen::VectorXd>(a.point.data(), R.rank());
  const CartanVector H(a.orthonormal ? raw : R.to_orthonormal(raw));
  const auto p = make_params(R, a.z, a.nu);
  const auto u = fundamental_solution(p, H);
  if (a.format == "csv") {
    std::cout << "# system=" << R.label() << " z=" << g17(a.z) << " nu=" << p.nu() << '\n'
              << "re_u,im_u,sinh_ratio_product,norm_H\n"
              << g17(u.real()) << ',' << g17(u.imag()) << ',' << g17(sinh_ratio_product(R, H)) << ','
              << g17(H.norm()) << '\n';
    return kExitOk;
  }
  json j = {{"system", R.label()}, {"z", a.z}, {"nu", p.nu()}, {"H", vec_json(H.coords)},
            {"re_u", u.real()}, {"im_u", u.imag()}, {"sinh_ratio_product", sinh_ratio_product(R, H)},
            {"norm_H", H.norm()}};
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

struct TableArgs {
  std::string spec;
  double z = 1.0;
  std::optional<int> nu;
  double start = 0.0;
  double stop = 5.0;
  int count = 11;
  std::vector<double> direction;
  std::string format = "csv";
};

int cmd_table(const TableArgs& a) {
  const RootSystem R = build_root_system(a.spec);
  if (a.count < 1) throw UsageError("count must be positive");
  if (!(a.start >= 0.0) || !(a.stop >= a.start)) throw UsageError("need 0 <= start <= stop");
  const Eigen::VectorXd dir = unit_direction(R, a.direction);
  const auto p = make_params(R, a.z, a.nu);
  std::vector<double> s(static_cast<std::size_t>(a.count));
  for (int i = 0; i < a.count; ++i) s[i] = a.count == 1 ? a.start : a.start + (a.stop - a.start) * i / (a.count - 1);
  const auto rows = evaluate_ray(p, dir, s);

  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"s", r.s}, {"re_u", r.u.real()}, {"im_u", r.u.imag()},
                     {"sinh_ratio_product", r.sinh_ratio_product}, {"norm_H", r.H.norm()}});
    std::cout << json{{"system", R.label()}, {"z", a.z}, {"nu", p.nu()}, {"direction", vec_json(dir)}, {"rows", arr}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << "# system=" << R.label() << " n=" << R.rank() << " d=" << R.num_positive() << '\n'
            << "# z=" << g17(a.z) << " nu=" << p.nu() << '\n'
            << "# direction(orthonormal)=";
  for (Eigen::Index i = 0; i < dir.size(); ++i) std::cout << (i ? "," : "") << g17(dir[i]);
  std::cout << "\n# H = s * direction\n"
            << "s,re_u,im_u,sinh_ratio_product,norm_H\n";
  for (const auto& r : rows)
    std::cout << g17(r.s) << ',' << g17(r.u.real()) << ',' << g17(r.u.imag()) << ',' << g17(r.sinh_ratio_product)
              << ',' << g17(r.H.norm()) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> only;
  std::optional<double> tol;
  std::vector<std::string> systems;
  bool corrupt_pi_plus = false;
  bool corrupt_prefactor_sign = false;
};

int cmd_verify(const VerifyArgs& a) {
  ReportOptions opt;
  if (!a.systems.empty()) opt.systems = a.systems;
  for (const auto& name : a.only) opt.suites.insert(parse_suite(name));
  if (a.tol && !(*a.tol > 0.0)) throw UsageError("--tol must be positive");
  opt.tolerance_override = a.tol;
  opt.corrupt_pi_plus = a.corrupt_pi_plus;
  opt.corrupt_prefactor_sign = a.corrupt_prefactor_sign;
  for (const auto& s : opt.systems) build_root_system(s);  // reject bad specs before running anything

  const Report report = consistency_report(opt);
  std::cout << report.to_json().dump(2) << '\n';
  return report.all_passed() ? kExitOk : kExitFail;
}

struct BesselArgs {
  double alpha = 1.0;
  std::vector<double> x;
  std::string method = "series";
  int terms = 3;
};

int cmd_bessel(const BesselArgs& a) {
  json arr = json::array();
  for (double x : a.x) {
    double v = 0.0;
    if (a.method == "series") {
      v = bessel_k(a.alpha, x);
    } else if (a.method == "quadrature") {
      v = bessel_k_quadrature(a.alpha, x, 1.0);
    } else if (a.method == "asymptotic") {
      v = bessel_k_asymptotic(a.alpha, x, a.terms);
    } else {
      const double m = a.alpha - 0.5;
      if (m < 0 || m != std::floor(m)) throw UsageError("half-integer method needs alpha = m + 1/2");
      v = bessel_k_half_integer(static_cast<int>(m), x);
    }
    arr.push_back({{"x", x}, {"value", v}});
  }
  std::cout << json{{"alpha", a.alpha}, {"method", a.method}, {"values", arr}}.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental solutions of (Laplacian - lambda_z)^nu on complex symmetric spaces"};
  app.require_subcommand(1);

  InfoArgs info;
  auto* info_cmd = app.add_subcommand("info", "Root-system data and canonical exponents");
  info_cmd->add_option("spec", info.spec, "Root system, e.g. A:2 or A:1+A:1")->required();
  info_cmd->add_option("--format", info.format)->check(CLI::IsMember({"text", "json"}));

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate u_z at one point");
  eval_cmd->add_option("spec", ev.spec)->required();
  eval_cmd->add_option("--z", ev.z, "Spectral parameter (> 0)")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--nu", ev.nu, "Power of the operator (default: canonical)");
  eval_cmd->add_option("--point", ev.point, "Point, comma separated, in simple-root coordinates")
      ->delimiter(',')
      ->required();
  eval_cmd->add_flag("--orthonormal", ev.orthonormal, "Read --point in orthonormal coordinates");
  eval_cmd->add_option("--format", ev.format)->check(CLI::IsMember({"csv", "json"}));

  TableArgs tb;
  auto* table_cmd = app.add_subcommand("table", "Tabulate u_z along a ray");
  table_cmd->add_option("spec", tb.spec)->required();
  table_cmd->add_option("--z", tb.z)->check(CLI::PositiveNumber);
  table_cmd->add_option("--nu", tb.nu);
  table_cmd->add_option("--start", tb.start, "First |H|");
  table_cmd->add_option("--stop", tb.stop, "Last |H|");
  table_cmd->add_option("--count", tb.count, "Number of points");
  table_cmd->add_option("--direction", tb.direction, "Ray in simple-root coordinates (default: rho)")->delimiter(',');
  table_cmd->add_option("--format", tb.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs vf;
  auto* verify_cmd = app.add_subcommand("verify", "Run the consistency report");
  verify_cmd->add_option("--only", vf.only, "Suites to run (repeatable)")
      ->check(CLI::IsMember({"harmonicity", "weyl", "spherical", "bessel", "fundsol", "residue", "hecke", "pde"}));
  verify_cmd->add_option("--tol", vf.tol, "Tolerance override for the quadrature-based checks");
  verify_cmd->add_option("--systems", vf.systems, "Root systems, comma separated")->delimiter(',');
  verify_cmd->add_flag("--corrupt-pi-plus", vf.corrupt_pi_plus, "Negative control: perturb pi+");
  verify_cmd->add_flag("--corrupt-prefactor-sign", vf.corrupt_prefactor_sign, "Negative control: flip the prefactor");

  BesselArgs bs;
  auto* bessel_cmd = app.add_subcommand("bessel", "Modified Bessel function K_alpha");
  bessel_cmd->add_option("--alpha", bs.alpha)->check(CLI::NonNegativeNumber);
  bessel_cmd->add_option("--x", bs.x, "Arguments, comma separated")->delimiter(',')->required();
  bessel_cmd->add_option("--method", bs.method)
      ->check(CLI::IsMember({"series", "quadrature", "asymptotic", "half-integer"}));
  bessel_cmd->add_option("--terms", bs.terms, "Asymptotic terms (1..4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info_cmd) return cmd_info(info);
    if (*eval_cmd) return cmd_eval(ev);
    if (*table_cmd) return cmd_table(tb);
    if (*verify_cmd) return cmd_verify(vf);
    if (*bessel_cmd) return cmd_bessel(bs);
  } catch (const quad::QuadratureError& e) {
    std::cerr << "error: " << e.what() << " (achieved " << e.achieved_error() << ")\n";
    return kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
