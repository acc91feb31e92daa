#include "symspace/verify.hpp"

#include "symspace/bessel.hpp"
#include "symspace/fundamental_solution.hpp"
#include "symspace/oracle.hpp"
#include "symspace/spherical.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace symspace {

namespace {

using cplx = std::complex<double>;
using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi() { return std::numbers::pi; }

double first_derivative(const std::function<double(double)>& f, double s, double h, int order) {
  if (order == 2) return (f(s + h) - f(s - h)) / (2.0 * h);
  return (-f(s + 2 * h) + 8.0 * f(s + h) - 8.0 * f(s - h) + f(s - 2 * h)) / (12.0 * h);
}

double second_derivative(const std::function<double(double)>& f, double s, double h, int order) {
  if (order == 2) return (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h);
  return (-f(s + 2 * h) + 16.0 * f(s + h) - 30.0 * f(s) + 16.0 * f(s - h) - f(s - 2 * h)) / (12.0 * h * h);
}

const RootSystem& a1() {
  static const RootSystem R = build_root_system(Family::A, 1);
  return R;
}

// H on the ray through rho with rho(H) = s.
CartanVector rank1_point(const RootSystem& R, double s) {
  const Eigen::VectorXd r = rho(R);
  return CartanVector(Eigen::VectorXd(s * r / r.squaredNorm()));
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::size_t classical_weyl_order(const RootSystem& R) {
  std::size_t order = 1;
  for (const auto& f : R.factors()) {
    const int n = f.rank;
    switch (f.family) {
      case Family::A:
        order *= factorial(n + 1);
        break;
      case Family::B:
      case Family::C:
        order *= (std::size_t{1} << n) * factorial(n);
        break;
      case Family::D:
        order *= (std::size_t{1} << (n - 1)) * factorial(n);
        break;
      case Family::G:
        order *= 12;
        break;
    }
  }
  return order;
}

int classical_positive_count(const RootSystem& R) {
  int d = 0;
  for (const auto& f : R.factors()) {
    const int n = f.rank;
    switch (f.family) {
      case Family::A:
        d += n * (n + 1) / 2;
        break;
      case Family::B:
      case Family::C:
        d += n * n;
        break;
      case Family::D:
        d += n * (n - 1);
        break;
      case Family::G:
        d += 6;
        break;
    }
  }
  return d;
}

class Recorder {
 public:
  explicit Recorder(Report& r) : report_(r) {}

  void add(const std::string& id, double achieved, double tol, json params = json::object()) {
    CheckResult c;
    c.check_id = id;
    c.achieved_error = achieved;
    c.tolerance = tol;
    c.pass = std::isfinite(achieved) && achieved <= tol;
    c.parameters = std::move(params);
    report_.checks.push_back(std::move(c));
  }

  // Runs `body`, recording a failure if it throws.
  template <class F>
  void guarded(const std::string& id, double tol, json params, F&& body) {
    try {
      body();
    } catch (const quad::QuadratureError& e) {
      params["error"] = e.what();
      add(id, e.achieved_error() > 0 ? std::max(e.achieved_error(), tol * 2) : kNaN, tol, std::move(params));
    } catch (const std::exception& e) {
      params["error"] = e.what();
      add(id, kNaN, tol, std::move(params));
    }
  }

 private:
  Report& report_;
};

std::string tag(const std::string& base, const RootSystem& R) { return base + "[" + R.label() + "]"; }

Eigen::VectorXd random_vector(std::mt19937_64& rng, int n, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = scale * u(rng);
  return v;
}

// A random vector in the open dominant chamber, far from the walls.
Eigen::VectorXd random_regular(const RootSystem& R, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(0.3, 1.0);
  Eigen::VectorXd c(R.rank());
  for (int i = 0; i < R.rank(); ++i) c[i] = u(rng);
  // Fundamental-weight combinations are dominant: solve <alpha_i, v> = c_i.
  const Eigen::MatrixXd S = R.simple_roots_orthonormal();
  Eigen::VectorXd v = S.fullPivLu().solve(c);
  return scale * v / v.norm();
}

void run_harmonicity(Recorder& rec, const RootSystem& R, bool corrupt) {
  const auto n = static_cast<std::size_t>(R.rank());
  auto factors = pi_plus_factors(R);
  if (corrupt) {
    // In rank one pi+ is linear, so this only rescales it and it stays harmonic.
    Polynomial::Exponent e(n, 0);
    e[0] = 1;
    factors.back().add_term(e, Rational(1));
  }
  const Polynomial p = product(factors, n);
  const Polynomial lap = laplacian_poly(R, p);
  const Polynomial ps = pair_sum(R, factors);
  const json params = {{"system", R.label()}, {"corrupted", corrupt}};
  rec.add(tag("harmonicity.laplacian_zero", R), static_cast<double>(lap.num_terms()), 0.0, params);
  rec.add(tag("harmonicity.pair_sum_zero", R), static_cast<double>(ps.num_terms()), 0.0, params);
  rec.add(tag("harmonicity.laplacian_equals_pair_sum", R), static_cast<double>((lap - ps).num_terms()), 0.0, params);
  const bool degree_ok = p.degree() == R.num_positive() && p.is_homogeneous();
  rec.add(tag("harmonicity.degree", R), degree_ok ? 0.0 : 1.0, 0.0, params);

  // pi+(c mu) = c^d pi+(mu) exactly.
  std::vector<Rational> mu(n), cmu(n);
  const Rational c(3, 2);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = Rational(static_cast<long>(2 * i + 1), static_cast<long>(i + 3));
    cmu[i] = c * mu[i];
  }
  Rational cd = 1;
  for (int k = 0; k < R.num_positive(); ++k) cd *= c;
  const bool homog = pi_plus_exact(R, cmu) == cd * pi_plus_exact(R, mu);
  rec.add(tag("harmonicity.homogeneity", R), homog ? 0.0 : 1.0, 0.0, {{"system", R.label()}, {"c", "3/2"}});
}

void run_weyl(Recorder& rec, const RootSystem& R) {
  const WeylGroup& W = R.weyl();
  const json params = {{"system", R.label()}};
  rec.add(tag("weyl.order", R), std::abs(static_cast<double>(W.order()) - static_cast<double>(classical_weyl_order(R))),
          0.0, {{"system", R.label()}, {"order", W.order()}, {"classical", classical_weyl_order(R)}});
  rec.add(tag("weyl.positive_count", R), std::abs(R.num_positive() - classical_positive_count(R)), 0.0,
          {{"system", R.label()}, {"d", R.num_positive()}});

  double det_err = 0.0;
  for (std::size_t w = 0; w < W.order(); ++w)
    det_err = std::max(det_err, std::abs(W.orthogonal(w).determinant() - W.sign(w)));
  rec.add(tag("weyl.sign_is_determinant", R), det_err, 1e-9, params);

  const auto roots = R.all_roots();
  const std::set<RootCoords> root_set(roots.begin(), roots.end());
  int perm_fail = 0;
  for (std::size_t w = 0; w < W.order(); ++w) {
    std::set<RootCoords> image;
    for (const auto& r : roots) image.insert(W.apply(w, r));
    if (image != root_set) ++perm_fail;
  }
  rec.add(tag("weyl.permutes_roots", R), perm_fail, 0.0, params);

  // Closure under multiplication (sampled for large groups).
  std::map<std::vector<long long>, int> index;
  for (std::size_t w = 0; w < W.order(); ++w) {
    const IntMatrix& m = W.root_matrix(w);
    index[std::vector<long long>(m.data(), m.data() + m.size())] = static_cast<int>(w);
  }
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, W.order() - 1);
  int closure_fail = 0;
  const std::size_t pairs = std::min<std::size_t>(W.order() * W.order(), 2000);
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t a = W.order() * W.order() <= 2000 ? k / W.order() : pick(rng);
    const std::size_t b = W.order() * W.order() <= 2000 ? k % W.order() : pick(rng);
    const IntMatrix m = W.root_matrix(a) * W.root_matrix(b);
    if (!index.count(std::vector<long long>(m.data(), m.data() + m.size()))) ++closure_fail;
  }
  rec.add(tag("weyl.closed_under_product", R), closure_fail, 0.0, params);

  const auto n = static_cast<std::size_t>(R.rank());
  std::vector<Rational> mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = Rational(static_cast<long>(i + 1), static_cast<long>(2 * i + 3));
  int exact_fail = 0;
  for (std::size_t w = 0; w < W.order(); ++w)
    if (!weyl_sign_equivariance_exact(R, mu, w)) ++exact_fail;
  rec.add(tag("weyl.sign_equivariance_exact", R), exact_fail, 0.0, params);

  int num_fail = 0;
  for (int trial = 0; trial < 3; ++trial) {
    const Eigen::VectorXd v = random_vector(rng, R.rank(), 2.0);
    for (std::size_t w = 0; w < W.order(); ++w)
      if (!weyl_sign_equivariance_check(R, v, w)) ++num_fail;
  }
  rec.add(tag("weyl.sign_equivariance_numeric", R), num_fail, 0.0, params);
}

void run_spherical(Recorder& rec, const RootSystem& R) {
  const WeylGroup& W = R.weyl();
  const int n = R.rank();
  std::mt19937_64 rng(29);
  const json params = {{"system", R.label()}};

  double norm_err = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    const SpectralVector lam(trial == 0 ? rho(R) : random_vector(rng, n, 2.3));
    Eigen::VectorXd dir = random_vector(rng, n, 1.0);
    const CartanVector H(Eigen::VectorXd(1e-6 * dir / dir.norm()));
    norm_err = std::max(norm_err, std::abs(zonal_spherical(R, lam, H) - 1.0));
  }
  rec.add(tag("spherical.normalization", R), norm_err, 1e-8, {{"system", R.label()}, {"norm_H", 1e-6}});

  double lam_err = 0.0, h_err = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const Eigen::VectorXd l = random_regular(R, rng, 1.7);
    const Eigen::VectorXd h = random_regular(R, rng, 0.9);
    const cplx base = zonal_spherical(R, SpectralVector(l), CartanVector(h));
    for (std::size_t w = 0; w < W.order(); ++w) {
      const cplx a = zonal_spherical(R, SpectralVector(Eigen::VectorXd(W.orthogonal(w) * l)), CartanVector(h));
      const cplx b = zonal_spherical(R, SpectralVector(l), CartanVector(Eigen::VectorXd(W.orthogonal(w) * h)));
      lam_err = std::max(lam_err, std::abs(a - base) / (1.0 + std::abs(base)));
      h_err = std::max(h_err, std::abs(b - base) / (1.0 + std::abs(base)));
    }
  }
  rec.add(tag("spherical.weyl_invariance_lambda", R), lam_err, 1e-10, params);
  rec.add(tag("spherical.weyl_invariance_H", R), h_err, 1e-10, params);

  double bound = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const SpectralVector lam(random_vector(rng, n, 4.0));
    const CartanVector H(random_vector(rng, n, 3.0));
    bound = std::max(bound, std::abs(zonal_spherical(R, lam, H)) - 1.0);
  }
  rec.add(tag("spherical.bounded_by_one", R), std::max(bound, 0.0), 1e-10, params);

  const double one = c_function_density(R, SpectralVector(rho(R)));
  const double two = c_function_density(R, SpectralVector(Eigen::VectorXd(2.0 * rho(R))));
  const double expect = std::pow(4.0, R.num_positive());
  rec.add(tag("spherical.density_homogeneity", R), std::abs(one - 1.0) + std::abs(two / expect - 1.0), 1e-12, params);

  if (n == 1) {
    double cf = 0.0;
    for (double t : {0.0, 0.5, 1.0, 2.0, 3.7})
      for (double s : {0.1, 1.0, 3.0}) {
        const SpectralVector lam(Eigen::VectorXd(t * rho(R)));
        const cplx phi = zonal_spherical(R, lam, rank1_point(R, s));
        const double expect_val = t == 0.0 ? s / std::sinh(s) : std::sin(t * s) / (t * std::sinh(s));
        cf = std::max(cf, std::abs(phi - expect_val));
      }
    rec.add(tag("spherical.rank1_closed_form", R), cf, 1e-10, params);
  }
}

void run_bessel(Recorder& rec, const std::optional<double>& override_tol) {
  const double qtol = override_tol.value_or(1e-8);
  rec.guarded("bessel.quadrature_oracle", qtol, {{"alpha", {0.5, 1.0, 1.5, 2.0}}, {"x", "log grid [0.1, 20]"}}, [&] {
    double worst = 0.0;
    for (double a : {0.5, 1.0, 1.5, 2.0})
      for (int i = 0; i < 15; ++i) {
        const double x = 0.1 * std::pow(200.0, i / 14.0);
        worst = std::max(worst, std::abs(bessel_k_quadrature(a, x, 1.0) / bessel_k(a, x) - 1.0));
      }
    rec.add("bessel.quadrature_oracle", worst, qtol, {{"alpha", {0.5, 1.0, 1.5, 2.0}}, {"x", "log grid [0.1, 20]"}});
  });

  double half = 0.0;
  for (int m = 0; m <= 5; ++m)
    for (double x : {0.5, 1.0, 5.0}) half = std::max(half, std::abs(bessel_k_half_integer(m, x) / bessel_k(m + 0.5, x) - 1.0));
  rec.add("bessel.half_integer_closed_form", half, 1e-10, {{"m", "0..5"}, {"x", {0.5, 1.0, 5.0}}});

  double rec_err = 0.0;
  for (double a : {1.0, 1.5, 2.0, 2.5})
    for (double x : {0.1, 0.7, 2.0, 5.0, 19.0}) {
      const double lhs = bessel_k(a + 1, x);
      const double rhs = bessel_k(a - 1, x) + 2.0 * a / x * bessel_k(a, x);
      rec_err = std::max(rec_err, std::abs(lhs - rhs) / lhs);
    }
  rec.add("bessel.recurrence", rec_err, 1e-9, {{"alpha", {1.0, 1.5, 2.0, 2.5}}});

  const double asym = std::abs(bessel_k(1, 20) / bessel_k_asymptotic(1, 20, 3) - 1.0);
  rec.add("bessel.asymptotic_x20", asym, 1e-4, {{"alpha", 1}, {"x", 20}, {"terms", 3}});
  const double lead = std::abs(bessel_k(1, 50) / bessel_k_asymptotic(1, 50, 1) - (1.0 + 3.0 / 400.0));
  rec.add("bessel.asymptotic_leading_correction", lead, 1e-3, {{"alpha", 1}, {"x", 50}, {"terms", 1}});
  const double small = std::abs(1e-4 * bessel_k(1, 1e-4) - 1.0);
  rec.add("bessel.small_argument", small, 1e-4, {{"x", 1e-4}});

  int mono_fail = 0;
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double x = 1e-3; x <= 50.0; x *= 1.3) {
      const double k = bessel_k(a, x);
      if (!(k > 0.0) || !(k < prev)) ++mono_fail;
      prev = k;
    }
  }
  rec.add("bessel.positive_decreasing", mono_fail, 0.0, json::object());
}

void run_fundsol(Recorder& rec, const RootSystem& R, const ReportOptions& opt) {
  const int n = R.rank();
  const Eigen::VectorXd dir = rho(R).normalized();
  const double sign = opt.corrupt_prefactor_sign ? -1.0 : 1.0;
  const double rtol = opt.tolerance_override.value_or(1e-6);
  const double dtol = opt.tolerance_override.value_or(1e-5);
  const json base = {{"system", R.label()}, {"nu", SolutionParams::canonical_nu(R)}};

  {
    json params = base;
    params["z"] = {0.5, 1.0, 2.0};
    params["s"] = {0.25, 1.0, 2.5};
    params["corrupted_prefactor"] = opt.corrupt_prefactor_sign;
    rec.guarded(tag("fundsol.reduced_oracle", R), rtol, params, [&] {
      double worst = 0.0;
      for (double z : {0.5, 1.0, 2.0}) {
        const auto p = SolutionParams::canonical(R, z);
        for (double s : {0.25, 1.0, 2.5}) {
          const CartanVector H(Eigen::VectorXd(s * dir));
          const cplx u = fundamental_solution(p, H);
          const cplx o = sign * representation_prefactor(R, H, p.nu()) * integral_I_reduced(R, H, z, p.nu()).value;
          worst = std::max(worst, std::abs(u - o) / std::abs(u));
        }
      }
      rec.add(tag("fundsol.reduced_oracle", R), worst, rtol, params);
    });
  }

  if (n <= 2) {
    QuadratureConfig cfg = QuadratureConfig::defaults_for(1.0);
    if (opt.tolerance_override) cfg.abs_tolerance = std::clamp(*opt.tolerance_override * 1e-3, 1e-13, 1e-4);
    for (const char* route : {"direct", "spectral"}) {
      const std::string id = tag(std::string("fundsol.") + route + "_oracle", R);
      json params = base;
      params["z"] = 1.0;
      params["s"] = {0.5, 1.5};
      params["corrupted_prefactor"] = opt.corrupt_prefactor_sign;
      rec.guarded(id, dtol, params, [&] {
        double worst = 0.0;
        const auto p = SolutionParams::canonical(R, 1.0);
        for (double s : {0.5, 1.5}) {
          const CartanVector H(Eigen::VectorXd(s * dir));
          const cplx u = fundamental_solution(p, H);
          cplx o;
          if (std::string(route) == "direct")
            o = sign * representation_prefactor(R, H, p.nu()) * integral_I_direct(R, H, 1.0, p.nu(), cfg).value;
          else
            o = spectral_synthesis(R, H, 1.0, p.nu(), cfg).value;
          worst = std::max(worst, std::abs(u - o) / std::abs(u));
        }
        rec.add(id, worst, dtol, params);
      });
    }
  }

  const auto p = SolutionParams::canonical(R, 1.0);
  std::mt19937_64 rng(41);
  double winv = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const Eigen::VectorXd h = random_vector(rng, n, 1.5);
    const cplx u = fundamental_solution(p, CartanVector(h));
    for (std::size_t w = 0; w < R.weyl().order(); ++w) {
      const cplx uw = fundamental_solution(p, CartanVector(Eigen::VectorXd(R.weyl().orthogonal(w) * h)));
      winv = std::max(winv, std::abs(uw - u) / std::abs(u));
    }
  }
  rec.add(tag("fundsol.weyl_invariance", R), winv, 1e-12, base);

  // |u(H) - u(0)| / |H| stays bounded as H -> 0.
  const cplx u0 = u_base_point(p);
  double q_far = 0.0, q_max = 0.0;
  for (double r : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const cplx u = fundamental_solution(p, CartanVector(Eigen::VectorXd(r * dir)));
    const double q = std::abs(u - u0) / (r * std::abs(u0));
    if (r == 1e-2) q_far = q;
    q_max = std::max(q_max, q);
  }
  rec.add(tag("fundsol.base_point_lipschitz", R), q_max / std::max(q_far, 1e-300), 1.5, base);

  double collapse = 0.0;
  for (double s : {0.0, 0.3, 1.0, 4.0}) {
    const CartanVector H(Eigen::VectorXd(s * dir));
    const cplx a = u_general(p, H);
    const cplx b = n % 2 == 1 ? u_odd(p, H) : u_even(p, H);
    collapse = std::max(collapse, std::abs(a - b) / std::abs(b));
    if (n % 2 == 1) {
      const auto p2 = SolutionParams::general(R, p.nu() + 1, 1.0);
      const cplx c = u_half_integer(p2, H);
      const cplx g = u_general(p2, H);
      collapse = std::max(collapse, std::abs(c - g) / std::abs(g));
    }
  }
  rec.add(tag("fundsol.general_collapse", R), collapse, 1e-10, base);

  double jac = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const CartanVector H(random_vector(rng, n, 2.0));
    const double prod = jacobian_sqrt(R, H) * sinh_ratio_product(R, H);
    jac = std::max(jac, std::abs(prod * std::pow(2.0, R.num_positive()) - 1.0));
  }
  rec.add(tag("fundsol.jacobian_identity", R), jac, 1e-12, base);
  if (n == 1) {
    double euclid = 0.0;
    const double c = kPi() / (2.0 * pi_plus(R, rho(R)));
    for (double s : {0.1, 1.0, 3.0}) {
      const CartanVector H = rank1_point(R, s);
      const double lhs = std::real(u_odd(p, H)) * jacobian_sqrt(R, H);
      const double rhs = c * std::exp(-H.norm());
      euclid = std::max(euclid, std::abs(lhs / rhs - 1.0));
    }
    rec.add(tag("fundsol.rank1_euclidean_profile", R), euclid, 1e-10, base);
  }

  // |u(H)| e^{z|H|/2} does not grow past |H| = 1.
  double c1 = 0.0, decay = 0.0;
  for (double r : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    const double v = std::abs(fundamental_solution(p, CartanVector(Eigen::VectorXd(r * dir)))) * std::exp(r / 2.0);
    if (r == 1.0) c1 = v;
    decay = std::max(decay, v / c1);
  }
  rec.add(tag("fundsol.decay", R), decay, 1.0 + 1e-12, base);
}

void run_residue(Recorder& rec, const std::optional<double>& override_tol) {
  const double tol = override_tol.value_or(1e-8);
  double worst = 0.0;
  for (double z : {0.5, 1.0, 2.0})
    for (double t : {0.0, 1.0, 5.0}) worst = std::max(worst, residue_check(z, t).relative_error);
  rec.add("residue.identity", worst, tol, {{"z", {0.5, 1.0, 2.0}}, {"t", {0.0, 1.0, 5.0}}});
}

void run_hecke(Recorder& rec, const RootSystem& R, const std::optional<double>& override_tol) {
  const double tol = override_tol.value_or(1e-6);
  QuadratureConfig cfg;
  if (override_tol) cfg.abs_tolerance = std::clamp(*override_tol * 1e-3, 1e-13, 1e-4);
  const Eigen::VectorXd dir = rho(R).normalized();
  json params = {{"system", R.label()}, {"H", "unit rho direction"}, {"t", {1.0, 2.0}}};
  rec.guarded(tag("hecke.identity", R), tol, params, [&] {
    double paper = 0.0, normalized = 0.0;
    for (double t : {1.0, 2.0}) {
      const HeckeCheck c = hecke_check(R, CartanVector(dir), t, cfg);
      paper = std::max(paper, std::abs(c.lhs - c.rhs) / std::abs(c.rhs));
      normalized = std::max(normalized, std::abs(c.lhs - c.rhs_normalized) / std::abs(c.rhs_normalized));
    }
    rec.add(tag("hecke.identity", R), paper, tol, params);
    rec.add(tag("hecke.identity_normalized", R), normalized, tol, params);
  });
}

void run_pde(Recorder& rec) {
  FDConfig pde_cfg{1e-2, 4};
  double worst = 0.0;
  for (double z : {0.5, 1.0, 2.0})
    for (double s : {0.3, 1.0, 3.0}) worst = std::max(worst, pde_residual_rank1(z, s, pde_cfg));
  rec.add("pde.rank1_residual", worst, 1e-3, {{"z", {0.5, 1.0, 2.0}}, {"s", {0.3, 1.0, 3.0}}, {"h", 1e-2}, {"order", 4}});

  FDConfig eig_cfg{1e-3, 4};
  double eig = 0.0;
  for (double t : {0.5, 1.0, 2.0})
    for (double s : {0.5, 1.0, 2.0}) eig = std::max(eig, eigenvalue_residual_rank1(t, s, eig_cfg));
  rec.add("pde.rank1_eigenvalue", eig, 1e-6, {{"t", {0.5, 1.0, 2.0}}, {"s", {0.5, 1.0, 2.0}}, {"h", 1e-3}, {"order", 4}});
}

}  // namespace

void FDConfig::validate() const {
  if (!(h >= 1e-5 && h <= 1e-1)) throw std::invalid_argument("FDConfig: step must lie in [1e-5, 1e-1]");
  if (order != 2 && order != 4) throw std::invalid_argument("FDConfig: order must be 2 or 4");
}

double radial_laplacian_rank1(const std::function<double(double)>& f, double s, const RootSystem& R,
                              const FDConfig& cfg) {
  cfg.validate();
  if (R.rank() != 1) throw std::invalid_argument("radial_laplacian_rank1: needs a rank-one root system");
  if (!(s > 2.0 * cfg.h)) throw std::domain_error("radial_laplacian_rank1: s must exceed 2h");
  const double rho2 = rho(R).squaredNorm();
  const double d1 = first_derivative(f, s, cfg.h, cfg.order);
  const double d2 = second_derivative(f, s, cfg.h, cfg.order);
  return rho2 * (d2 + 2.0 / std::tanh(s) * d1);
}

double pde_residual_rank1(double z, double s, const FDConfig& cfg) {
  cfg.validate();
  if (!(z > 0.0)) throw std::invalid_argument("pde_residual_rank1: z must be positive");
  if (!(s >= 0.2 && s <= 10.0)) throw std::domain_error("pde_residual_rank1: s must lie in [0.2, 10]");
  if (!(4.0 * cfg.h < s)) throw std::invalid_argument("pde_residual_rank1: step too large for the nested stencil at this s");
  const RootSystem& R = a1();
  const auto p = SolutionParams::canonical(R, z);
  const double lambda_z = z * z - rho(R).squaredNorm();
  auto u = [&](double t) { return u_odd(p, rank1_point(R, t)).real(); };
  auto once = [&](double t) { return radial_laplacian_rank1(u, t, R, cfg) - lambda_z * u(t); };
  const double twice = radial_laplacian_rank1(once, s, R, cfg) - lambda_z * once(s);
  const double rho2 = rho(R).squaredNorm();
  const double norm = lambda_z != 0.0 ? lambda_z * lambda_z : rho2 * rho2;
  return std::abs(twice) / (norm * std::abs(u(s)));
}

double eigenvalue_residual_rank1(double t, double s, const FDConfig& cfg) {
  cfg.validate();
  const RootSystem& R = a1();
  const SpectralVector lam(Eigen::VectorXd(t * rho(R)));
  auto phi = [&](double x) { return zonal_spherical(R, lam, rank1_point(R, x)).real(); };
  const double lap = radial_laplacian_rank1(phi, s, R, cfg);
  const double value = phi(s);
  return std::abs(lap - casimir_eigenvalue(R, lam) * value) / std::abs(value);
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s = {Suite::harmonicity, Suite::weyl,    Suite::spherical, Suite::bessel,
                                       Suite::fundsol,     Suite::residue, Suite::hecke,     Suite::pde};
  return s;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::harmonicity:
      return "harmonicity";
    case Suite::weyl:
      return "weyl";
    case Suite::spherical:
      return "spherical";
    case Suite::bessel:
      return "bessel";
    case Suite::fundsol:
      return "fundsol";
    case Suite::residue:
      return "residue";
    case Suite::hecke:
      return "hecke";
    case Suite::pde:
      return "pde";
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  json arr = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    if (c.pass) ++passed;
    json achieved = std::isfinite(c.achieved_error) ? json(c.achieved_error) : json(nullptr);
    arr.push_back({{"check_id", c.check_id},
                   {"status", c.pass ? "pass" : "fail"},
                   {"achieved_error", achieved},
                   {"tolerance", c.tolerance},
                   {"parameters", c.parameters}});
  }
  return {{"status", all_passed() ? "pass" : "fail"},
          {"summary", {{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}}},
          {"checks", arr}};
}

Report consistency_report(const ReportOptions& options) {
  if (options.tolerance_override && !(*options.tolerance_override > 0.0))
    throw std::invalid_argument("consistency_report: tolerance override must be positive");
  std::vector<RootSystem> systems;
  for (const auto& spec : options.systems) systems.push_back(build_root_system(spec));

  auto wanted = [&](Suite s) { return options.suites.empty() || options.suites.count(s) > 0; };
  Report report;
  Recorder rec(report);

  if (wanted(Suite::harmonicity))
    for (const auto& R : systems) run_harmonicity(rec, R, options.corrupt_pi_plus);
  if (wanted(Suite::weyl))
    for (const auto& R : systems) run_weyl(rec, R);
  if (wanted(Suite::spherical))
    for (const auto& R : systems)
      if (R.rank() <= 2) run_spherical(rec, R);
  if (wanted(Suite::bessel)) run_bessel(rec, options.tolerance_override);
  if (wanted(Suite::fundsol))
    for (const auto& R : systems) run_fundsol(rec, R, options);
  if (wanted(Suite::residue)) run_residue(rec, options.tolerance_override);
  if (wanted(Suite::hecke))
    for (const auto& R : systems)
      if (R.rank() <= 2) run_hecke(rec, R, options.tolerance_override);
  if (wanted(Suite::pde)) run_pde(rec);
  return report;
}

}  // namespace symspace
