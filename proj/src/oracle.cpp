#include "symspace/oracle.hpp"

#include "symspace/bessel.hpp"
#include "symspace/spherical.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspace {

namespace {

using cplx = std::complex<double>;
using quad::Complex;
using quad::Real;
constexpr double kPi = std::numbers::pi;

using PointFn = std::function<cplx(const Eigen::VectorXd&)>;

enum class Tail { none, algebraic, oscillatory };

struct PolarProblem {
  int dim;
  PointFn g;
  double frequency;  // size of the linear phase; 0 if none
  double scale;      // length scale of the radial weight near the origin
  int degree;        // angular degree of the non-oscillating part
  Tail tail;
  double radius;
};

constexpr int kTailHalfPeriods = 40;

// int_{R^n} g by polar coordinates, n = 1 or 2.
OracleResult polar_integral(const PolarProblem& pb, const QuadratureConfig& cfg) {
  const int n = pb.dim;
  auto radial = [&](Real r) -> quad::Sample {
    const double rd = static_cast<double>(r);
    if (n == 1) {
      Eigen::VectorXd p(1);
      p[0] = rd;
      const cplx a = pb.g(p);
      p[0] = -rd;
      const cplx b = pb.g(p);
      return {Complex(a + b), static_cast<Real>(std::abs(a) + std::abs(b))};
    }
    const int nodes = 2 * static_cast<int>(std::ceil(rd * pb.frequency + pb.degree + 40));
    const double h = 2.0 * kPi / nodes;
    Complex s = 0;
    Real mag = 0;
    Eigen::VectorXd p(2);
    for (int j = 0; j < nodes; ++j) {
      const double th = (j + 0.5) * h;
      p[0] = rd * std::cos(th);
      p[1] = rd * std::sin(th);
      const cplx v = pb.g(p);
      s += Complex(v);
      mag += std::abs(v);
    }
    const Real w = static_cast<Real>(rd * h);
    return {s * w, mag * w};
  };
  const quad::SampleFn radial_fn = radial;

  quad::PanelRule rule;
  rule.rel_tol = cfg.abs_tolerance;
  rule.max_subdivisions = cfg.max_subdivisions;
  const double freq = pb.frequency;
  const double scale = pb.scale;
  rule.max_width = [freq, scale](Real r) {
    Real w = std::max<Real>(scale / 2, r / 4);
    if (freq > 0) w = std::min<Real>(w, kPi / freq);
    return w;
  };

  quad::Estimate head = quad::integrate(radial_fn, 0, pb.radius, rule);
  Complex value = head.value;
  Real error = head.error;
  Real l1 = head.l1;

  if (pb.tail == Tail::algebraic) {
    const quad::Estimate t = quad::integrate_to_infinity(radial_fn, pb.radius, cfg.abs_tolerance);
    value += t.value;
    error += t.error;
    l1 += t.l1;
  } else if (pb.tail == Tail::oscillatory) {
    if (!(freq > 0)) throw std::logic_error("polar_integral: oscillatory tail without a frequency");
    const Real half = kPi / freq;
    std::vector<Complex> partial;
    Complex running = 0;
    quad::PanelRule tail_rule = rule;
    tail_rule.max_width = [half](Real) { return half; };
    for (int k = 0; k < kTailHalfPeriods; ++k) {
      const Real a = pb.radius + k * half;
      const quad::Estimate e = quad::integrate(radial_fn, a, a + half, tail_rule);
      running += e.value;
      error += e.error;
      l1 += e.l1;
      partial.push_back(running);
    }
    Real wynn_err = 0;
    value += quad::wynn_epsilon(partial, &wynn_err);
    error += wynn_err;
  }

  // Tolerances are relative to the L1 norm; allow for the sum over panels.
  if (error > 100 * cfg.abs_tolerance * l1 + 1e-300L)
    throw quad::QuadratureError("oracle: quadrature did not reach the requested tolerance (achieved " +
                                    std::to_string(static_cast<double>(error / l1)) + " relative to L1)",
                                static_cast<double>(error));
  return {cplx(static_cast<double>(value.real()), static_cast<double>(value.imag())), static_cast<double>(error),
          static_cast<double>(l1)};
}

void require_low_rank(const RootSystem& R, const char* who) {
  if (R.rank() > 2) throw std::invalid_argument(std::string(who) + ": the quadrature oracle supports rank <= 2");
}

void require_point(const RootSystem& R, const CartanVector& H, const char* who) {
  if (H.dim() != R.rank()) throw std::invalid_argument(std::string(who) + ": H has the wrong dimension");
  if (!H.is_finite()) throw std::invalid_argument(std::string(who) + ": H is not finite");
}

cplx i_power(int k) {
  static const cplx table[4] = {1.0, cplx(0.0, 1.0), -1.0, cplx(0.0, -1.0)};
  return table[((k % 4) + 4) % 4];
}

}  // namespace

QuadratureConfig QuadratureConfig::defaults_for(double z) {
  QuadratureConfig c;
  c.truncation_radius = 40.0 * std::max(1.0, z);
  return c;
}

void QuadratureConfig::validate() const {
  if (!(truncation_radius > 0.0)) throw std::invalid_argument("QuadratureConfig: truncation radius must be positive");
  if (!(abs_tolerance > 0.0)) throw std::invalid_argument("QuadratureConfig: tolerance must be positive");
  if (max_subdivisions <= 0) throw std::invalid_argument("QuadratureConfig: subdivision budget must be positive");
}

OracleResult spectral_synthesis(const RootSystem& R, const CartanVector& H, double z, int nu,
                                const QuadratureConfig& cfg) {
  cfg.validate();
  require_low_rank(R, "spectral_synthesis");
  require_point(R, H, "spectral_synthesis");
  if (!(z > 0.0)) throw std::invalid_argument("spectral_synthesis: z must be positive");
  const int n = R.rank(), d = R.num_positive();
  if (2 * nu <= n + 2 * d) throw std::invalid_argument("spectral_synthesis: nu too small for absolute convergence");

  const double sign = nu % 2 == 0 ? 1.0 : -1.0;
  const double inv_order = 1.0 / static_cast<double>(R.weyl().order());
  const double z2 = z * z;
  PolarProblem pb;
  pb.dim = n;
  pb.g = [&](const Eigen::VectorXd& xi) -> cplx {
    const SpectralVector s(xi);
    const double density = c_function_density(R, s);
    if (density == 0.0) return 0.0;
    const double w = sign * std::pow(xi.squaredNorm() + z2, -nu) * density * inv_order;
    return w * zonal_spherical(R, s, H);
  };
  pb.frequency = H.norm();
  pb.scale = z;
  pb.degree = 2 * d;
  pb.tail = pb.frequency > 0 ? Tail::oscillatory : Tail::algebraic;
  pb.radius = cfg.truncation_radius;
  return polar_integral(pb, cfg);
}

OracleResult spectral_synthesis(const RootSystem& R, const CartanVector& H, double z, int nu) {
  return spectral_synthesis(R, H, z, nu, QuadratureConfig::defaults_for(z));
}

OracleResult integral_I_direct(const RootSystem& R, const CartanVector& H, double z, int nu,
                               const QuadratureConfig& cfg) {
  cfg.validate();
  require_low_rank(R, "integral_I_direct");
  require_point(R, H, "integral_I_direct");
  if (!(z > 0.0)) throw std::invalid_argument("integral_I_direct: z must be positive");
  const int n = R.rank(), d = R.num_positive();
  if (2 * nu <= n + d) throw std::invalid_argument("integral_I_direct: nu too small for absolute convergence");

  const double z2 = z * z;
  const Eigen::VectorXd h = H.coords;
  PolarProblem pb;
  pb.dim = n;
  pb.g = [&](const Eigen::VectorXd& lam) -> cplx {
    return pi_plus(R, lam) * std::pow(lam.squaredNorm() + z2, -nu) * std::polar(1.0, lam.dot(h));
  };
  pb.frequency = H.norm();
  pb.scale = z;
  pb.degree = d;
  pb.tail = pb.frequency > 0 ? Tail::oscillatory : Tail::algebraic;
  pb.radius = cfg.truncation_radius;
  return polar_integral(pb, cfg);
}

OracleResult integral_I_direct(const RootSystem& R, const CartanVector& H, double z, int nu) {
  return integral_I_direct(R, H, z, nu, QuadratureConfig::defaults_for(z));
}

OracleResult integral_I_reduced(const RootSystem& R, const CartanVector& H, double z, int nu, ReducedMethod method) {
  require_point(R, H, "integral_I_reduced");
  if (!(z > 0.0)) throw std::invalid_argument("integral_I_reduced: z must be positive");
  const int n = R.rank(), d = R.num_positive();
  const double q = nu - d - (n - 1) / 2.0;
  if (!(q > 0.5)) throw std::invalid_argument("integral_I_reduced: needs nu - d - (n-1)/2 > 1/2");

  const double pip = pi_plus(R, H.coords);
  if (pip == 0.0) return {0.0, 0.0, 0.0};

  const double r = H.norm();
  const cplx pre = i_power(d) * pip * std::pow(kPi, (n - 1) / 2.0) * std::exp(std::lgamma(q) - std::lgamma(double(nu)));

  double line = 0.0, err = 0.0, l1 = 0.0;
  if (method == ReducedMethod::closed_form) {
    if (q == 1.0) {
      line = kPi * std::exp(-z * r) / z;
    } else if (q == 1.5) {
      line = std::sqrt(kPi) * power_bessel_k(1.0, z * r) / (std::tgamma(1.5) * z * z);
    } else {
      throw std::invalid_argument("integral_I_reduced: closed forms exist only for exponents 1 and 3/2");
    }
  } else {
    const quad::Estimate e = quad::cosine_transform(q, r, z);
    line = 2.0 * static_cast<double>(e.value.real());
    err = 2.0 * static_cast<double>(e.error);
    l1 = 2.0 * static_cast<double>(e.l1);
  }
  return {pre * line, std::abs(pre) * err, std::abs(pre) * l1};
}

ResidueCheck residue_check(double z, double t) {
  if (!(z > 0.0)) throw std::invalid_argument("residue_check: z must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("residue_check: t must be non-negative");
  const quad::Estimate e = quad::cosine_transform(1, t, z);
  ResidueCheck c{};
  c.lhs = 2.0 * static_cast<double>(e.value.real());
  c.rhs = kPi * std::exp(-z * t) / z;
  c.relative_error = std::abs(c.lhs - c.rhs) / std::abs(c.rhs);
  c.pass = c.relative_error <= 1e-8;
  return c;
}

HeckeCheck hecke_check(const RootSystem& R, const CartanVector& H, double t, const QuadratureConfig& cfg) {
  cfg.validate();
  require_low_rank(R, "hecke_check");
  require_point(R, H, "hecke_check");
  if (!(t > 0.0)) throw std::invalid_argument("hecke_check: t must be positive");
  const int n = R.rank(), d = R.num_positive();
  const Eigen::VectorXd y = H.coords / std::sqrt(t);

  PolarProblem pb;
  pb.dim = n;
  pb.g = [&](const Eigen::VectorXd& lam) -> cplx {
    return std::exp(-lam.squaredNorm()) * pi_plus(R, lam) * std::polar(1.0, lam.dot(y));
  };
  pb.frequency = y.norm();
  pb.scale = 1.0;
  pb.degree = d;
  pb.tail = Tail::none;
  // e^{-r^2} is below 1e-62 past r = 12.
  pb.radius = std::min(cfg.truncation_radius, 12.0);
  const OracleResult lhs = polar_integral(pb, cfg);

  const double pip = pi_plus(R, H.coords);
  const double h2 = H.coords.squaredNorm();
  HeckeCheck c{};
  c.lhs = lhs.value;
  c.rhs = i_power(d) * std::pow(t, -d / 2.0) * pip * std::exp(-h2 / t);
  c.rhs_normalized = std::pow(kPi, n / 2.0) * i_power(d) * std::pow(2.0, -d) * std::pow(t, -d / 2.0) * pip *
                     std::exp(-h2 / (4.0 * t));
  c.error_estimate = lhs.error_estimate;
  return c;
}

HeckeCheck hecke_check(const RootSystem& R, const CartanVector& H, double t) {
  return hecke_check(R, H, t, QuadratureConfig{});
}

double jacobian_sqrt(const RootSystem& R, const CartanVector& H) {
  require_point(R, H, "jacobian_sqrt");
  const auto& roots = R.positive_roots_orthonormal();
  double p = 1.0;
  for (Eigen::Index k = 0; k < roots.rows(); ++k) p *= sinh_over_x(roots.row(k).dot(H.coords));
  return p;
}

std::complex<double> representation_prefactor(const RootSystem& R, const CartanVector& H, int nu) {
  require_point(R, H, "representation_prefactor");
  const double den = weyl_denominator(R, H);
  if (den == 0.0) throw std::domain_error("representation_prefactor: H lies on a wall");
  const double sign = nu % 2 == 0 ? 1.0 : -1.0;
  return sign * i_power(-R.num_positive()) / (pi_plus(R, rho(R)) * den);
}

}  // namespace symspace
