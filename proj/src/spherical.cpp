#include "symspace/spherical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace symspace {

namespace {

using cplx = std::complex<double>;

constexpr double kWallThreshold = 1e-3;

void check_dim(const RootSystem& R, Eigen::Index dim, const char* who) {
  if (dim != R.rank()) throw std::invalid_argument(std::string(who) + ": dimension does not match the rank");
}

struct WallInfo {
  bool singular = false;
  int near_walls = 0;
};

// Walls are measured relative to |v|, so the test is scale free.
WallInfo wall_info(const RootSystem& R, const Eigen::VectorXd& v) {
  const double nv = v.norm();
  if (nv == 0.0) return {true, 0};
  WallInfo info;
  const auto& roots = R.positive_roots_orthonormal();
  for (Eigen::Index k = 0; k < roots.rows(); ++k) {
    const double dist = std::abs(roots.row(k).dot(v)) / (roots.row(k).norm() * nv);
    if (dist < kWallThreshold) ++info.near_walls;
  }
  info.singular = info.near_walls > 0;
  return info;
}

// Image of v in the closed dominant chamber.
Eigen::VectorXd to_dominant(const RootSystem& R, const Eigen::VectorXd& v) {
  const WeylGroup& W = R.weyl();
  const auto& simple = R.simple_roots_orthonormal();
  Eigen::VectorXd best = v;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t w = 0; w < W.order(); ++w) {
    Eigen::VectorXd u = W.orthogonal(w) * v;
    double score = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < simple.rows(); ++i) score = std::min(score, simple.row(i).dot(u) / simple.row(i).norm());
    if (score > best_score) {
      best_score = score;
      best = std::move(u);
    }
  }
  return best;
}

// sum_w sgn(w) e^{i <w lambda, H>} / (pi+(lambda) pi+(H)), for regular
// lambda and H.  When every phase is below 1 the sum is expanded in powers
// of the phases; the terms below degree d cancel identically.
cplx alternating_ratio(const RootSystem& R, const Eigen::VectorXd& lambda, const Eigen::VectorXd& H) {
  const WeylGroup& W = R.weyl();
  const std::size_t order = W.order();
  const int d = R.num_positive();
  std::vector<double> phase(order);
  double big = 0.0;
  for (std::size_t w = 0; w < order; ++w) {
    phase[w] = (W.orthogonal(w) * lambda).dot(H);
    big = std::max(big, std::abs(phase[w]));
  }

  cplx numerator = 0.0;
  if (big >= 1.0) {
    for (std::size_t w = 0; w < order; ++w) numerator += static_cast<double>(W.sign(w)) * std::polar(1.0, phase[w]);
  } else {
    std::vector<double> power(order, 1.0);  // x_w^k / k!
    const cplx ipow[4] = {1.0, cplx(0.0, 1.0), -1.0, cplx(0.0, -1.0)};
    double bound = 1.0;
    for (int k = 1; k <= 400; ++k) {
      bound *= big / k;
      for (std::size_t w = 0; w < order; ++w) power[w] *= phase[w] / k;
      if (k < d) continue;
      double s = 0.0;
      for (std::size_t w = 0; w < order; ++w) s += W.sign(w) * power[w];
      numerator += ipow[k % 4] * s;
      if (k > d + 1 && bound * static_cast<double>(order) < 1e-18 * std::abs(numerator)) break;
    }
  }
  return numerator / (pi_plus(R, lambda) * pi_plus(R, H));
}

}  // namespace

EigenvalueParams EigenvalueParams::from_z(const RootSystem& R, std::complex<double> z) {
  if (!(z.real() > 0.0)) throw std::invalid_argument("EigenvalueParams: Re(z) must be positive");
  const double rho2 = rho(R).squaredNorm();
  return {z, z * z - rho2, std::nullopt};
}

EigenvalueParams EigenvalueParams::from_spectral(const RootSystem& R, const SpectralVector& xi) {
  check_dim(R, xi.dim(), "EigenvalueParams");
  const double lam = casimir_eigenvalue(R, xi);
  const std::complex<double> z(0.0, xi.norm());
  return {z, z * z - rho(R).squaredNorm(), lam};
}

double x_over_sinh(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sinh(x);
}

double sinh_over_x(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

double weyl_denominator(const RootSystem& R, const CartanVector& H) {
  check_dim(R, H.dim(), "weyl_denominator");
  const auto& roots = R.positive_roots_orthonormal();
  double p = 1.0;
  for (Eigen::Index k = 0; k < roots.rows(); ++k) p *= 2.0 * std::sinh(roots.row(k).dot(H.coords));
  return p;
}

std::complex<double> zonal_spherical(const RootSystem& R, const SpectralVector& lambda, const CartanVector& H) {
  check_dim(R, lambda.dim(), "zonal_spherical");
  check_dim(R, H.dim(), "zonal_spherical");
  if (!lambda.is_finite() || !H.is_finite()) throw std::invalid_argument("zonal_spherical: non-finite input");

  const double hn = H.norm();
  if (hn == 0.0) return 1.0;

  const auto& roots = R.positive_roots_orthonormal();
  double ratio_product = 1.0;
  for (Eigen::Index k = 0; k < roots.rows(); ++k) ratio_product *= 0.5 * x_over_sinh(roots.row(k).dot(H.coords));

  const int d = R.num_positive();
  cplx mi_pow = 1.0;
  for (int k = 0; k < d; ++k) mi_pow *= cplx(0.0, -1.0);
  const double rho_pi = pi_plus(R, rho(R));

  // phi is W-invariant in lambda and in H separately.
  const Eigen::VectorXd lam = to_dominant(R, lambda.coords);
  const Eigen::VectorXd h = to_dominant(R, H.coords);
  const WallInfo wl = wall_info(R, lam);
  const WallInfo wh = wall_info(R, h);

  cplx ratio;
  if (!wl.singular && !wh.singular) {
    ratio = alternating_ratio(R, lam, h);
  } else {
    // Removable singularity: push the singular argument into the open
    // chamber along rho and extrapolate back (three levels of Richardson).
    const double ln = lam.norm();
    const Eigen::VectorXd dir = rho(R).normalized();
    const double s_lam = ln > 0.0 ? std::min(ln, 1.0 / hn) : 1.0 / hn;
    const double s_h = ln > 0.0 ? std::min(hn, 1.0 / ln) : hn;
    const int m = (wl.singular ? wl.near_walls : 0) + (wh.singular ? wh.near_walls : 0);
    const double eps = m <= 1 ? 1e-4 : std::pow(10.0, -16.0 / (m + 3));
    auto shifted = [&](double e) {
      const Eigen::VectorXd l2 = wl.singular ? Eigen::VectorXd(lam + e * s_lam * dir) : lam;
      const Eigen::VectorXd h2 = wh.singular ? Eigen::VectorXd(h + e * s_h * dir) : h;
      return alternating_ratio(R, l2, h2);
    };
    const cplx f1 = shifted(eps);
    const cplx f2 = shifted(eps / 2);
    const cplx f4 = shifted(eps / 4);
    ratio = (f1 - 6.0 * f2 + 8.0 * f4) / 3.0;
  }
  return rho_pi * mi_pow * ratio * ratio_product;
}

double c_function_density(const RootSystem& R, const SpectralVector& xi) {
  check_dim(R, xi.dim(), "c_function_density");
  const double q = pi_plus(R, xi.coords) / pi_plus(R, rho(R));
  return q * q;
}

double casimir_eigenvalue(const RootSystem& R, const SpectralVector& xi) {
  check_dim(R, xi.dim(), "casimir_eigenvalue");
  return -(xi.coords.squaredNorm() + rho(R).squaredNorm());
}

}  // namespace symspace
