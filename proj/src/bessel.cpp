#include "symspace/bessel.hpp"

#include "symspace/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symspace {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10000;

// 1/Gamma(z) = sum_{k>=1} c_k z^k (Abramowitz & Stegun 6.1.34).
constexpr std::array<double, 26> kRecipGamma = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
};

struct TemmeGammas {
  double gam1;   // (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
  double gam2;   // (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
  double gampl;  // 1/Gamma(1+mu)
  double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  TemmeGammas g{};
  if (std::abs(mu) > 0.1) {
    g.gampl = 1.0 / std::tgamma(1.0 + mu);
    g.gammi = 1.0 / std::tgamma(1.0 - mu);
    g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
    g.gam2 = (g.gammi + g.gampl) / 2.0;
    return g;
  }
  // 1/Gamma(1+mu) = sum_k c_k mu^{k-1}; split into even and odd parts so
  // that gam1 carries no cancellation.
  double even = 0.0, odd = 0.0;
  const double mu2 = mu * mu;
  double p = 1.0;
  for (std::size_t k = 0; k < kRecipGamma.size(); k += 2) {  // c_1, c_3, ...
    odd += kRecipGamma[k] * p;
    p *= mu2;
  }
  p = 1.0;
  for (std::size_t k = 1; k < kRecipGamma.size(); k += 2) {  // c_2, c_4, ...
    even += kRecipGamma[k] * p;
    p *= mu2;
  }
  g.gam1 = -even;
  g.gam2 = odd;
  g.gampl = odd + mu * even;
  g.gammi = odd - mu * even;
  return g;
}

// e^x K_mu(x) and e^x K_{mu+1}(x) for |mu| <= 1/2.
void k_pair_scaled(double mu, double x, double& kmu, double& kmu1) {
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  if (x <= 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      ff = (i * ff + p + q) / (i * i - mu2);
      c *= d / i;
      p /= (i - mu);
      q /= (i + mu);
      const double del = c * ff;
      sum += del;
      sum1 += c * (p - i * ff);
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: series failed to converge");
    const double scale = std::exp(x);
    kmu = sum * scale;
    kmu1 = sum1 * 2.0 * xi * scale;
    return;
  }
  // Steed's algorithm for the continued fraction CF2.
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= kMaxIter; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  if (i > kMaxIter) throw std::runtime_error("bessel_k: continued fraction failed to converge");
  h = a1 * h;
  kmu = std::sqrt(kPi / (2.0 * x)) / s;
  kmu1 = kmu * (mu + x + 0.5 - h) * xi;
}

}  // namespace

const std::array<double, 26>& reciprocal_gamma_coefficients() { return kRecipGamma; }

double bessel_k_scaled(double alpha, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be positive");
  if (!std::isfinite(alpha)) throw std::invalid_argument("bessel_k: order must be finite");
  const double nu = std::abs(alpha);
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  double kmu = 0.0, kmu1 = 0.0;
  k_pair_scaled(mu, x, kmu, kmu1);
  const double xi2 = 2.0 / x;
  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * xi2 * kmu1 + kmu;
    kmu = kmu1;
    kmu1 = next;
  }
  return kmu;
}

double bessel_k(double alpha, double x) { return bessel_k_scaled(alpha, x) * std::exp(-x); }

double x_bessel_k1_series(double x) {
  constexpr double euler_gamma = std::numbers::egamma;
  return 1.0 + 0.25 * x * x * (2.0 * std::log(0.5 * x) + 2.0 * euler_gamma - 1.0);
}

double power_bessel_k(double mu, double x) {
  if (!(mu > 0.0)) throw std::invalid_argument("power_bessel_k: order must be positive");
  if (x < 0.0) throw std::domain_error("power_bessel_k: x must be non-negative");
  if (x == 0.0) return std::pow(2.0, mu - 1.0) * std::tgamma(mu);
  if (mu == 1.0 && x < 1e-3) return x_bessel_k1_series(x);
  return std::pow(x, mu) * bessel_k(mu, x);
}

double bessel_k_quadrature(double alpha, double x, double z) {
  if (!(alpha > -0.5)) throw std::invalid_argument("bessel_k_quadrature: order must exceed -1/2");
  if (!(x > 0.0) || !(z > 0.0)) throw std::domain_error("bessel_k_quadrature: x and z must be positive");
  using quad::Real;
  const Real a = alpha;
  const quad::Estimate est = quad::cosine_transform(a + 0.5L, x, z);
  const Real pre = std::tgamma(a + 0.5L) * std::pow(2.0L * z, a) / (std::sqrt(std::numbers::pi_v<long double>) * std::pow(Real(x), a));
  return static_cast<double>(pre * est.value.real());
}

double bessel_k_asymptotic(double alpha, double x, int terms) {
  if (terms < 1 || terms > 4) throw std::invalid_argument("bessel_k_asymptotic: terms must be between 1 and 4");
  if (x < 5.0) throw std::domain_error("bessel_k_asymptotic: x must be at least 5");
  const double m = 4.0 * alpha * alpha;
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (m - odd * odd) / (k * 8.0 * x);
    sum += term;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

double bessel_k_half_integer(int m, double x) {
  if (m < 0) throw std::invalid_argument("bessel_k_half_integer: m must be non-negative");
  if (!(x > 0.0)) throw std::domain_error("bessel_k_half_integer: x must be positive");
  // (m+j)!/(j!(m-j)!) built incrementally from j = 0.
  double coef = 1.0, sum = 1.0, w = 1.0;
  for (int j = 1; j <= m; ++j) {
    coef *= static_cast<double>(m + j) * (m - j + 1) / j;
    w /= 2.0 * x;
    sum += coef * w;
  }
  return std::sqrt(kPi / 2.0) * std::exp(-x) / std::sqrt(x) * sum;
}

}  // namespace symspace
