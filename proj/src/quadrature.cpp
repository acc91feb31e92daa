#include "symspace/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace symspace::quad {

namespace {

constexpr Real kPi = std::numbers::pi_v<long double>;

struct Panel {
  Real a, b;
  Estimate est;
  int depth;
};

bool accept(const Estimate& e, Real rel_tol) {
  const Real floor = std::numeric_limits<Real>::min() * 1e6L;
  // The rounding floor of a 31-point sum sits near 10 eps of the magnitude.
  const Real eps = std::numeric_limits<Real>::epsilon();
  return e.error <= std::max(rel_tol, 16 * eps) * e.l1 || e.error <= floor;
}

}  // namespace

Estimate gauss_kronrod(const SampleFn& f, Real a, Real b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<Real, 31>;
  using gauss = boost::math::quadrature::gauss<Real, 15>;
  const auto& x = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;

  // Kronrod nodes with even index are the Gauss nodes (0 included).
  Sample s0 = f(mid);
  Complex k = s0.value * wk[0];
  Complex g = s0.value * wg[0];
  Real mag = s0.magnitude * wk[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Sample p = f(mid + half * x[i]);
    const Sample m = f(mid - half * x[i]);
    const Complex sum = p.value + m.value;
    k += sum * wk[i];
    mag += (p.magnitude + m.magnitude) * wk[i];
    if (i % 2 == 0) g += sum * wg[i / 2];
  }
  Estimate e;
  e.value = k * half;
  e.error = std::abs(k - g) * half;
  e.l1 = mag * half;
  e.panels = 1;
  return e;
}

Estimate integrate(const SampleFn& f, Real a, Real b, const PanelRule& rule) {
  if (!(b >= a)) throw std::invalid_argument("quad::integrate: reversed interval");
  Estimate total;
  if (b == a) return total;

  // Initial panels from the width profile.
  std::vector<Panel> initial;
  for (Real t = a; t < b;) {
    Real w = rule.max_width ? rule.max_width(t) : (b - a);
    if (!(w > 0)) throw std::invalid_argument("quad::integrate: non-positive panel width");
    Real next = std::min(b, t + w);
    if (b - next < 1e-3L * w) next = b;
    initial.push_back({t, next, {}, 0});
    t = next;
  }

  std::vector<Complex> values;
  Real error = 0, l1 = 0;
  int budget = rule.max_subdivisions;
  int panels = 0;
  // Depth-first keeps the order of accepted panels fixed by position.
  std::vector<Panel> stack(initial.rbegin(), initial.rend());
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    p.est = gauss_kronrod(f, p.a, p.b);
    if (accept(p.est, rule.rel_tol) || p.depth >= 40) {
      values.push_back(p.est.value);
      error += p.est.error;
      l1 += p.est.l1;
      ++panels;
      continue;
    }
    if (budget-- <= 0) {
      throw QuadratureError("quadrature: subdivision budget exhausted", static_cast<double>(error + p.est.error));
    }
    const Real mid = 0.5L * (p.a + p.b);
    stack.push_back({mid, p.b, {}, p.depth + 1});
    stack.push_back({p.a, mid, {}, p.depth + 1});
  }
  total.value = pairwise_sum(values);
  total.error = error;
  total.l1 = l1;
  total.panels = panels;
  return total;
}

Estimate integrate(const ComplexFn& f, Real a, Real b, const PanelRule& rule) {
  return integrate(SampleFn([&](Real t) {
                     const Complex v = f(t);
                     return Sample{v, std::abs(v)};
                   }),
                   a, b, rule);
}

Estimate integrate_to_infinity(const SampleFn& f, Real a, Real rel_tol) {
  if (!(a > 0)) throw std::invalid_argument("quad::integrate_to_infinity: lower limit must be positive");
  auto g = [&](Real u) -> Sample {
    if (u <= 0) return {0, 0};
    const Real t = a / u;
    const Real jac = a / (u * u);
    const Sample s = f(t);
    return {s.value * jac, s.magnitude * jac};
  };
  PanelRule rule;
  rule.rel_tol = rel_tol;
  rule.max_width = [](Real) { return Real(0.125); };
  return integrate(SampleFn(g), 0, 1, rule);
}

Estimate integrate_to_infinity(const ComplexFn& f, Real a, Real rel_tol) {
  return integrate_to_infinity(SampleFn([&](Real t) {
                                 const Complex v = f(t);
                                 return Sample{v, std::abs(v)};
                               }),
                               a, rel_tol);
}

Complex fourier_tail(std::span<const Real> derivatives, Real x, Real T, Real* error) {
  if (!(x > 0)) throw std::invalid_argument("quad::fourier_tail: frequency must be positive");
  // int_T^inf f e^{ixt} = -e^{ixT} sum_k (-1)^k f^(k)(T) / (ix)^{k+1}
  const Complex ix(0, x);
  Complex sum = 0;
  Complex denom = ix;
  Real last = std::numeric_limits<Real>::infinity();
  Real tail_err = 0;
  for (std::size_t k = 0; k < derivatives.size(); ++k) {
    const Complex term = ((k % 2 == 0) ? Real(1) : Real(-1)) * derivatives[k] / denom;
    const Real mag = std::abs(term);
    if (mag > last) break;
    sum += term;
    last = mag;
    tail_err = mag;
    denom *= ix;
  }
  if (error) *error = tail_err;
  return -std::polar(Real(1), x * T) * sum;
}

Complex wynn_epsilon(std::span<const Complex> s, Real* error) {
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("quad::wynn_epsilon: empty sequence");
  if (n < 3) {
    if (error) *error = n == 2 ? std::abs(s[1] - s[0]) : std::numeric_limits<Real>::infinity();
    return s.back();
  }
  // Columns e_{k}; even columns are the estimates.
  std::vector<Complex> prev(n + 1, Complex(0));  // e_{-1}
  std::vector<Complex> cur(s.begin(), s.end());  // e_0
  Complex best = s.back();
  Real best_err = std::abs(s[n - 1] - s[n - 2]);
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Complex> next(n - k);
    bool ok = true;
    for (std::size_t j = 0; j + k < n; ++j) {
      const Complex diff = cur[j + 1] - cur[j];
      if (std::abs(diff) == 0) {
        ok = false;
        break;
      }
      next[j] = prev[j + 1] + Real(1) / diff;
    }
    if (!ok) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0 && cur.size() >= 2) {
      const Real err = std::abs(cur.back() - cur[cur.size() - 2]);
      if (err < best_err) {
        best_err = err;
        best = cur.back();
      }
    }
  }
  if (error) *error = best_err;
  return best;
}

Complex pairwise_sum(std::span<const Complex> terms) {
  if (terms.empty()) return 0;
  if (terms.size() <= 8) {
    Complex s = 0;
    for (const auto& t : terms) s += t;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

Estimate cosine_transform(Real s, Real x, Real z) {
  if (!(z > 0)) throw std::invalid_argument("cosine_transform: z must be positive");
  if (!(x >= 0)) throw std::invalid_argument("cosine_transform: x must be non-negative");
  if (!(s > 0) || (x == 0 && !(s > 0.5L)))
    throw std::invalid_argument("cosine_transform: exponent too small for convergence");

  const Real z2 = z * z;
  auto weight = [=](Real t) { return std::pow(t * t + z2, -s); };

  PanelRule rule;
  rule.rel_tol = 1e-17L;
  // Resolve the z-scale near the origin, then grow geometrically, never
  // wider than half a period.
  rule.max_width = [=](Real t) {
    Real w = std::max(z / 2, t / 4);
    if (x > 0) w = std::min(w, kPi / x);
    return w;
  };

  if (x == 0) {
    const Real T = 4 * z;
    Estimate head = integrate([&](Real t) -> Complex { return weight(t); }, 0, T, rule);
    Estimate tail = integrate_to_infinity([&](Real t) -> Complex { return weight(t); }, T);
    head.value += tail.value;
    head.error += tail.error;
    head.l1 += tail.l1;
    head.panels += tail.panels;
    return head;
  }

  // End the panels on a whole number of periods beyond max(4z, 80/x).
  const Real period = 2 * kPi / x;
  const Real T = std::ceil(std::max(4 * z, 80 / x) / period) * period;
  Estimate head = integrate([&](Real t) -> Complex { return weight(t) * std::cos(x * t); }, 0, T, rule);

  // Taylor coefficients g_m of (p(h))^{-s}, p(h) = (T+h)^2 + z^2, from
  // p f' = -s p' f.
  const int kmax = 60;
  const Real a0 = T * T + z2, a1 = 2 * T, a2 = 1;
  std::vector<Real> g(kmax + 1), deriv(kmax + 1);
  g[0] = std::pow(a0, -s);
  g[1] = -s * a1 * g[0] / a0;
  for (int m = 2; m <= kmax; ++m)
    g[m] = -((m - 1 + s) * a1 * g[m - 1] + (m - 2 + 2 * s) * a2 * g[m - 2]) / (m * a0);
  Real fact = 1;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) fact *= k;
    deriv[k] = fact * g[k];
  }
  Real tail_err = 0;
  const Complex tail = fourier_tail(deriv, x, T, &tail_err);
  head.value += tail.real();
  head.error += tail_err;
  return head;
}

}  // namespace symspace::quad
