#pragma once

// Adaptive Gauss-Kronrod panels in extended precision, with the tail
// treatments the oracles need: a map to a finite interval for algebraic
// decay, integration by parts for Fourier tails, and Wynn's epsilon
// algorithm for oscillatory tails whose derivatives are not available.

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspace::quad {

using Real = long double;
using Complex = std::complex<long double>;
using ComplexFn = std::function<Complex(Real)>;

/// A value together with a magnitude that bounds its rounding error scale,
/// e.g. the sum of |terms| when the value is itself a cancelling sum.
struct Sample {
  Complex value;
  Real magnitude;
};
using SampleFn = std::function<Sample(Real)>;

/// Thrown when a quadrature cannot reach its tolerance; carries the error
/// estimate it did achieve.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved) : std::runtime_error(what), achieved_error_(achieved) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

struct Estimate {
  Complex value{};
  Real error = 0;
  Real l1 = 0;  // integral of the magnitude (|f| for plain integrands)
  int panels = 0;
};

struct PanelRule {
  /// Largest admissible panel width at abscissa t.
  std::function<Real(Real)> max_width;
  /// A panel is accepted when its error estimate is below rel_tol times the
  /// integral of the magnitude over the panel.
  Real rel_tol = 1e-17L;
  /// Total budget of bisections over the whole interval.
  int max_subdivisions = 4000;
};

/// One 31-point Kronrod rule (embedded 15-point Gauss for the error).
Estimate gauss_kronrod(const SampleFn& f, Real a, Real b);

/// Integrates over [a, b] after cutting it into panels no wider than
/// rule.max_width and bisecting panels until each meets its tolerance.
/// Throws QuadratureError when the bisection budget runs out.
Estimate integrate(const SampleFn& f, Real a, Real b, const PanelRule& rule);
Estimate integrate(const ComplexFn& f, Real a, Real b, const PanelRule& rule);

/// Integral over [a, inf) of an algebraically decaying f via t = a / u.
Estimate integrate_to_infinity(const SampleFn& f, Real a, Real rel_tol = 1e-17L);
Estimate integrate_to_infinity(const ComplexFn& f, Real a, Real rel_tol = 1e-17L);

/// int_T^inf f(t) e^{i x t} dt from the derivatives f^(k)(T), by repeated
/// integration by parts.  Summation stops when the terms start to grow.
Complex fourier_tail(std::span<const Real> derivatives, Real x, Real T, Real* error = nullptr);

/// Limit of a sequence of partial sums by Wynn's epsilon algorithm.
Complex wynn_epsilon(std::span<const Complex> partial_sums, Real* error = nullptr);

/// Sum with a fixed pairwise tree, for reproducible rounding.
Complex pairwise_sum(std::span<const Complex> terms);

/// int_0^inf cos(x t) / (t^2 + z^2)^s dt for z > 0 and either x > 0, s > 0
/// or x = 0, s > 1/2.
/// Half-period panels up to T ~ 80/x, then the integration-by-parts tail
/// with exact Taylor coefficients of (t^2 + z^2)^{-s}.
Estimate cosine_transform(Real s, Real x, Real z);

}  // namespace symspace::quad
