#pragma once

// Exact multivariate polynomials with rational coefficients.
//
// Terms are kept in a std::map keyed by exponent vectors, so the
// representation is canonical: no zero coefficients, sorted monomials.
// That makes structural equality the same as polynomial equality.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace symspace {

using Rational = mpq_class;

/// Dense square matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

class Polynomial {
 public:
  using Exponent = std::vector<unsigned>;
  using TermMap = std::map<Exponent, Rational>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  /// The linear form sum_i coeffs[i] * x_i.
  static Polynomial linear(std::span<const Rational> coeffs);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Rational coefficient(const Exponent& e) const;
  /// Adds c to the coefficient of x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as "2*x0^2 - 1/3*x0*x1".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// Product of a sequence of polynomials; the empty product is 1.
Polynomial product(std::span<const Polynomial> factors, std::size_t num_vars);

/// Euclidean Laplacian sum_i d^2/dx_i^2.
Polynomial laplacian(const Polynomial& p);

/// Second-order operator sum_{i,j} metric(i,j) d^2/(dx_i dx_j).
///
/// This is the Laplacian when the variables are coordinates in a basis whose
/// dual Gram matrix is `metric` (for the identity it reduces to the Euclidean
/// case).
Polynomial laplacian(const Polynomial& p, const RationalMatrix& metric);

/// Parses "p/q" or an integer into a canonical rational.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

}  // namespace symspace
