#include "symspace/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symspace {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("Polynomial::variable: index out of range");
  Polynomial p(num_vars);
  Exponent e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::linear(std::span<const Rational> coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    deg = std::max(deg, d);
  }
  return deg;
}

bool Polynomial::is_homogeneous() const {
  const int deg = degree();
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (unsigned k : e) d += static_cast<int>(k);
    if (d != deg) return false;
  }
  return true;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("Polynomial::add_term: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("Polynomial::derivative: variable out of range");
  Polynomial d(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    d.add_term(f, c * e[var]);
  }
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < num_vars_; ++i) term *= std::pow(point[i], static_cast<int>(e[i]));
    sum += term;
  }
  return sum;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_)
    throw std::invalid_argument("Polynomial: operands have different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.num_vars_);
  Polynomial::Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest-degree monomials first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = true;
    for (unsigned k : e) is_const = is_const && k == 0;
    if (is_const || mag != 1) out << format_rational(mag);
    bool need_star = !is_const && mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << "x" << i;
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

Polynomial product(std::span<const Polynomial> factors, std::size_t num_vars) {
  Polynomial out = Polynomial::constant(num_vars, Rational(1));
  for (const auto& f : factors) out *= f;
  return out;
}

Polynomial laplacian(const Polynomial& p) {
  return laplacian(p, RationalMatrix::identity(p.num_vars()));
}

Polynomial laplacian(const Polynomial& p, const RationalMatrix& metric) {
  const std::size_t n = p.num_vars();
  if (metric.size() != n) throw std::invalid_argument("laplacian: metric dimension mismatch");
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial di = p.derivative(i);
    if (di.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (metric(i, j) == 0) continue;
      out += di.derivative(j) * metric(i, j);
    }
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("parse_rational: not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace symspace
