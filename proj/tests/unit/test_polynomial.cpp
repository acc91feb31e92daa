#include "symspace/polynomial.hpp"

#include <doctest.h>

#include <vector>

using namespace symspace;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("ring operations are exact and canonical") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK((p - p).num_terms() == 0);

  const Polynomial q = x * Rational(1, 3) + Polynomial::constant(2, Rational(2));
  CHECK_FALSE(q.is_homogeneous());
  const std::vector<Rational> pt{Rational(3), Rational(5)};
  CHECK(q.evaluate(std::span<const Rational>(pt)) == Rational(3));
  CHECK(p.evaluate(std::span<const Rational>(pt)) == Rational(-16));
}

TEST_CASE("derivatives") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const Polynomial p = x * x * y;
  CHECK(p.derivative(0) == Rational(2) * x * y);
  CHECK(p.derivative(1) == x * x);
  CHECK(Polynomial::constant(2, 5).derivative(0).is_zero());
}

TEST_CASE("laplacian of a product of two linear forms is twice their pairing") {
  // <a, l> <b, l> with a = (1, 2, -1), b = (3, 0, 4): 2 <a, b> = 2 (3 - 4) = -2.
  const std::vector<Rational> a{1, 2, -1};
  const std::vector<Rational> b{3, 0, 4};
  const Polynomial p = Polynomial::linear(a) * Polynomial::linear(b);
  const Polynomial lap = laplacian(p);
  CHECK(lap == Polynomial::constant(3, -2));
}

TEST_CASE("laplacian of |l|^2 is 2n") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Polynomial r2(n);
    for (std::size_t i = 0; i < n; ++i) r2 += Polynomial::variable(n, i) * Polynomial::variable(n, i);
    CHECK(laplacian(r2) == Polynomial::constant(n, Rational(static_cast<long>(2 * n))));
  }
}

TEST_CASE("laplacian with a metric") {
  RationalMatrix g(2);
  g(0, 0) = 2;
  g(0, 1) = g(1, 0) = -1;
  g(1, 1) = 2;
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  // sum g_ij d_i d_j (x y) = 2 g_01
  CHECK(laplacian(x * y, g) == Polynomial::constant(2, -2));
  CHECK(laplacian(x * x, g) == Polynomial::constant(2, 4));
}

TEST_CASE("mismatched variable counts are rejected") {
  CHECK_THROWS(Polynomial::variable(2, 0) + Polynomial::variable(3, 0));
  CHECK_THROWS(Polynomial::variable(2, 2));
}
