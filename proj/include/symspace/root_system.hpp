#pragma once

// Root systems of complex semisimple Lie algebras, their Weyl groups, and
// the product polynomial pi+ over the positive roots.
//
// Conventions
// -----------
// Roots are stored exactly in the simple-root basis (integer vectors) along
// with the rational Gram matrix of the simple roots.  Numerical code works in
// an orthonormal basis of a*, obtained from a Cholesky factor of the Gram
// matrix; rank-2 Gram data is fixed to
//   A2: <a,a> = 2, <b,b> = 2, <a,b> = -1
//   C2: <a,a> = 1, <b,b> = 2, <a,b> = -1
//   G2: <a,a> = 1, <b,b> = 3, <a,b> = -3/2
// (a short, b long).
//
// Polynomials on a* use the coordinates y_i = <alpha_i, mu>.  In these
// coordinates every root form <alpha, mu> has integer coefficients and the
// Laplacian of a* is sum_{ij} Gram(i,j) d_i d_j, so pi+ and its Laplacian are
// computed in exact rational arithmetic.

#include "symspace/polynomial.hpp"
#include "symspace/vectors.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symspace {

enum class Family { A, B, C, D, G };

char family_letter(Family f);

struct SimpleFactor {
  Family family;
  int rank;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Coordinates of a root in the simple-root basis.
using RootCoords = std::vector<int>;

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr std::size_t kWeylOrderBound = 100000;

class WeylGroup {
 public:
  std::size_t order() const { return elements_.size(); }

  /// Element i acting on simple-root coordinates (column vectors).
  const IntMatrix& root_matrix(std::size_t i) const { return elements_.at(i); }
  /// Element i as an orthogonal matrix in the orthonormal coordinates.
  const Eigen::MatrixXd& orthogonal(std::size_t i) const { return orthogonal_.at(i); }
  /// sgn(w) = det(w) = (-1)^length.
  int sign(std::size_t i) const { return signs_.at(i); }

  /// Index of the identity element (always 0).
  static constexpr std::size_t identity_index() { return 0; }

  RootCoords apply(std::size_t i, const RootCoords& root) const;

 private:
  friend WeylGroup weyl_group_closure(const std::vector<IntMatrix>& generators, const Eigen::MatrixXd& basis,
                                      std::size_t max_order);

  std::vector<IntMatrix> elements_;
  std::vector<Eigen::MatrixXd> orthogonal_;
  std::vector<int> signs_;
};

class RootSystem {
 public:
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  /// "A2", "G2", "A1xA1", ...
  std::string label() const;
  /// Single-letter family for simple systems; "semisimple" for products.
  std::string family_name() const;

  int rank() const { return rank_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  /// Gram matrix of the simple roots.
  const RationalMatrix& gram() const { return gram_; }
  /// Cartan integers 2<a_i,a_j>/<a_j,a_j>.
  const IntMatrix& cartan() const { return cartan_; }

  /// Positive roots in the simple-root basis, ordered by height.
  const std::vector<RootCoords>& positive_roots() const { return positive_; }
  /// All roots (positive, then their negatives).
  std::vector<RootCoords> all_roots() const;

  /// Exact inner product of two vectors given in simple-root coordinates.
  Rational inner(std::span<const int> a, std::span<const int> b) const;

  /// Rows are the simple roots in orthonormal coordinates.
  const Eigen::MatrixXd& simple_roots_orthonormal() const { return simple_orth_; }
  /// Rows are the positive roots in orthonormal coordinates.
  const Eigen::MatrixXd& positive_roots_orthonormal() const { return positive_orth_; }

  /// Converts simple-root coordinates to orthonormal coordinates.
  Eigen::VectorXd to_orthonormal(const Eigen::VectorXd& root_coords) const;
  /// Converts orthonormal coordinates to simple-root coordinates.
  Eigen::VectorXd to_root_coords(const Eigen::VectorXd& orthonormal) const;

  const WeylGroup& weyl() const { return *weyl_; }

  friend RootSystem build_root_system(Family family, int rank);
  friend RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

 private:
  RootSystem() = default;
  void finish();

  std::vector<SimpleFactor> factors_;
  int rank_ = 0;
  RationalMatrix gram_;
  IntMatrix cartan_;
  std::vector<RootCoords> positive_;
  Eigen::MatrixXd simple_orth_;
  Eigen::MatrixXd positive_orth_;
  std::shared_ptr<const WeylGroup> weyl_;
};

/// Builds a simple root system.  Supported: A_n (1 <= n <= 4), B_n and C_n
/// (2 <= n <= 4), D_n (3 <= n <= 4), G_2.  Throws std::invalid_argument
/// otherwise.
RootSystem build_root_system(Family family, int rank);

/// Parses "A:2", "g:2", or products "A:1+A:1" / "A:1xA:1".
RootSystem build_root_system(std::string_view spec);

/// Orthogonal direct sum, for semisimple algebras.
RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

/// rho = sum of the positive roots (every multiplicity is 2 for complex G).
Eigen::VectorXd rho(const RootSystem& R);
RootCoords rho_root_coords(const RootSystem& R);

/// Closure of the simple reflections.  Throws std::runtime_error if the
/// closure grows past `max_order` elements.
WeylGroup weyl_group(const RootSystem& R, std::size_t max_order = kWeylOrderBound);
WeylGroup weyl_group_closure(const std::vector<IntMatrix>& generators, const Eigen::MatrixXd& basis,
                             std::size_t max_order);

/// The linear forms mu -> <alpha, mu>, one per positive root, in the
/// y-coordinates y_i = <alpha_i, mu>.
std::vector<Polynomial> pi_plus_factors(const RootSystem& R);

/// pi+(mu) = prod_{alpha > 0} <alpha, mu> as an exact polynomial in y.
Polynomial pi_plus_poly(const RootSystem& R);

/// Laplacian of a* acting on polynomials in the y-coordinates.
Polynomial laplacian_poly(const RootSystem& R, const Polynomial& p);

/// Inner product of the gradients of two linear forms in y-coordinates.
Rational form_pairing(const RootSystem& R, const Polynomial& f, const Polynomial& g);

/// sum over ordered pairs (beta, gamma) of distinct, non-orthogonal linear
/// factors of <beta, gamma> * prod(factors) / (beta gamma).
///
/// The quotient is formed by leaving the two factors out of the product, so
/// no polynomial division takes place.
Polynomial pair_sum(const RootSystem& R, std::span<const Polynomial> factors);
Polynomial pair_sum_poly(const RootSystem& R);

/// y-coordinates of a vector given in simple-root coordinates.
std::vector<Rational> spectral_coordinates(const RootSystem& R, std::span<const Rational> root_coords);

/// Numerical pi+ at a point in orthonormal coordinates.
double pi_plus(const RootSystem& R, const Eigen::VectorXd& mu);
/// Exact pi+ at a point in simple-root coordinates.
Rational pi_plus_exact(const RootSystem& R, std::span<const Rational> root_coords);

/// |pi+(w mu) - sgn(w) pi+(mu)| <= 1e-12 (1 + |pi+(mu)|).
bool weyl_sign_equivariance_check(const RootSystem& R, const Eigen::VectorXd& mu, std::size_t w);
/// The same identity checked exactly for a rational point in simple-root coordinates.
bool weyl_sign_equivariance_exact(const RootSystem& R, std::span<const Rational> root_coords, std::size_t w);

/// {family, rank, components, basis, gram, simple_roots, positive_roots,
///  simple_roots_orthonormal, rho, weyl_order}; rationals as "p/q" strings.
nlohmann::json to_json(const RootSystem& R);

}  // namespace symspace
