#pragma once

// Points of the Cartan subspace and its dual.
//
// Both live in the same orthonormal coordinates (the ones produced by
// RootSystem), and the inner product identifies them; the two wrapper types
// exist so that "where on G/K" and "which spectral parameter" cannot be
// swapped by accident at a call site.

#include <Eigen/Core>

#include <initializer_list>

namespace symspace {

struct CartanVector {
  Eigen::VectorXd coords;

  CartanVector() = default;
  explicit CartanVector(Eigen::VectorXd v) : coords(std::move(v)) {}
  CartanVector(std::initializer_list<double> v) : coords(static_cast<Eigen::Index>(v.size())) {
    Eigen::Index i = 0;
    for (double x : v) coords[i++] = x;
  }

  Eigen::Index dim() const { return coords.size(); }
  double norm() const { return coords.norm(); }
  bool is_finite() const { return coords.allFinite(); }
};

struct SpectralVector {
  Eigen::VectorXd coords;

  SpectralVector() = default;
  explicit SpectralVector(Eigen::VectorXd v) : coords(std::move(v)) {}
  SpectralVector(std::initializer_list<double> v) : coords(static_cast<Eigen::Index>(v.size())) {
    Eigen::Index i = 0;
    for (double x : v) coords[i++] = x;
  }

  Eigen::Index dim() const { return coords.size(); }
  double norm() const { return coords.norm(); }
  bool is_finite() const { return coords.allFinite(); }
};

}  // namespace symspace
