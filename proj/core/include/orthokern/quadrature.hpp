#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orthokern/error.hpp"

namespace orthokern {

/// Which weight function a rule integrates against.
struct WeightDescriptor {
  enum class Kind {
    jacobi,   // (1 - t)^alpha (1 + t)^beta on (-1, 1); params {alpha, beta}
    beta,     // s^(a-1) (1 - s)^(b-1) on (0, 1); params {a, b}
    legendre_interval,  // unit weight on (lo, hi); params {lo, hi}
    simplex,  // prod u_i^(a_i - 1) on the homogeneous simplex; params {a_1..a_d}
    cube,     // normalized prod c_{l_i} (1 - x_i^2)^(l_i - 1/2); params {l_1..l_d}
    ball,     // normalized b ||x||^(2 lambda) (1 - ||x||^2)^(mu - 1/2); params {lambda, mu}
  };

  Kind kind = Kind::jacobi;
  std::vector<double> params;

  std::string name() const;
};

/// One-dimensional rule. Nodes are strictly increasing and interior.
struct QuadRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  WeightDescriptor weight;
  int exactness = 0;  // integrates polynomials up to this degree exactly

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
};

/// Shared layout of the multivariate rules: row-major node coordinates.
struct PointSet {
  int dim = 0;
  std::vector<double> coords;  // size() * dim
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  double total_weight() const;
};

/// Rule on the homogeneous simplex {u >= 0, sum u = 1} for prod u_i^(a_i - 1).
/// Nodes carry all d homogeneous coordinates.
struct SimplexRule : PointSet {
  std::vector<double> exponents;
  int exactness = 0;
  WeightDescriptor weight;
};

/// Tensor rule on [-1, 1]^d for the normalized product Gegenbauer weight.
struct CubeRule : PointSet {
  std::vector<double> lambdas;
  int exactness = 0;
  WeightDescriptor weight;
};

/// Spherical-polar rule on the unit ball B^d, d in {2, 3}, for the normalized
/// weight b_{lambda,mu} ||x||^(2 lambda) (1 - ||x||^2)^(mu - 1/2).
struct BallRule : PointSet {
  double lambda = 0.0;
  double mu = 0.0;
  int exactness = 0;
  WeightDescriptor weight;
};

/// n-point Gauss rule for (1 - t)^alpha (1 + t)^beta on (-1, 1). Nodes come
/// from the symmetric tridiagonal Jacobi matrix and are Newton-polished on
/// P_n^(alpha,beta); weights use the Christoffel formula.
QuadRule1D gauss_jacobi(int n, double alpha, double beta);

/// n-point Gauss rule for s^(a-1) (1 - s)^(b-1) on (0, 1); total weight B(a, b).
QuadRule1D beta_rule(int n, double a, double b);

/// n-point Gauss-Legendre rule on (lo, hi) with unit weight.
QuadRule1D legendre_rule(int n, double lo, double hi);

/// Conical-product rule on the homogeneous simplex T^d: nested beta rules,
/// n points per axis, n^(d-1) nodes, exact for monomials of degree <= 2n - 1.
SimplexRule simplex_rule(int d, std::span<const double> exponents, int n);

/// Tensor Gauss-Jacobi rule for c_lambda prod (1 - x_i^2)^(lambda_i - 1/2);
/// total weight 1.
CubeRule cube_rule(std::span<const double> lambdas, int n);

/// Ball rule with `radial` Gauss nodes in r^2 and an angular product rule
/// (trapezoid in the angle for d = 2; Gauss-Legendre in cos(polar angle) times
/// a 2*`angular`-point trapezoid for d = 3).
BallRule ball_rule(int d, double lambda, double mu, int radial, int angular);

/// ball_rule with n radial nodes and the angular resolution matched to the
/// radial exactness, so that every polynomial of degree <= 4n - 2 is exact.
BallRule ball_rule(int d, double lambda, double mu, int n);

namespace detail {
[[noreturn]] void non_finite_integrand(std::size_t index);
}

/// Sum of w_i f(node_i) in node order. A non-finite f value raises DomainError.
template <class F>
  requires std::invocable<F&, double>
double integrate(const QuadRule1D& rule, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v)) detail::non_finite_integrand(i);
    acc += rule.weights[i] * v;
  }
  return acc;
}

template <class F>
  requires std::invocable<F&, std::span<const double>>
double integrate(const PointSet& rule, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.point(i));
    if (!std::isfinite(v)) detail::non_finite_integrand(i);
    acc += rule.weights[i] * v;
  }
  return acc;
}

}  // namespace orthokern
