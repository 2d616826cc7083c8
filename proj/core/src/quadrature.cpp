#include "orthokern/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "orthokern/gamma.hpp"
#include "orthokern/specfun.hpp"

namespace orthokern {

namespace detail {
void non_finite_integrand(std::size_t index) {
  fail("integrate", "integrand is not finite at node " + std::to_string(index));
}
}  // namespace detail

std::string WeightDescriptor::name() const {
  switch (kind) {
    case Kind::jacobi:
      return "gauss-jacobi";
    case Kind::beta:
      return "beta";
    case Kind::legendre_interval:
      return "legendre";
    case Kind::simplex:
      return "simplex";
    case Kind::cube:
      return "cube";
    case Kind::ball:
      return "ball";
  }
  return "unknown";
}

double QuadRule1D::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double PointSet::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

namespace {

using Ext = long double;

struct JacobiEval {
  Ext p;   // P_n(t)
  Ext dp;  // P_n'(t)
};

// P_n^(a,b) and its derivative by the differentiated three-term recurrence.
JacobiEval jacobi_with_derivative(int n, Ext a, Ext b, Ext t) {
  Ext p0 = 1.0L, d0 = 0.0L;
  if (n == 0) return {p0, d0};
  Ext p1 = (a + 1.0L) + 0.5L * (a + b + 2.0L) * (t - 1.0L);
  Ext d1 = 0.5L * (a + b + 2.0L);
  for (int k = 2; k <= n; ++k) {
    const Ext s = 2.0L * k + a + b;
    const Ext a1 = 2.0L * k * (k + a + b) * (s - 2.0L);
    const Ext a2 = (s - 1.0L) * (a * a - b * b);
    const Ext a3 = (s - 2.0L) * (s - 1.0L) * s;
    const Ext a4 = 2.0L * (k + a - 1.0L) * (k + b - 1.0L) * s;
    const Ext p2 = ((a2 + a3 * t) * p1 - a4 * p0) / a1;
    const Ext d2 = ((a2 + a3 * t) * d1 + a3 * p1 - a4 * d0) / a1;
    p0 = p1;
    d0 = d1;
    p1 = p2;
    d1 = d2;
  }
  return {p1, d1};
}

}  // namespace

QuadRule1D gauss_jacobi(int n, double alpha, double beta) {
  detail::require(n >= 1, "gauss_jacobi", "requires n >= 1 nodes (n = " + std::to_string(n) + ")");
  detail::require(alpha > -1.0, "gauss_jacobi", "requires alpha > -1");
  detail::require(beta > -1.0, "gauss_jacobi", "requires beta > -1");
  const double a = alpha;
  const double b = beta;
  const double ab = a + b;

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double b2 = 0.0;
    if (k == 1) {
      b2 = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub[k - 1] = std::sqrt(b2);
  }

  QuadRule1D rule;
  rule.weight = {WeightDescriptor::Kind::jacobi, {alpha, beta}};
  rule.exactness = 2 * n - 1;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  if (n == 1) {
    rule.nodes[0] = diag[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) detail::fail("gauss_jacobi", "eigensolver did not converge");
    const Eigen::VectorXd& ev = solver.eigenvalues();
    for (int i = 0; i < n; ++i) rule.nodes[i] = ev[i];
  }

  // Christoffel weights C_n / ((1 - t^2) P_n'(t)^2). Nodes are polished and
  // weights evaluated in extended precision: near the endpoints the weight is
  // sensitive to node error by a factor of order n^2.
  const Ext cn = std::exp(static_cast<Ext>(ab + 1.0) * std::numbers::ln2_v<Ext> +
                          std::lgamma(n + static_cast<Ext>(a) + 1.0L) +
                          std::lgamma(n + static_cast<Ext>(b) + 1.0L) -
                          std::lgamma(n + static_cast<Ext>(ab) + 1.0L) - std::lgamma(n + 1.0L));
  for (int i = 0; i < n; ++i) {
    Ext t = rule.nodes[i];
    JacobiEval e = jacobi_with_derivative(n, a, b, t);
    for (int it = 0; it < 6; ++it) {
      const Ext next = t - e.p / e.dp;
      if (!(next > -1.0L && next < 1.0L)) break;
      const JacobiEval en = jacobi_with_derivative(n, a, b, next);
      if (std::fabs(en.p) >= std::fabs(e.p)) break;
      t = next;
      e = en;
    }
    rule.nodes[i] = static_cast<double>(t);
    rule.weights[i] = static_cast<double>(cn / ((1.0L - t) * (1.0L + t) * e.dp * e.dp));
  }

  for (int i = 0; i < n; ++i) {
    const bool interior = rule.nodes[i] > -1.0 && rule.nodes[i] < 1.0;
    const bool increasing = i == 0 || rule.nodes[i] > rule.nodes[i - 1];
    if (!interior || !increasing || !(rule.weights[i] > 0.0)) {
      detail::fail("gauss_jacobi", "lost node ordering or weight positivity at n = " +
                                       std::to_string(n) + " (parameters too extreme)");
    }
  }
  return rule;
}

QuadRule1D beta_rule(int n, double a, double b) {
  detail::require(a > 0.0, "beta_rule", "requires a > 0");
  detail::require(b > 0.0, "beta_rule", "requires b > 0");
  // s = (1 + t) / 2 turns s^(a-1)(1-s)^(b-1) ds into
  // 2^(1-a-b) (1-t)^(b-1) (1+t)^(a-1) dt
  QuadRule1D rule = gauss_jacobi(n, b - 1.0, a - 1.0);
  const double scale = std::exp2(1.0 - a - b);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= scale;
  }
  rule.weight = {WeightDescriptor::Kind::beta, {a, b}};
  return rule;
}

QuadRule1D legendre_rule(int n, double lo, double hi) {
  detail::require(hi > lo, "legendre_rule", "requires lo < hi");
  QuadRule1D rule = gauss_jacobi(n, 0.0, 0.0);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = lo + half * (1.0 + rule.nodes[i]);
    rule.weights[i] *= half;
  }
  rule.weight = {WeightDescriptor::Kind::legendre_interval, {lo, hi}};
  return rule;
}

SimplexRule simplex_rule(int d, std::span<const double> exponents, int n) {
  detail::require(d >= 2, "simplex_rule", "requires d >= 2");
  detail::require(static_cast<int>(exponents.size()) == d, "simplex_rule",
                  "exponent vector must have d entries");
  for (double a : exponents) {
    detail::require(a > 0.0, "simplex_rule", "requires all exponents > 0");
  }

  // u_k = s_k prod_{i<k} (1 - s_i) for k < d, u_d = prod (1 - s_i); the
  // factor s_k carries the weight beta(a_k, a_{k+1} + ... + a_d).
  std::vector<QuadRule1D> axes;
  double tail = 0.0;
  for (int k = d - 1; k >= 0; --k) {
    if (k < d - 1) axes.push_back(beta_rule(n, exponents[k], tail));
    tail += exponents[k];
  }
  std::reverse(axes.begin(), axes.end());

  SimplexRule rule;
  rule.dim = d;
  rule.exponents.assign(exponents.begin(), exponents.end());
  rule.exactness = 2 * n - 1;
  rule.weight = {WeightDescriptor::Kind::simplex, rule.exponents};

  std::size_t total = 1;
  for (int k = 0; k < d - 1; ++k) total *= static_cast<std::size_t>(n);
  rule.coords.reserve(total * d);
  rule.weights.reserve(total);

  std::vector<int> idx(d - 1, 0);
  std::vector<double> u(d);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double rest = 1.0;
    double w = 1.0;
    for (int k = 0; k < d - 1; ++k) {
      const double s = axes[k].nodes[idx[k]];
      u[k] = rest * s;
      rest *= (1.0 - s);
      w *= axes[k].weights[idx[k]];
    }
    u[d - 1] = rest;
    rule.coords.insert(rule.coords.end(), u.begin(), u.end());
    rule.weights.push_back(w);
    for (int k = d - 2; k >= 0; --k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return rule;
}

CubeRule cube_rule(std::span<const double> lambdas, int n) {
  const int d = static_cast<int>(lambdas.size());
  detail::require(d >= 1, "cube_rule", "requires at least one axis");
  std::vector<QuadRule1D> axes;
  for (double l : lambdas) {
    detail::require(l > -0.5, "cube_rule", "requires lambda_i > -1/2");
    QuadRule1D r = gauss_jacobi(n, l - 0.5, l - 0.5);
    const double c = c_lambda(l);
    for (double& w : r.weights) w *= c;
    axes.push_back(std::move(r));
  }

  CubeRule rule;
  rule.dim = d;
  rule.lambdas.assign(lambdas.begin(), lambdas.end());
  rule.exactness = 2 * n - 1;
  rule.weight = {WeightDescriptor::Kind::cube, rule.lambdas};

  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= static_cast<std::size_t>(n);
  rule.coords.reserve(total * d);
  rule.weights.reserve(total);
  std::vector<int> idx(d, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double w = 1.0;
    for (int k = 0; k < d; ++k) {
      rule.coords.push_back(axes[k].nodes[idx[k]]);
      w *= axes[k].weights[idx[k]];
    }
    rule.weights.push_back(w);
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return rule;
}

BallRule ball_rule(int d, double lambda, double mu, int radial, int angular) {
  detail::require(d == 2 || d == 3, "ball_rule",
                  "ball quadrature is available for d in {2, 3} (d = " + std::to_string(d) + ")");
  detail::require(lambda >= 0.0, "ball_rule", "requires lambda >= 0");
  detail::require(mu >= 0.0, "ball_rule", "requires mu >= 0");
  detail::require(radial >= 1 && angular >= 1, "ball_rule", "requires positive resolutions");

  // r^(2 lambda + d - 1) (1 - r^2)^(mu - 1/2) dr = 1/2 rho^(lambda + d/2 - 1) (1 - rho)^(mu - 1/2) d rho
  const double ra = lambda + 0.5 * d;
  const double rb = mu + 0.5;
  QuadRule1D rho = beta_rule(radial, ra, rb);
  const double mass = gamma_ratio({ra, rb}, {ra + rb});

  BallRule rule;
  rule.dim = d;
  rule.lambda = lambda;
  rule.mu = mu;
  rule.weight = {WeightDescriptor::Kind::ball, {lambda, mu}};

  if (d == 2) {
    const int na = angular;
    rule.exactness = std::min(4 * radial - 2, na - 1);
    for (int i = 0; i < radial; ++i) {
      const double r = std::sqrt(rho.nodes[i]);
      const double wr = rho.weights[i] / mass;
      for (int k = 0; k < na; ++k) {
        const double th = 2.0 * std::numbers::pi * (k + 0.5) / na;
        rule.coords.push_back(r * std::cos(th));
        rule.coords.push_back(r * std::sin(th));
        rule.weights.push_back(wr / na);
      }
    }
  } else {
    const int nphi = 2 * angular;
    QuadRule1D polar = gauss_jacobi(angular, 0.0, 0.0);
    rule.exactness = std::min(4 * radial - 2, 2 * angular - 1);
    for (int i = 0; i < radial; ++i) {
      const double r = std::sqrt(rho.nodes[i]);
      const double wr = rho.weights[i] / mass;
      for (int p = 0; p < angular; ++p) {
        const double z = polar.nodes[p];
        const double sz = std::sqrt((1.0 - z) * (1.0 + z));
        const double wp = 0.5 * polar.weights[p];
        for (int k = 0; k < nphi; ++k) {
          const double ph = 2.0 * std::numbers::pi * (k + 0.5) / nphi;
          rule.coords.push_back(r * sz * std::cos(ph));
          rule.coords.push_back(r * sz * std::sin(ph));
          rule.coords.push_back(r * z);
          rule.weights.push_back(wr * wp / nphi);
        }
      }
    }
  }
  return rule;
}

BallRule ball_rule(int d, double lambda, double mu, int n) {
  detail::require(n >= 1, "ball_rule", "requires n >= 1");
  const int angular = d == 2 ? 4 * n - 1 : 2 * n;
  return ball_rule(d, lambda, mu, n, angular);
}

}  // namespace orthokern
