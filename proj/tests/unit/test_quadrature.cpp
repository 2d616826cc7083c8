#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <orthokern/error.hpp>
#include <orthokern/quadrature.hpp>
#include <orthokern/specfun.hpp>

#include "oracles.hpp"

using namespace orthokern;

namespace {

void expect_valid_1d(const QuadRule1D& r, double lo, double hi) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_GT(r.weights[i], 0.0);
    EXPECT_GT(r.nodes[i], lo);
    EXPECT_LT(r.nodes[i], hi);
    if (i) {
      EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
    }
  }
}

}  // namespace

TEST(GaussJacobi, Examples) {
  const QuadRule1D one = gauss_jacobi(1, 0.0, 0.0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_NEAR(one.nodes[0], 0.0, 1e-16);
  EXPECT_NEAR(one.weights[0], 2.0, 1e-15);

  const QuadRule1D five = gauss_jacobi(5, 0.0, 0.0);
  EXPECT_NEAR(integrate(five, [](double t) { return std::pow(t, 8); }), 2.0 / 9.0, 1e-14);
  EXPECT_EQ(five.exactness, 9);

  EXPECT_NEAR(gauss_jacobi(8, 0.5, 0.5).total_weight(), std::numbers::pi / 2, 1e-13);
  EXPECT_NEAR(integrate(gauss_jacobi(30, 0.0, 0.0), [](double t) { return std::exp(t); }),
              2.0 * std::sinh(1.0), 1e-14);
}

TEST(GaussJacobi, Errors) {
  EXPECT_THROW(gauss_jacobi(0, 0.0, 0.0), DomainError);
  EXPECT_THROW(gauss_jacobi(4, -1.0, 0.0), DomainError);
  EXPECT_THROW(gauss_jacobi(4, 0.0, -1.2), DomainError);
}

TEST(GaussJacobi, NodesAreJacobiRoots) {
  for (auto [a, b] : {std::pair{-0.6, 0.3}, {1.5, 1.5}, {0.0, 3.0}}) {
    const QuadRule1D r = gauss_jacobi(12, a, b);
    expect_valid_1d(r, -1.0, 1.0);
    for (double t : r.nodes) EXPECT_NEAR(oracle::jacobi_explicit(12, a, b, t), 0.0, 1e-9);
  }
}

TEST(GaussJacobi, MonomialMoments) {
  // int ((1+t)/2)^k (1-t)^a (1+t)^b dt = 2^(a+b+1) B(b+k+1, a+1)
  for (auto [a, b] : {std::pair{0.0, 0.0}, {-0.9, -0.5}, {0.5, 0.5}, {2.3, -0.2}, {-0.5, 4.0}}) {
    for (int n : {1, 4, 17, 40}) {
      const QuadRule1D r = gauss_jacobi(n, a, b);
      EXPECT_NEAR(r.total_weight(), std::pow(2.0, a + b + 1) * oracle::beta_fn(b + 1, a + 1),
                  1e-13 * r.total_weight());
      for (int k = 0; k <= r.exactness; ++k) {
        const double exact = std::pow(2.0, a + b + 1) * oracle::beta_fn(b + k + 1, a + 1);
        const double q = integrate(r, [&](double t) { return std::pow((1 + t) / 2, k); });
        EXPECT_NEAR(q, exact, 1e-12 * exact) << a << " " << b << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(BetaRule, Examples) {
  EXPECT_NEAR(beta_rule(4, 1.0, 1.0).total_weight(), 1.0, 1e-15);
  EXPECT_NEAR(beta_rule(6, 2.0, 3.0).total_weight(), 1.0 / 12.0, 1e-15);
  const QuadRule1D r = beta_rule(6, 1.5, 0.5);
  EXPECT_NEAR(integrate(r, [](double s) { return s; }),
              std::tgamma(2.5) * std::tgamma(0.5) / std::tgamma(3.0), 1e-13);
  EXPECT_THROW(beta_rule(3, 0.0, 1.0), DomainError);
  EXPECT_THROW(beta_rule(3, 1.0, -0.5), DomainError);
}

TEST(BetaRule, Moments) {
  for (auto [a, b] : {std::pair{0.3, 0.3}, {1.0, 2.0}, {4.5, 0.7}}) {
    const QuadRule1D r = beta_rule(15, a, b);
    expect_valid_1d(r, 0.0, 1.0);
    for (int k = 0; k <= r.exactness; ++k) {
      const double exact = oracle::beta_fn(a + k, b);
      EXPECT_NEAR(integrate(r, [&](double s) { return std::pow(s, k); }), exact, 1e-12 * exact);
    }
  }
}

TEST(LegendreRule, Interval) {
  const QuadRule1D r = legendre_rule(7, -0.25, 2.0);
  expect_valid_1d(r, -0.25, 2.0);
  for (int k = 0; k <= r.exactness; ++k) {
    const double exact = 2.25 / (k + 1);
    EXPECT_NEAR(integrate(r, [&](double t) { return std::pow((t + 0.25) / 2.25, k); }), exact,
                1e-12 * exact);
  }
  EXPECT_THROW(legendre_rule(3, 1.0, 1.0), DomainError);
}

TEST(SimplexRule, Examples) {
  const std::vector<double> e11{1.0, 1.0};
  EXPECT_NEAR(simplex_rule(2, e11, 3).total_weight(), 1.0, 1e-15);
  const std::vector<double> e111{1.0, 1.0, 1.0};
  const SimplexRule r3 = simplex_rule(3, e111, 2);
  EXPECT_NEAR(integrate(r3, [](std::span<const double> u) { return u[0]; }), 1.0 / 6.0, 1e-15);
  const std::vector<double> e{0.5, 1.5};
  const SimplexRule r2 = simplex_rule(2, e, 3);
  EXPECT_NEAR(integrate(r2, [](std::span<const double> u) { return u[0] * u[0]; }),
              std::tgamma(2.5) * std::tgamma(1.5) / std::tgamma(4.0), 1e-13);
  const std::vector<double> bad{1.0, 0.0};
  EXPECT_THROW(simplex_rule(2, bad, 3), DomainError);
}

TEST(SimplexRule, NodesOnSimplexAndMoments) {
  const std::vector<double> a{0.3, 1.2, 2.5, 0.8};
  const SimplexRule r = simplex_rule(4, a, 6);
  EXPECT_EQ(r.size(), 216u);
  for (std::size_t i = 0; i < r.size(); ++i) {
    double s = 0.0;
    for (double u : r.point(i)) {
      EXPECT_GE(u, 0.0);
      s += u;
    }
    EXPECT_NEAR(s, 1.0, 1e-14);
    EXPECT_GT(r.weights[i], 0.0);
  }
  // all monomials of total degree <= exactness
  for (int k0 = 0; k0 <= r.exactness; ++k0)
    for (int k1 = 0; k0 + k1 <= r.exactness; ++k1)
      for (int k2 = 0; k0 + k1 + k2 <= r.exactness; ++k2)
        for (int k3 = 0; k0 + k1 + k2 + k3 <= r.exactness; ++k3) {
          const int k[4] = {k0, k1, k2, k3};
          double lg = 0.0, tot = 0.0;
          for (int i = 0; i < 4; ++i) {
            lg += std::lgamma(a[i] + k[i]);
            tot += a[i] + k[i];
          }
          const double exact = std::exp(lg - std::lgamma(tot));
          const double q = integrate(r, [&](std::span<const double> u) {
            double v = 1.0;
            for (int i = 0; i < 4; ++i) v *= std::pow(u[i], k[i]);
            return v;
          });
          ASSERT_NEAR(q, exact, 1e-12 * exact);
        }
}

TEST(CubeRule, MomentsAndNormalization) {
  const std::vector<double> l{-0.3, 1.0, 2.5};
  const CubeRule r = cube_rule(l, 6);
  EXPECT_NEAR(r.total_weight(), 1.0, 1e-14);
  auto moment = [&](int i, int k) {
    if (k % 2) return 0.0;
    return c_lambda(l[i]) * oracle::beta_fn((k + 1) / 2.0, l[i] + 0.5);
  };
  for (int a = 0; a <= 11; ++a)
    for (int b = 0; b <= 11; b += 2)
      for (int c = 0; c <= 11; c += 3) {
        const double exact = moment(0, a) * moment(1, b) * moment(2, c);
        const double q = integrate(r, [&](std::span<const double> x) {
          return std::pow(x[0], a) * std::pow(x[1], b) * std::pow(x[2], c);
        });
        ASSERT_NEAR(q, exact, 1e-12 * std::max(std::fabs(exact), 1e-3));
      }
}

TEST(BallRule, Examples) {
  EXPECT_NEAR(ball_rule(2, 0.5, 1.0, 6).total_weight(), 1.0, 1e-14);
  for (int d : {2, 3}) {
    const BallRule r = ball_rule(d, 0.7, 1.3, 5);
    EXPECT_NEAR(integrate(r, [](std::span<const double> x) { return x[0]; }), 0.0, 1e-15);
  }
  const BallRule r = ball_rule(2, 0.0, 0.5, 4);
  EXPECT_NEAR(integrate(r, [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }), 0.5,
              1e-15);
  EXPECT_THROW(ball_rule(4, 0.5, 0.5, 4), DomainError);
}

TEST(BallRule, MonomialMoments) {
  // b int x^alpha W = [sphere moment] * [radial beta moment] / [mass]
  auto exact_moment = [](int d, double lambda, double mu, const std::vector<int>& alpha) {
    int tot = 0;
    double lg = 0.0;
    for (int a : alpha) {
      if (a % 2) return 0.0;
      tot += a;
      lg += std::lgamma((a + 1) / 2.0);
    }
    const double sphere = std::exp(lg - std::lgamma((tot + d) / 2.0)) / std::exp(d * std::lgamma(0.5) - std::lgamma(d / 2.0));
    const double radial = oracle::beta_fn(lambda + (tot + d) / 2.0, mu + 0.5) / oracle::beta_fn(lambda + d / 2.0, mu + 0.5);
    return sphere * radial;
  };
  for (auto [d, l, m] : {std::tuple{2, 0.0, 0.5}, {2, 0.8, 1.1}, {3, 1.2, 0.0}, {3, 0.0, 2.0}}) {
    const BallRule r = ball_rule(d, l, m, 4);
    for (int a = 0; a <= r.exactness; ++a)
      for (int b = 0; a + b <= r.exactness; ++b)
        for (int c = 0; a + b + c <= r.exactness; ++c) {
          if (d == 2 && c > 0) break;
          std::vector<int> alpha{a, b};
          if (d == 3) alpha.push_back(c);
          const double exact = exact_moment(d, l, m, alpha);
          const double q = integrate(r, [&](std::span<const double> x) {
            double v = 1.0;
            for (int i = 0; i < d; ++i) v *= std::pow(x[i], alpha[i]);
            return v;
          });
          ASSERT_NEAR(q, exact, 1e-12 * std::max(std::fabs(exact), 1e-3)) << d << " " << a << b << c;
        }
  }
}

TEST(Integrate, RejectsNonFinite) {
  const QuadRule1D r = gauss_jacobi(4, 0.0, 0.0);
  EXPECT_THROW(integrate(r, [](double) { return std::nan(""); }), DomainError);
}

TEST(Integrate, DeterministicAndConvergent) {
  const QuadRule1D a = gauss_jacobi(20, 0.3, 0.3), b = gauss_jacobi(40, 0.3, 0.3);
  auto f = [](double t) { return std::cos(3 * t) / (2.0 + t); };
  EXPECT_EQ(integrate(a, f), integrate(a, f));
  EXPECT_NEAR(integrate(a, f), integrate(b, f), 1e-10);
}

TEST(Descriptor, Names) {
  EXPECT_EQ(gauss_jacobi(2, 0.5, 0.5).weight.kind, WeightDescriptor::Kind::jacobi);
  EXPECT_FALSE(beta_rule(2, 1.0, 2.0).weight.name().empty());
}
