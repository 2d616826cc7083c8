#pragma once

#include <functional>
#include <span>
#include <vector>

#include "orthokern/cube_kernels.hpp"
#include "orthokern/identities.hpp"

namespace orthokern {

/// b ||x||^(2 lambda) (1 - ||x||^2)^(mu - 1/2) on the unit ball of R^d.
class BallWeight {
public:
  enum class Regime { interior, mu_zero, lambda_zero, both_zero };

  BallWeight(int d, double lambda, double mu);

  int dim() const { return d_; }
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  Regime regime() const;
  /// b_{lambda,mu}: makes the weight a probability measure.
  double normalization() const;
  /// lambda + (d - 1)/2, the index of the radial generalized Gegenbauer factor.
  double radial_index() const { return lambda_ + 0.5 * (d_ - 1); }
  /// lambda + mu + (d - 1)/2, the index of the one-dimensional kernel.
  double kernel_index() const { return lambda_ + mu_ + 0.5 * (d_ - 1); }

private:
  int d_;
  double lambda_;
  double mu_;
};

/// One summand of the direct kernel, indexed by j with m = n - 2j:
///   coefficient D_{2j}(sqrt(1-|x|^2)) D_{2j}(sqrt(1-|y|^2)) |x|^m |y|^m Z_m(<x',y'>)
struct BallKernelTerm {
  int j = 0;
  double coefficient = 0.0;  // B_{j,n} / H_j^n
  double d_lambda = 0.0;     // D-pair parameters
  double d_mu = 0.0;
  double zonal_index = 0.0;  // (d - 2)/2
};

std::vector<BallKernelTerm> ball_kernel_terms(int n, const BallWeight& w);

/// Quadrature order per axis that makes the triple integrals exact for
/// degree-n integrands, plus a safety margin.
int ball_default_order(int n);

/// Reproducing kernel from the orthonormal basis and the spherical-harmonic
/// addition formula.
double kernel_ball_direct(int n, const BallWeight& w, std::span<const double> x,
                          std::span<const double> y);

/// Triple-integral form of P_n(W; x, y); needs lambda > 0 and mu > 0.
double kernel_ball_closed(int n, const BallWeight& w, std::span<const double> x,
                          std::span<const double> y, int order);
/// mu = 0 limit: the t-integral becomes the average of t = +1 and t = -1.
double kernel_ball_closed_mu0(int n, const BallWeight& w, std::span<const double> x,
                              std::span<const double> y, int order);
/// lambda = 0 limit: the u-integral collapses to u = 0.
double kernel_ball_closed_lambda0(int n, const BallWeight& w, std::span<const double> x,
                                  std::span<const double> y, int order);
/// Picks the integral form matching the weight's regime (including
/// lambda = mu = 0, where both collapses apply).
double kernel_ball_integral(int n, const BallWeight& w, std::span<const double> x,
                            std::span<const double> y, int order);

/// P_n(W; x, 0): D_n(1) D_n(sqrt(1 - |x|^2)) with D = D^(lambda+(d-1)/2, mu)
/// for even n, and 0 for odd n (the weight is centrally symmetric).
double kernel_ball_at_zero(int n, const BallWeight& w, std::span<const double> x);

/// Normalizer of the integral operator: the reciprocal of the total mass of
/// its weights. Cached per (d, lambda, mu, order); safe to call concurrently.
double a_const(const BallWeight& w, int order = 48);

/// G_x f(y), the normalized integral of f(zeta(x, y, u, v, t)). Accepts every
/// regime; limits use the collapsed forms.
double apply_Gx(const std::function<double(double)>& f, const BallWeight& w,
                std::span<const double> x, std::span<const double> y, int order);

/// Integral of G_x g against W over the ball (ball quadrature) versus the
/// one-dimensional integral of g. g is given by monomial coefficients.
IdentityReport verify_Gx_integral(std::span<const double> g, const BallWeight& w,
                                  std::span<const double> x, int order);

/// (C, delta) kernel as G_x applied to the one-dimensional Cesaro kernel at 1.
double cesaro_kernel_ball(const CesaroSpec& spec, const BallWeight& w,
                          std::span<const double> x, std::span<const double> y, int order);

/// (C, delta) kernel as the binomially weighted sum of kernel_ball_direct.
double cesaro_kernel_ball_direct(const CesaroSpec& spec, const BallWeight& w,
                                 std::span<const double> x, std::span<const double> y);

enum class LebesgueMethod {
  automatic,       // origin reduction at x = 0, ball quadrature elsewhere
  ball_quadrature,
  origin_reduction,
};

/// Lambda_n(x) = int |K_n^delta(W; x, y)| W(y) dy. Ball quadrature uses
/// `order` radial nodes (default max(64, 8n) when order <= 0); the origin
/// reduction integrates the radial profile piecewise between its zeros.
double lebesgue_function(const CesaroSpec& spec, const BallWeight& w,
                         std::span<const double> x, int order = 0,
                         LebesgueMethod method = LebesgueMethod::automatic);

/// Lambda_n(0) by the origin reduction.
double lebesgue_at_origin(const CesaroSpec& spec, const BallWeight& w);

struct CriticalRow {
  double delta = 0.0;
  int n = 0;
  double lebesgue = 0.0;
  double critical_value = 0.0;
};

/// Lambda_n(0) for every (delta, n) pair, in delta-major order.
std::vector<CriticalRow> critical_index_sweep(const BallWeight& w, std::span<const double> deltas,
                                              std::span<const int> degrees,
                                              unsigned threads = 1);

}  // namespace orthokern
