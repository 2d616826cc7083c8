#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orthokern/identities.hpp"

namespace orthokern {

/// Product Gegenbauer weight prod c_{l_i} (1 - x_i^2)^(l_i - 1/2) on [-1,1]^d.
class CubeWeight {
public:
  explicit CubeWeight(LambdaVec lv);
  explicit CubeWeight(std::vector<double> lambdas);

  const LambdaVec& lambdas() const { return lv_; }
  int dim() const { return lv_.dim(); }
  /// prod c_{l_i}; makes the weight a probability measure.
  double normalization() const;

private:
  LambdaVec lv_;
};

/// Degree and order of a Cesaro (C, delta) mean.
struct CesaroSpec {
  CesaroSpec(int n, double delta);
  int n;
  double delta;
};

/// Sum over |alpha| = n of prod C_{a_i}(x_i) C_{a_i}(y_i) / h_{a_i}, with the
/// multi-indices visited in colexicographic order. Rejects any lambda_i == 0.
double kernel_cube_direct(int n, const CubeWeight& w, std::span<const double> x,
                          std::span<const double> y);

/// P_n(W; x, 1) as a signed sum of simplex integrals of Z^(|lambda|+d-1).
/// Throws when the simplex rule of this order is not exact to degree n.
double kernel_cube_at_one_closed(int n, const CubeWeight& w, std::span<const double> x,
                                 int order);

/// One-dimensional (C, delta) kernel of the Gegenbauer expansion,
/// (1/A_n) sum_k A_{n-k} C_k(s) C_k(t) / h_k with A_m = binom(m + delta, m).
double cesaro_kernel_gegenbauer(const CesaroSpec& spec, double lambda, double s, double t);

/// (C, delta) kernel at y = 1 from simplex integrals of one-dimensional Cesaro
/// kernels. Needs delta >= d - 2; delta == d - 2 is the plain limit case.
double cesaro_kernel_cube_at_one(const CesaroSpec& spec, const CubeWeight& w,
                                 std::span<const double> x, int order);

/// (C, delta) kernel as the binomially weighted sum of kernel_cube_direct.
double cesaro_kernel_cube_direct(const CesaroSpec& spec, const CubeWeight& w,
                                 std::span<const double> x, std::span<const double> y);

struct CubeScan {
  int dim = 0;
  std::vector<double> points;  // row-major, dim entries per grid point
  std::vector<double> values;  // K_n^delta(W; x, 1) per grid point
  double min_value = 0.0;
  std::vector<double> argmin;

  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// Evaluates K_n^delta(W; x, 1) on the uniform grid with `resolution` points
/// per axis (first axis fastest). Ties for the minimum go to the lowest index.
CubeScan nonnegativity_scan(const CesaroSpec& spec, const CubeWeight& w, int resolution,
                            unsigned threads = 1);

}  // namespace orthokern
