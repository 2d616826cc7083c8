#include "orthokern/cube_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "orthokern/error.hpp"
#include "orthokern/gamma.hpp"
#include "orthokern/parallel.hpp"
#include "orthokern/quadrature.hpp"
#include "orthokern/specfun.hpp"

namespace orthokern {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_point(std::span<const double> p, int d, const char* where, const char* name) {
  detail::require(static_cast<int>(p.size()) == d, where,
                  std::string(name) + " must have " + std::to_string(d) + " coordinates");
  for (double v : p) {
    detail::require(v >= -1.0 && v <= 1.0, where,
                    std::string("requires ") + name + " in [-1, 1]^d (coordinate " + num(v) + ")");
  }
}

void require_no_zero(const CubeWeight& w, const char* where) {
  for (int i = 0; i < w.dim(); ++i) {
    detail::require(w.lambdas()[i] != 0.0, where,
                    "requires lambda_i != 0 (lambda_" + std::to_string(i + 1) + " = 0)");
  }
}

std::vector<double> shifted(const CubeWeight& w) {
  std::vector<double> a(w.lambdas().entries().begin(), w.lambdas().entries().end());
  for (double& v : a) v += 1.0;
  return a;
}

// sigma * int_{T^d} sum_k coeffs[k] Z_k^kappa(<x, u>) prod u_i^lambda_i du.
double simplex_zonal_integral(const CubeWeight& w, std::span<const double> x,
                              std::span<const double> coeffs, int order, const char* where) {
  const int d = w.dim();
  const int degree = static_cast<int>(coeffs.size()) - 1;
  const std::vector<double> a = shifted(w);
  const SimplexRule rule = simplex_rule(d, a, order);
  detail::require(rule.exactness >= degree, where,
                  "quadrature order " + std::to_string(order) + " is exact only to degree " +
                      std::to_string(rule.exactness) + " < n = " + std::to_string(degree));
  const GegenParam kappa(w.lambdas().sum() + d - 1.0);
  const double integral = integrate(rule, [&](std::span<const double> u) {
    double dot = 0.0;
    for (int i = 0; i < d; ++i) dot += x[i] * u[i];
    return gegenbauer_Z_series(coeffs, kappa, std::clamp(dot, -1.0, 1.0));
  });
  return sigma_multi(a) * integral;
}

}  // namespace

CubeWeight::CubeWeight(LambdaVec lv) : lv_(std::move(lv)) {
  detail::require(lv_.context() == LambdaVec::Context::cube, "CubeWeight",
                  "requires a cube-context LambdaVec (lambda_i > -1/2)");
}

CubeWeight::CubeWeight(std::vector<double> lambdas)
    : CubeWeight(LambdaVec(std::move(lambdas), LambdaVec::Context::cube)) {}

double CubeWeight::normalization() const {
  double c = 1.0;
  for (double l : lv_.entries()) c *= c_lambda(l);
  return c;
}

CesaroSpec::CesaroSpec(int n_, double delta_) : n(n_), delta(delta_) {
  detail::require(n >= 0, "CesaroSpec", "requires n >= 0");
  detail::require(std::isfinite(delta) && delta > -1.0, "CesaroSpec",
                  "requires delta > -1 (delta = " + num(delta) + ")");
}

double kernel_cube_direct(int n, const CubeWeight& w, std::span<const double> x,
                          std::span<const double> y) {
  const char* where = "kernel_cube_direct";
  detail::require(n >= 0, where, "requires n >= 0");
  require_no_zero(w, where);
  const int d = w.dim();
  require_point(x, d, where, "x");
  require_point(y, d, where, "y");

  // factor[i][k] = C_k(x_i) C_k(y_i) / h_k
  std::vector<std::vector<double>> factor(d);
  for (int i = 0; i < d; ++i) {
    const GegenParam p(w.lambdas()[i]);
    const auto cx = gegenbauer_C_sequence(n, p, x[i]);
    const auto cy = gegenbauer_C_sequence(n, p, y[i]);
    factor[i].resize(n + 1);
    for (int k = 0; k <= n; ++k) factor[i][k] = cx[k] * cy[k] / gegenbauer_h(k, p);
  }

  std::vector<int> alpha(d, 0);
  alpha[0] = n;
  double sum = 0.0;
  for (;;) {
    double term = 1.0;
    for (int i = 0; i < d; ++i) term *= factor[i][alpha[i]];
    sum += term;
    int i = 0;
    while (i < d && alpha[i] == 0) ++i;
    if (i >= d - 1) break;
    const int v = alpha[i];
    alpha[i] = 0;
    alpha[0] = v - 1;
    ++alpha[i + 1];
  }
  return sum;
}

double kernel_cube_at_one_closed(int n, const CubeWeight& w, std::span<const double> x,
                                 int order) {
  const char* where = "kernel_cube_at_one_closed";
  detail::require(n >= 0, where, "requires n >= 0");
  const int d = w.dim();
  require_point(x, d, where, "x");

  std::vector<double> coeffs(n + 1, 0.0);
  for (int m = 0; m <= std::min(n / 2, d - 1); ++m) {
    const double b = static_cast<double>(binomial(d - 1, m));
    coeffs[n - 2 * m] += (m % 2 == 0 ? b : -b);
  }
  return simplex_zonal_integral(w, x, coeffs, order, where);
}

double cesaro_kernel_gegenbauer(const CesaroSpec& spec, double lambda, double s, double t) {
  const char* where = "cesaro_kernel_gegenbauer";
  detail::require(lambda > 0.0, where, "requires lambda > 0 (lambda = " + num(lambda) + ")");
  detail::require(s >= -1.0 && s <= 1.0 && t >= -1.0 && t <= 1.0, where,
                  "requires s, t in [-1, 1]");
  const int n = spec.n;
  const GegenParam p(lambda);
  const auto a = cesaro_numbers(n, spec.delta);
  const auto cs = gegenbauer_C_sequence(n, p, s);
  const auto ct = gegenbauer_C_sequence(n, p, t);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += a[n - k] * cs[k] * ct[k] / gegenbauer_h(k, p);
  return sum / a[n];
}

double cesaro_kernel_cube_at_one(const CesaroSpec& spec, const CubeWeight& w,
                                 std::span<const double> x, int order) {
  const char* where = "cesaro_kernel_cube_at_one";
  const int d = w.dim();
  const int n = spec.n;
  require_point(x, d, where, "x");
  const double inner = spec.delta - (d - 1);
  detail::require(inner >= -1.0, where,
                  "requires delta >= d - 2 (delta = " + num(spec.delta) + ", d = " +
                      std::to_string(d) + ")");

  const auto a_inner = cesaro_numbers(n, inner);
  const double a_total = cesaro_number(n, spec.delta);
  std::vector<double> coeffs(n + 1, 0.0);
  for (int m = 0; m <= std::min(n, d - 1); ++m) {
    const double b = static_cast<double>(binomial(d - 1, m));
    for (int k = 0; k <= n - m; ++k) coeffs[k] += b * a_inner[n - m - k];
  }
  for (double& c : coeffs) c /= a_total;
  return simplex_zonal_integral(w, x, coeffs, order, where);
}

double cesaro_kernel_cube_direct(const CesaroSpec& spec, const CubeWeight& w,
                                 std::span<const double> x, std::span<const double> y) {
  const int n = spec.n;
  const auto a = cesaro_numbers(n, spec.delta);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += a[n - k] * kernel_cube_direct(k, w, x, y);
  return sum / a[n];
}

CubeScan nonnegativity_scan(const CesaroSpec& spec, const CubeWeight& w, int resolution,
                            unsigned threads) {
  const char* where = "nonnegativity_scan";
  detail::require(resolution >= 2, where, "requires grid resolution >= 2 per axis");
  require_no_zero(w, where);
  const int d = w.dim();

  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(resolution);

  CubeScan scan;
  scan.dim = d;
  scan.points.resize(count * d);
  scan.values.resize(count);
  const double step = 2.0 / (resolution - 1);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int i = 0; i < d; ++i) {
      const auto k = static_cast<int>(rest % resolution);
      rest /= resolution;
      scan.points[idx * d + i] = k == resolution - 1 ? 1.0 : -1.0 + k * step;
    }
  }

  const std::vector<double> ones(d, 1.0);
  parallel_for(count, threads, [&](std::size_t idx) {
    scan.values[idx] = cesaro_kernel_cube_direct(spec, w, scan.point(idx), ones);
  });

  const auto it = std::min_element(scan.values.begin(), scan.values.end());
  const auto best = static_cast<std::size_t>(it - scan.values.begin());
  scan.min_value = *it;
  const auto p = scan.point(best);
  scan.argmin.assign(p.begin(), p.end());
  return scan;
}

}  // namespace orthokern
