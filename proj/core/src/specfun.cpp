#include "orthokern/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "orthokern/error.hpp"
#include "orthokern/gamma.hpp"

namespace orthokern {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_degree(int n, const char* where) {
  detail::require(n >= 0, where, "degree n must be nonnegative (n = " + std::to_string(n) + ")");
}

void require_nonzero_lambda(GegenParam p, const char* where) {
  detail::require(!p.is_limit_zero(), where,
                  "lambda = 0 is degenerate for C_n^lambda; use gegenbauer_Z (Chebyshev limit)");
}

// log of the Jacobi squared norm; valid for n >= 0 and alpha, beta > -1
double log_jacobi_norm_squared(int n, double a, double b) {
  const double ln2 = std::numbers::ln2;
  if (n == 0) {
    return (a + b + 1.0) * ln2 + log_gamma(a + 1.0).log_abs + log_gamma(b + 1.0).log_abs -
           log_gamma(a + b + 2.0).log_abs;
  }
  return (a + b + 1.0) * ln2 - std::log(2.0 * n + a + b + 1.0) +
         log_gamma(n + a + 1.0).log_abs + log_gamma(n + b + 1.0).log_abs -
         log_gamma(n + a + b + 1.0).log_abs - std::lgamma(n + 1.0);
}

}  // namespace

GegenParam::GegenParam(double lambda) : lambda_(lambda) {
  detail::require(std::isfinite(lambda) && lambda > -0.5, "GegenParam",
                  "requires lambda > -1/2 (lambda = " + num(lambda) + ")");
}

JacobiParam::JacobiParam(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  detail::require(std::isfinite(alpha) && alpha > -1.0, "JacobiParam",
                  "requires alpha > -1 (alpha = " + num(alpha) + ")");
  detail::require(std::isfinite(beta) && beta > -1.0, "JacobiParam",
                  "requires beta > -1 (beta = " + num(beta) + ")");
}

GenGegenParam::GenGegenParam(double lambda, double mu) : lambda_(lambda), mu_(mu) {
  detail::require(std::isfinite(lambda) && lambda > -0.5, "GenGegenParam",
                  "requires lambda > -1/2 (lambda = " + num(lambda) + ")");
  detail::require(std::isfinite(mu) && mu > -0.5, "GenGegenParam",
                  "requires mu > -1/2 (mu = " + num(mu) + ")");
}

// Gegenbauer ------------------------------------------------------------------

// The recurrences run in long double: at t = +-1 the three terms nearly cancel
// and double accumulation loses about n^2 ulps by n = 50.
using Ext = long double;

std::vector<double> gegenbauer_C_sequence(int n, GegenParam p, double t) {
  require_degree(n, "gegenbauer_C");
  require_nonzero_lambda(p, "gegenbauer_C");
  const Ext lam = p.lambda();
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1.0;
  Ext prev = 1.0L;
  Ext cur = 2.0L * lam * t;
  if (n >= 1) c[1] = static_cast<double>(cur);
  for (int k = 1; k < n; ++k) {
    const Ext next = (2.0L * (k + lam) * t * cur - (k + 2.0L * lam - 1.0L) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
    c[k + 1] = static_cast<double>(cur);
  }
  return c;
}

double gegenbauer_C(int n, GegenParam p, double t) {
  require_degree(n, "gegenbauer_C");
  require_nonzero_lambda(p, "gegenbauer_C");
  const Ext lam = p.lambda();
  if (n == 0) return 1.0;
  Ext prev = 1.0L;
  Ext cur = 2.0L * lam * t;
  for (int k = 1; k < n; ++k) {
    const Ext next = (2.0L * (k + lam) * t * cur - (k + 2.0L * lam - 1.0L) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

double gegenbauer_C_at_one(int n, GegenParam p) {
  require_degree(n, "gegenbauer_C_at_one");
  require_nonzero_lambda(p, "gegenbauer_C_at_one");
  // binom(n + 2 lambda - 1, n) = (2 lambda)_n / n!
  SignedLog v = log_pochhammer(2.0 * p.lambda(), n);
  v.log_abs -= std::lgamma(n + 1.0);
  return v.value();
}

double gegenbauer_h(int n, GegenParam p) {
  require_degree(n, "gegenbauer_h");
  require_nonzero_lambda(p, "gegenbauer_h");
  if (n == 0) return 1.0;
  const double lam = p.lambda();
  return lam / (n + lam) * gegenbauer_C_at_one(n, p);
}

std::vector<double> gegenbauer_Z_sequence(int n, GegenParam p, double t) {
  require_degree(n, "gegenbauer_Z");
  const double lam = p.lambda();
  detail::require(lam >= 0.0, "gegenbauer_Z", "requires lambda >= 0 (lambda = " + num(lam) + ")");
  std::vector<double> z(static_cast<std::size_t>(n) + 1);
  if (p.is_limit_zero()) {
    // 2 T_k(t)
    z[0] = 1.0;
    double tm1 = 1.0;
    double tk = t;
    for (int k = 1; k <= n; ++k) {
      z[k] = 2.0 * tk;
      const double next = 2.0 * t * tk - tm1;
      tm1 = tk;
      tk = next;
    }
    return z;
  }
  const auto c = gegenbauer_C_sequence(n, p, t);
  for (int k = 0; k <= n; ++k) z[k] = (k + lam) / lam * c[k];
  return z;
}

double gegenbauer_Z(int n, GegenParam p, double t) {
  require_degree(n, "gegenbauer_Z");
  const double lam = p.lambda();
  detail::require(lam >= 0.0, "gegenbauer_Z", "requires lambda >= 0 (lambda = " + num(lam) + ")");
  if (n == 0) return 1.0;
  if (p.is_limit_zero()) {
    double tm1 = 1.0;
    double tk = t;
    for (int k = 1; k < n; ++k) {
      const double next = 2.0 * t * tk - tm1;
      tm1 = tk;
      tk = next;
    }
    return 2.0 * tk;
  }
  return (n + lam) / lam * gegenbauer_C(n, p, t);
}

double gegenbauer_Z_series(std::span<const double> coeffs, GegenParam p, double t) {
  const Ext lam = p.lambda();
  detail::require(lam >= 0.0L, "gegenbauer_Z_series",
                  "requires lambda >= 0 (lambda = " + num(p.lambda()) + ")");
  if (coeffs.empty()) return 0.0;
  const int n = static_cast<int>(coeffs.size()) - 1;
  Ext acc = coeffs[0];
  if (n == 0) return static_cast<double>(acc);
  Ext prev = 1.0L;
  Ext cur = p.is_limit_zero() ? Ext(t) : 2.0L * lam * t;
  for (int k = 1;; ++k) {
    const Ext zk = p.is_limit_zero() ? 2.0L * cur : (k + lam) / lam * cur;
    acc += coeffs[k] * zk;
    if (k == n) break;
    const Ext next = p.is_limit_zero()
                         ? 2.0L * t * cur - prev
                         : (2.0L * (k + lam) * t * cur - (k + 2.0L * lam - 1.0L) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
  }
  return static_cast<double>(acc);
}

// Jacobi ----------------------------------------------------------------------

std::vector<double> jacobi_P_sequence(int n, JacobiParam p, double t) {
  require_degree(n, "jacobi_P");
  const Ext a = p.alpha();
  const Ext b = p.beta();
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  v[0] = 1.0;
  Ext prev = 1.0L;
  Ext cur = (a + 1.0L) + 0.5L * (a + b + 2.0L) * (t - 1.0L);
  if (n >= 1) v[1] = static_cast<double>(cur);
  for (int k = 2; k <= n; ++k) {
    const Ext s = 2.0L * k + a + b;
    const Ext a1 = 2.0L * k * (k + a + b) * (s - 2.0L);
    const Ext a2 = (s - 1.0L) * (a * a - b * b);
    const Ext a3 = (s - 2.0L) * (s - 1.0L) * s;
    const Ext a4 = 2.0L * (k + a - 1.0L) * (k + b - 1.0L) * s;
    const Ext next = ((a2 + a3 * t) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
    v[k] = static_cast<double>(cur);
  }
  return v;
}

double jacobi_P(int n, JacobiParam p, double t) { return jacobi_P_sequence(n, p, t).back(); }

double jacobi_P_at_one(int n, JacobiParam p) {
  require_degree(n, "jacobi_P_at_one");
  SignedLog v = log_pochhammer(p.alpha() + 1.0, n);
  v.log_abs -= std::lgamma(n + 1.0);
  return v.value();
}

double jacobi_norm_squared(int n, JacobiParam p) {
  require_degree(n, "jacobi_norm_squared");
  return std::exp(log_jacobi_norm_squared(n, p.alpha(), p.beta()));
}

// Generalized Gegenbauer -------------------------------------------------------

double gen_gegenbauer_scale(int n, GenGegenParam p) {
  require_degree(n, "gen_gegenbauer_D");
  const double lam = p.lambda();
  const double mu = p.mu();
  if (n == 0) return 1.0;
  const int m = n / 2;
  // int_{-1}^1 D^2 |t|^{2mu}(1-t^2)^{lam-1/2} dt reduces, with s = t^2 and
  // u = 2s - 1, to a Jacobi norm divided by a power of two.
  double log_int = 0.0;
  if (n % 2 == 0) {
    log_int = log_jacobi_norm_squared(m, lam - 0.5, mu - 0.5) - (lam + mu) * std::numbers::ln2;
  } else {
    log_int = log_jacobi_norm_squared(m, lam - 0.5, mu + 0.5) - (lam + mu + 1.0) * std::numbers::ln2;
  }
  const double log_c = log_gamma(lam + mu + 1.0).log_abs - log_gamma(mu + 0.5).log_abs -
                       log_gamma(lam + 0.5).log_abs;
  return std::exp(-0.5 * (log_c + log_int));
}

double gen_gegenbauer_D(int n, GenGegenParam p, double t) {
  require_degree(n, "gen_gegenbauer_D");
  if (n == 0) return 1.0;
  const double lam = p.lambda();
  const double mu = p.mu();
  const int m = n / 2;
  const double u = 2.0 * t * t - 1.0;
  const double k = gen_gegenbauer_scale(n, p);
  if (n % 2 == 0) return k * jacobi_P(m, JacobiParam(lam - 0.5, mu - 0.5), u);
  return k * t * jacobi_P(m, JacobiParam(lam - 0.5, mu + 0.5), u);
}

// Constants -------------------------------------------------------------------

double c_lambda(double lambda) {
  detail::require(lambda > -0.5, "c_lambda", "requires lambda > -1/2 (lambda = " + num(lambda) + ")");
  return gamma_ratio({lambda + 1.0}, {0.5, lambda + 0.5});
}

double c_lambda_mu(double lambda, double mu) {
  detail::require(lambda > -0.5, "c_lambda_mu", "requires lambda > -1/2 (lambda = " + num(lambda) + ")");
  detail::require(mu > -0.5, "c_lambda_mu", "requires mu > -1/2 (mu = " + num(mu) + ")");
  return gamma_ratio({lambda + mu + 1.0}, {mu + 0.5, lambda + 0.5});
}

double sigma(double lambda, double mu) {
  // log_gamma rejects the poles of all three factors
  return gamma_ratio({lambda + mu}, {lambda, mu});
}

double sigma_multi(std::span<const double> a) {
  double total = 0.0;
  SignedLog den{0.0, 1};
  for (double ai : a) {
    detail::require(ai > 0.0, "sigma_multi", "requires all exponents > 0 (got " + num(ai) + ")");
    total += ai;
    den = den * log_gamma(ai);
  }
  return (log_gamma(total) / den).value();
}

double b_coeff(int k, int j, int n, double lambda, double mu) {
  detail::require(k >= 0 && j >= 0 && k + j <= n, "b_coeff", "requires 0 <= k, j and k + j <= n");
  detail::require(lambda > 0.5, "b_coeff",
                  "requires lambda > 1/2 so that Gamma(lambda - 1/2) is finite (lambda = " +
                      num(lambda) + ")");
  detail::require(mu > 0.5, "b_coeff",
                  "requires mu > 1/2 so that Gamma(mu - 1/2) is finite (mu = " + num(mu) + ")");
  const double g = gamma_ratio({mu - 0.5, lambda - 0.5, lambda + mu + k + j + 1.0},
                               {lambda + mu, k + mu - 0.5, j + lambda - 0.5});
  return g / (n + lambda + mu);
}

namespace {
void require_ball_indices(int j, int n, double lambda, double mu, int d, const char* where) {
  detail::require(n >= 0 && j >= 0 && 2 * j <= n, where, "requires 0 <= j <= n/2");
  detail::require(d >= 2, where, "requires dimension d >= 2");
  detail::require(lambda >= 0.0, where, "requires lambda >= 0 (lambda = " + num(lambda) + ")");
  detail::require(mu >= 0.0, where, "requires mu >= 0 (mu = " + num(mu) + ")");
}
}  // namespace

double B_coeff(int j, int n, double lambda, double mu, int d) {
  require_ball_indices(j, n, lambda, mu, d, "B_coeff");
  const double hd = 0.5 * d;
  const double g = gamma_ratio(
      {n - 2.0 * j + lambda + mu + hd + 0.5, j + mu + 0.5, n - j + lambda + hd},
      {mu + 0.5, n - 2.0 * j + lambda + hd, n - j + lambda + mu + hd - 0.5, j + 1.0});
  return g / (n + lambda + mu + hd - 0.5);
}

double H_coeff(int j, int n, double lambda, double mu, int d) {
  require_ball_indices(j, n, lambda, mu, d, "H_coeff");
  const double hd = 0.5 * d;
  SignedLog v = log_pochhammer(lambda + hd, n - j) * log_pochhammer(mu + 0.5, j) /
                log_pochhammer(lambda + mu + hd + 0.5, n - j);
  v.log_abs -= std::lgamma(j + 1.0);
  return v.value() * (n - j + lambda + mu + hd - 0.5) / (n + lambda + mu + hd - 0.5);
}

std::uint64_t dim_Vn(int n, int d) {
  detail::require(n >= 0, "dim_Vn", "requires n >= 0");
  detail::require(d >= 1, "dim_Vn", "requires d >= 1");
  return binomial(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(n));
}

double constant(ConstantKind kind, const ConstantArgs& a) {
  switch (kind) {
    case ConstantKind::c_lambda:
      return c_lambda(a.lambda);
    case ConstantKind::c_lambda_mu:
      return c_lambda_mu(a.lambda, a.mu);
    case ConstantKind::sigma:
      return sigma(a.lambda, a.mu);
    case ConstantKind::c_mu:
      return c_lambda(a.mu);
    case ConstantKind::b_coeff:
      return b_coeff(a.k, a.j, a.n, a.lambda, a.mu);
    case ConstantKind::B_coeff:
      return B_coeff(a.j, a.n, a.lambda, a.mu, a.d);
    case ConstantKind::H_coeff:
      return H_coeff(a.j, a.n, a.lambda, a.mu, a.d);
    case ConstantKind::dim_Vn:
      return static_cast<double>(dim_Vn(a.n, a.d));
  }
  detail::fail("constant", "unknown constant kind");
}

}  // namespace orthokern
