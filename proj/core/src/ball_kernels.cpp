#include "orthokern/ball_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include <boost/math/tools/roots.hpp>

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

constexpr double kRadiusSlack = 1e-14;

struct PairGeometry {
  double norm_x = 0.0;
  double norm_y = 0.0;
  double dot = 0.0;
  double cap_x = 0.0;  // sqrt(1 - |x|^2)
  double cap_y = 0.0;
};

double checked_norm(std::span<const double> p, int d, const char* where, const char* name) {
  detail::require(static_cast<int>(p.size()) == d, where,
                  std::string(name) + " must have " + std::to_string(d) + " coordinates");
  double s = 0.0;
  for (double v : p) s += v * v;
  const double r = std::sqrt(s);
  detail::require(r <= 1.0 + kRadiusSlack, where,
                  std::string("requires ") + name + " in the closed unit ball (|" + name +
                      "| = " + num(r) + ")");
  return std::min(r, 1.0);
}

double cap(double r) { return std::sqrt((1.0 - r) * (1.0 + r)); }

PairGeometry geometry(const BallWeight& w, std::span<const double> x, std::span<const double> y,
                      const char* where) {
  PairGeometry g;
  g.norm_x = checked_norm(x, w.dim(), where, "x");
  g.norm_y = checked_norm(y, w.dim(), where, "y");
  for (int i = 0; i < w.dim(); ++i) g.dot += x[i] * y[i];
  g.cap_x = cap(g.norm_x);
  g.cap_y = cap(g.norm_y);
  return g;
}

double clamp_unit(double t) { return std::clamp(t, -1.0, 1.0); }

void require_order(int order, const char* where) {
  detail::require(order >= 1, where, "requires quadrature order >= 1");
}

struct MeanRules {
  QuadRule1D t, u, v;
};

MeanRules interior_rules(const BallWeight& w, int order) {
  return {gauss_jacobi(order, w.mu() - 1.0, w.mu() - 1.0),
          beta_rule(order, w.lambda(), 0.5 * w.dim()),
          gauss_jacobi(order, w.lambda() - 0.5, w.lambda() - 0.5)};
}

// Normalized integral of f(zeta) for every regime.
template <class F>
double ball_mean(F&& f, const BallWeight& w, const PairGeometry& g, int order) {
  const double radial = g.norm_x * g.norm_y;
  const double cross = g.cap_x * g.cap_y;
  switch (w.regime()) {
    case BallWeight::Regime::both_zero:
      return 0.5 * (f(clamp_unit(g.dot + cross)) + f(clamp_unit(g.dot - cross)));
    case BallWeight::Regime::lambda_zero: {
      const QuadRule1D t = gauss_jacobi(order, w.mu() - 1.0, w.mu() - 1.0);
      return c_lambda(w.mu() - 0.5) *
             integrate(t, [&](double tt) { return f(clamp_unit(g.dot + cross * tt)); });
    }
    case BallWeight::Regime::mu_zero: {
      const QuadRule1D u = beta_rule(order, w.lambda(), 0.5 * w.dim());
      const QuadRule1D v = gauss_jacobi(order, w.lambda() - 0.5, w.lambda() - 0.5);
      const double s = integrate(u, [&](double uu) {
        return integrate(v, [&](double vv) {
          const double base = radial * uu * vv + g.dot * (1.0 - uu);
          return 0.5 * (f(clamp_unit(base + cross)) + f(clamp_unit(base - cross)));
        });
      });
      return a_const(w) * s;
    }
    case BallWeight::Regime::interior:
      break;
  }
  const MeanRules r = interior_rules(w, order);
  const double s = integrate(r.u, [&](double uu) {
    return integrate(r.v, [&](double vv) {
      const double base = radial * uu * vv + g.dot * (1.0 - uu);
      return integrate(r.t, [&](double tt) { return f(clamp_unit(base + cross * tt)); });
    });
  });
  return a_const(w) * s;
}

double zonal_mean(std::span<const double> coeffs, const BallWeight& w, const PairGeometry& g,
                  int order) {
  const GegenParam kappa(w.kernel_index());
  return ball_mean([&](double t) { return gegenbauer_Z_series(coeffs, kappa, t); }, w, g,
                   order);
}

std::vector<double> unit_coeffs(int n) {
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  return c;
}

std::vector<double> cesaro_coeffs(const CesaroSpec& spec) {
  const auto a = cesaro_numbers(spec.n, spec.delta);
  std::vector<double> c(spec.n + 1);
  for (int k = 0; k <= spec.n; ++k) c[k] = a[spec.n - k] / a[spec.n];
  return c;
}

}  // namespace

BallWeight::BallWeight(int d, double lambda, double mu) : d_(d), lambda_(lambda), mu_(mu) {
  detail::require(d >= 2, "BallWeight", "requires d >= 2 (d = " + std::to_string(d) + ")");
  detail::require(std::isfinite(lambda) && lambda >= 0.0, "BallWeight",
                  "requires lambda >= 0 (lambda = " + num(lambda) + ")");
  detail::require(std::isfinite(mu) && mu >= 0.0, "BallWeight",
                  "requires mu >= 0 (mu = " + num(mu) + ")");
}

BallWeight::Regime BallWeight::regime() const {
  if (lambda_ == 0.0 && mu_ == 0.0) return Regime::both_zero;
  if (lambda_ == 0.0) return Regime::lambda_zero;
  if (mu_ == 0.0) return Regime::mu_zero;
  return Regime::interior;
}

double BallWeight::normalization() const {
  // |S^{d-1}| / 2 * B(lambda + d/2, mu + 1/2)
  const double half_d = 0.5 * d_;
  const double mass = std::pow(std::numbers::pi, half_d) *
                      gamma_ratio({lambda_ + half_d, mu_ + 0.5}, {half_d, lambda_ + mu_ + half_d + 0.5});
  return 1.0 / mass;
}

std::vector<BallKernelTerm> ball_kernel_terms(int n, const BallWeight& w) {
  detail::require(n >= 0, "ball_kernel_terms", "requires n >= 0");
  std::vector<BallKernelTerm> terms;
  for (int j = 0; 2 * j <= n; ++j) {
    const int m = n - 2 * j;
    BallKernelTerm t;
    t.j = j;
    t.coefficient = B_coeff(j, n, w.lambda(), w.mu(), w.dim()) /
                    H_coeff(j, n, w.lambda(), w.mu(), w.dim());
    t.d_lambda = m + w.radial_index();
    t.d_mu = w.mu();
    t.zonal_index = 0.5 * (w.dim() - 2);
    terms.push_back(t);
  }
  return terms;
}

int ball_default_order(int n) { return (n + 1) / 2 + 8; }

namespace {

// Coefficients and D-pair parameters of the direct kernel for one degree,
// computed once and reused across many point pairs.
class DirectKernel {
public:
  DirectKernel(int n, const BallWeight& w) : n_(n), d_(w.dim()), terms_(ball_kernel_terms(n, w)) {
    for (const BallKernelTerm& t : terms_) {
      const GenGegenParam p(t.d_lambda, t.d_mu);
      const JacobiParam jp(t.d_lambda - 0.5, t.d_mu - 0.5);
      pairs_.push_back({jp, gen_gegenbauer_scale(2 * t.j, p)});
    }
  }

  double operator()(const PairGeometry& g) const {
    const double radial = g.norm_x * g.norm_y;
    if (radial == 0.0) {
      if (n_ % 2 != 0) return 0.0;
      return terms_.back().coefficient * radial_factor(terms_.size() - 1, g.cap_x) *
             radial_factor(terms_.size() - 1, g.cap_y);
    }
    const double cosine = clamp_unit(g.dot / radial);
    const auto zonal = gegenbauer_Z_sequence(n_, GegenParam(0.5 * (d_ - 2)), cosine);
    double sum = 0.0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const int m = n_ - 2 * terms_[i].j;
      sum += terms_[i].coefficient * radial_factor(i, g.cap_x) * radial_factor(i, g.cap_y) *
             std::pow(radial, m) * zonal[m];
    }
    return sum;
  }

private:
  struct Pair {
    JacobiParam jacobi;
    double scale;
  };

  // D_{2j}(s) = scale P_j(2 s^2 - 1)
  double radial_factor(std::size_t i, double s) const {
    return pairs_[i].scale * jacobi_P(terms_[i].j, pairs_[i].jacobi, 2.0 * s * s - 1.0);
  }

  int n_;
  int d_;
  std::vector<BallKernelTerm> terms_;
  std::vector<Pair> pairs_;
};

}  // namespace

double kernel_ball_direct(int n, const BallWeight& w, std::span<const double> x,
                          std::span<const double> y) {
  const char* where = "kernel_ball_direct";
  detail::require(n >= 0, where, "requires n >= 0");
  const PairGeometry g = geometry(w, x, y, where);
  return DirectKernel(n, w)(g);
}

double kernel_ball_closed(int n, const BallWeight& w, std::span<const double> x,
                          std::span<const double> y, int order) {
  const char* where = "kernel_ball_closed";
  detail::require(n >= 0, where, "requires n >= 0");
  detail::require(w.regime() == BallWeight::Regime::interior, where,
                  "requires lambda > 0 and mu > 0 (use the limit forms otherwise)");
  require_order(order, where);
  const PairGeometry g = geometry(w, x, y, where);
  return zonal_mean(unit_coeffs(n), w, g, order);
}

double kernel_ball_closed_mu0(int n, const BallWeight& w, std::span<const double> x,
                              std::span<const double> y, int order) {
  const char* where = "kernel_ball_closed_mu0";
  detail::require(n >= 0, where, "requires n >= 0");
  detail::require(w.mu() == 0.0, where, "requires mu = 0 (mu = " + num(w.mu()) + ")");
  detail::require(w.lambda() > 0.0, where, "requires lambda > 0");
  require_order(order, where);
  const PairGeometry g = geometry(w, x, y, where);
  return zonal_mean(unit_coeffs(n), w, g, order);
}

double kernel_ball_closed_lambda0(int n, const BallWeight& w, std::span<const double> x,
                                  std::span<const double> y, int order) {
  const char* where = "kernel_ball_closed_lambda0";
  detail::require(n >= 0, where, "requires n >= 0");
  detail::require(w.lambda() == 0.0, where,
                  "requires lambda = 0 (lambda = " + num(w.lambda()) + ")");
  detail::require(w.mu() > 0.0, where, "requires mu > 0");
  require_order(order, where);
  const PairGeometry g = geometry(w, x, y, where);
  return zonal_mean(unit_coeffs(n), w, g, order);
}

double kernel_ball_integral(int n, const BallWeight& w, std::span<const double> x,
                            std::span<const double> y, int order) {
  const char* where = "kernel_ball_integral";
  detail::require(n >= 0, where, "requires n >= 0");
  require_order(order, where);
  const PairGeometry g = geometry(w, x, y, where);
  return zonal_mean(unit_coeffs(n), w, g, order);
}

double kernel_ball_at_zero(int n, const BallWeight& w, std::span<const double> x) {
  const char* where = "kernel_ball_at_zero";
  detail::require(n >= 0, where, "requires n >= 0");
  const double r = checked_norm(x, w.dim(), where, "x");
  if (n % 2 != 0) return 0.0;
  const GenGegenParam p(w.radial_index(), w.mu());
  return gen_gegenbauer_D(n, p, 1.0) * gen_gegenbauer_D(n, p, cap(r));
}

double a_const(const BallWeight& w, int order) {
  require_order(order, "a_const");
  using Key = std::tuple<int, double, double, int>;
  static std::mutex mutex;
  static std::map<Key, double> cache;
  const Key key{w.dim(), w.lambda(), w.mu(), order};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  double mass = 1.0;
  switch (w.regime()) {
    case BallWeight::Regime::both_zero:
      break;
    case BallWeight::Regime::lambda_zero:
      mass = gauss_jacobi(order, w.mu() - 1.0, w.mu() - 1.0).total_weight();
      break;
    case BallWeight::Regime::mu_zero:
      mass = beta_rule(order, w.lambda(), 0.5 * w.dim()).total_weight() *
             gauss_jacobi(order, w.lambda() - 0.5, w.lambda() - 0.5).total_weight();
      break;
    case BallWeight::Regime::interior: {
      const MeanRules r = interior_rules(w, order);
      mass = r.t.total_weight() * r.u.total_weight() * r.v.total_weight();
      break;
    }
  }
  const double value = 1.0 / mass;
  std::lock_guard lock(mutex);
  cache.emplace(key, value);
  return value;
}

double apply_Gx(const std::function<double(double)>& f, const BallWeight& w,
                std::span<const double> x, std::span<const double> y, int order) {
  const char* where = "apply_Gx";
  require_order(order, where);
  const PairGeometry g = geometry(w, x, y, where);
  return ball_mean(
      [&](double t) {
        const double v = f(t);
        detail::require(std::isfinite(v), where,
                        "f returned a non-finite value at t = " + num(t));
        return v;
      },
      w, g, order);
}

IdentityReport verify_Gx_integral(std::span<const double> g, const BallWeight& w,
                                  std::span<const double> x, int order) {
  const char* where = "verify_Gx_integral";
  detail::require(!g.empty(), where, "requires at least one polynomial coefficient");
  detail::require(w.dim() == 2 || w.dim() == 3, where,
                  "requires d in {2, 3} (d = " + std::to_string(w.dim()) + ")");
  require_order(order, where);
  checked_norm(x, w.dim(), where, "x");

  const int degree = static_cast<int>(g.size()) - 1;
  auto poly = [&](double t) {
    double acc = 0.0;
    for (int k = degree; k >= 0; --k) acc = acc * t + g[k];
    return acc;
  };

  const BallRule rule = ball_rule(w.dim(), w.lambda(), w.mu(), degree / 4 + 2);
  const double lhs = integrate(rule, [&](std::span<const double> y) {
    return ball_mean(poly, w, geometry(w, x, y, where), order);
  });

  const double kappa = w.kernel_index();
  const QuadRule1D line = gauss_jacobi(std::max(order, degree / 2 + 1), kappa - 0.5, kappa - 0.5);
  const double rhs = c_lambda(kappa) * integrate(line, poly);

  return make_report("eq:intGx",
                     {{"d", std::int64_t{w.dim()}},
                      {"lambda", w.lambda()},
                      {"mu", w.mu()},
                      {"x", std::vector<double>(x.begin(), x.end())},
                      {"g", std::vector<double>(g.begin(), g.end())}},
                     lhs, rhs, order);
}

double cesaro_kernel_ball(const CesaroSpec& spec, const BallWeight& w,
                          std::span<const double> x, std::span<const double> y, int order) {
  const char* where = "cesaro_kernel_ball";
  require_order(order, where);
  const PairGeometry g = geometry(w, x, y, where);
  return zonal_mean(cesaro_coeffs(spec), w, g, order);
}

namespace {

class DirectCesaro {
public:
  DirectCesaro(const CesaroSpec& spec, const BallWeight& w) : coeffs_(cesaro_coeffs(spec)) {
    for (int k = 0; k <= spec.n; ++k) kernels_.emplace_back(k, w);
  }

  double operator()(const PairGeometry& g) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < kernels_.size(); ++k) sum += coeffs_[k] * kernels_[k](g);
    return sum;
  }

private:
  std::vector<double> coeffs_;
  std::vector<DirectKernel> kernels_;
};

}  // namespace

double cesaro_kernel_ball_direct(const CesaroSpec& spec, const BallWeight& w,
                                 std::span<const double> x, std::span<const double> y) {
  const PairGeometry g = geometry(w, x, y, "cesaro_kernel_ball_direct");
  return DirectCesaro(spec, w)(g);
}

namespace {

// Radial profile of K_n^delta(W; 0, y) in rho = 1 - |y|^2:
//   p(rho) = sum_j coef_j P_j^(a-1/2, mu-1/2)(2 rho - 1), a = lambda + (d-1)/2.
struct OriginProfile {
  JacobiParam jacobi;
  std::vector<double> coef;

  double operator()(double rho) const {
    const int J = static_cast<int>(coef.size()) - 1;
    const auto p = jacobi_P_sequence(J, jacobi, 2.0 * rho - 1.0);
    double acc = 0.0;
    for (int j = 0; j <= J; ++j) acc += coef[j] * p[j];
    return acc;
  }
};

OriginProfile origin_profile(const CesaroSpec& spec, const BallWeight& w) {
  const double a = w.radial_index();
  const GenGegenParam dp(a, w.mu());
  const JacobiParam jp(a - 0.5, w.mu() - 0.5);
  const auto cn = cesaro_numbers(spec.n, spec.delta);
  OriginProfile prof{jp, {}};
  for (int j = 0; 2 * j <= spec.n; ++j) {
    const double k = gen_gegenbauer_scale(2 * j, dp);
    prof.coef.push_back(cn[spec.n - 2 * j] / cn[spec.n] * k * k * jacobi_P_at_one(j, jp));
  }
  return prof;
}

std::vector<double> profile_breakpoints(const OriginProfile& p) {
  const int J = static_cast<int>(p.coef.size()) - 1;
  std::vector<double> pts{0.0, 0.5, 1.0};
  if (J >= 1) {
    const int samples = 40 * (J + 1);
    std::vector<double> grid{0.0};
    for (int i = 0; i < samples; ++i) {
      grid.push_back(0.5 * (1.0 - std::cos(std::numbers::pi * (i + 0.5) / samples)));
    }
    grid.push_back(1.0);
    double prev = p(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double cur = p(grid[i]);
      if (prev == 0.0) {
        pts.push_back(grid[i - 1]);
      } else if ((prev < 0.0) != (cur < 0.0) && cur != 0.0) {
        std::uintmax_t iters = 200;
        const auto root = boost::math::tools::toms748_solve(
            [&](double r) { return p(r); }, grid[i - 1], grid[i], prev, cur,
            boost::math::tools::eps_tolerance<double>(52), iters);
        pts.push_back(0.5 * (root.first + root.second));
      }
      prev = cur;
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

double lebesgue_at_origin(const CesaroSpec& spec, const BallWeight& w) {
  const OriginProfile prof = origin_profile(spec, w);
  const int J = static_cast<int>(prof.coef.size()) - 1;
  const double ea = w.radial_index() - 0.5;  // exponent of (1 - rho)
  const double eb = w.mu() - 0.5;            // exponent of rho
  const int q = std::max(32, J + 16);
  const auto pts = profile_breakpoints(prof);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i], hi = pts[i + 1];
    const double len = hi - lo;
    if (len <= 0.0) continue;
    if (lo == 0.0) {
      const QuadRule1D r = beta_rule(q, eb + 1.0, 1.0);
      total += std::pow(len, eb + 1.0) * integrate(r, [&](double tau) {
                 const double rho = len * tau;
                 return std::fabs(prof(rho)) * std::pow(1.0 - rho, ea);
               });
    } else if (hi == 1.0) {
      const QuadRule1D r = beta_rule(q, ea + 1.0, 1.0);
      total += std::pow(len, ea + 1.0) * integrate(r, [&](double tau) {
                 const double rho = 1.0 - len * tau;
                 return std::fabs(prof(rho)) * std::pow(rho, eb);
               });
    } else {
      const QuadRule1D r = legendre_rule(q, lo, hi);
      total += integrate(r, [&](double rho) {
        return std::fabs(prof(rho)) * std::pow(rho, eb) * std::pow(1.0 - rho, ea);
      });
    }
  }
  return c_lambda_mu(w.radial_index(), w.mu()) * total;
}

double lebesgue_function(const CesaroSpec& spec, const BallWeight& w,
                         std::span<const double> x, int order, LebesgueMethod method) {
  const char* where = "lebesgue_function";
  detail::require(w.dim() == 2 || w.dim() == 3, where,
                  "requires d in {2, 3} (d = " + std::to_string(w.dim()) + ")");
  const double r = checked_norm(x, w.dim(), where, "x");
  if (method == LebesgueMethod::automatic) {
    method = r == 0.0 ? LebesgueMethod::origin_reduction : LebesgueMethod::ball_quadrature;
  }
  if (method == LebesgueMethod::origin_reduction) {
    detail::require(r == 0.0, where, "the origin reduction needs x = 0");
    return lebesgue_at_origin(spec, w);
  }
  if (order <= 0) order = std::max(64, 8 * spec.n);
  const int angular = w.dim() == 2 ? order : std::max(1, order / 2);
  const BallRule rule = ball_rule(w.dim(), w.lambda(), w.mu(), order, angular);
  const DirectCesaro kernel(spec, w);
  return integrate(rule, [&](std::span<const double> y) {
    return std::fabs(kernel(geometry(w, x, y, where)));
  });
}

std::vector<CriticalRow> critical_index_sweep(const BallWeight& w, std::span<const double> deltas,
                                              std::span<const int> degrees, unsigned threads) {
  const char* where = "critical_index_sweep";
  detail::require(w.dim() == 2 || w.dim() == 3, where,
                  "requires d in {2, 3} (d = " + std::to_string(w.dim()) + ")");
  std::vector<CriticalRow> rows;
  for (double delta : deltas) {
    for (int n : degrees) {
      CesaroSpec spec(n, delta);  // validates before any work starts
      rows.push_back({delta, n, 0.0, w.kernel_index()});
    }
  }
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    rows[i].lebesgue = lebesgue_at_origin(CesaroSpec(rows[i].n, rows[i].delta), w);
  });
  return rows;
}

}  // namespace orthokern
