#include "orthokern/identities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthokern/error.hpp"
#include "orthokern/gamma.hpp"
#include "orthokern/quadrature.hpp"
#include "orthokern/specfun.hpp"

namespace orthokern {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

// Z_n^kappa for any kappa > -1/2, including the negative range that
// gegenbauer_Z leaves out.
double zonal(int n, double kappa, double t) {
  if (kappa >= 0.0) return gegenbauer_Z(n, GegenParam(kappa), t);
  return (n + kappa) / kappa * gegenbauer_C(n, GegenParam(kappa), t);
}

void require_order(int order, const char* where) {
  detail::require(order >= 1, where, "requires quadrature order >= 1");
}

void require_unit_interval(double v, const char* where, const char* name) {
  detail::require(v >= -1.0 && v <= 1.0, where,
                  std::string("requires ") + name + " in [-1, 1] (" + name + " = " + num(v) + ")");
}

}  // namespace

IdentityReport make_report(std::string identity, ParamMap params, double lhs, double rhs,
                           int order) {
  IdentityReport rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = std::fabs(lhs - rhs);
  rep.rel_err = rep.abs_err / std::max(1.0, std::fabs(lhs));
  rep.order = order;
  if (!std::isfinite(rep.abs_err)) {
    detail::fail(rep.identity, "non-finite residual (lhs = " + num(lhs) + ", rhs = " + num(rhs) + ")");
  }
  return rep;
}

LambdaVec::LambdaVec(std::vector<double> entries, Context context)
    : entries_(std::move(entries)), context_(context) {
  detail::require(entries_.size() >= 2, "LambdaVec", "requires d >= 2 entries");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double v = entries_[i];
    const std::string tag = "lambda_" + std::to_string(i + 1) + " = " + num(v);
    if (context_ == Context::simplex) {
      detail::require(std::isfinite(v) && v > 0.0, "LambdaVec", "requires lambda_i > 0 for all i (" + tag + ")");
    } else {
      detail::require(std::isfinite(v) && v > -0.5, "LambdaVec",
                      "requires lambda_i > -1/2 for all i (" + tag + ")");
    }
  }
}

double LambdaVec::sum() const {
  double s = 0.0;
  for (double v : entries_) s += v;
  return s;
}

int default_order(int n) { return std::max(30, 2 * n + 10); }

IdentityReport verify_main_identity(const LambdaVec& lv, std::span<const double> x, double r,
                                    int order) {
  const char* where = "verify_main_identity";
  detail::require(lv.context() == LambdaVec::Context::simplex, where,
                  "requires lambda_i > 0 for all i (simplex context)");
  const int d = lv.dim();
  detail::require(static_cast<int>(x.size()) == d, where, "x must have as many entries as lambda");
  detail::require(r >= 0.0, where, "requires r >= 0");
  require_order(order, where);
  for (int i = 0; i < d; ++i) {
    detail::require(r * std::fabs(x[i]) < 1.0, where,
                    "requires r |x_i| < 1 for all i (i = " + std::to_string(i + 1) + ")");
  }

  double lhs = 1.0;
  for (int i = 0; i < d; ++i) lhs *= std::pow(1.0 - r * x[i], -lv[i]);

  const double total = lv.sum();
  const SimplexRule rule = simplex_rule(d, lv.entries(), order);
  const double integral = integrate(rule, [&](std::span<const double> u) {
    double dot = 0.0;
    for (int i = 0; i < d; ++i) dot += x[i] * u[i];
    return std::pow(1.0 - r * dot, -total);
  });
  const double rhs = sigma_multi(lv.entries()) * integral;

  return make_report("eq:main",
                     {{"lambda", to_vec(lv.entries())}, {"x", to_vec(x)}, {"r", r}}, lhs, rhs,
                     order);
}

IdentityReport verify_poisson_product(double lambda, double mu, double s, double t, double r,
                                      int order) {
  const char* where = "verify_poisson_product";
  detail::require(lambda > 0.0, where, "requires lambda > 0");
  detail::require(mu > 0.0, where, "requires mu > 0");
  detail::require(r >= 0.0 && r < 1.0, where, "requires 0 <= r < 1 (r = " + num(r) + ")");
  require_unit_interval(s, where, "s");
  require_unit_interval(t, where, "t");
  require_order(order, where);

  const double lhs = std::pow(1.0 - 2.0 * r * s + r * r, -(lambda + 1.0)) *
                     std::pow(1.0 - 2.0 * r * t + r * r, -(mu + 1.0));
  // y^lambda pairs with s, as the d = 2 case of the main identity requires.
  const QuadRule1D rule = beta_rule(order, lambda + 1.0, mu + 1.0);
  const double integral = integrate(rule, [&](double y) {
    const double arg = y * s + (1.0 - y) * t;
    return std::pow(1.0 - 2.0 * r * arg + r * r, -(lambda + mu + 2.0));
  });
  const double rhs = c_lambda_mu(lambda + 0.5, mu + 0.5) * integral;
  return make_report("poisson-product",
                     {{"lambda", lambda}, {"mu", mu}, {"s", s}, {"t", t}, {"r", r}}, lhs, rhs,
                     order);
}

IdentityReport verify_gegen1(int n, double lambda, double mu, double x, int order) {
  const char* where = "verify_gegen1";
  detail::require(n >= 0, where, "requires n >= 0");
  detail::require(lambda > -0.5 && lambda != 0.0, where,
                  "requires lambda > -1/2 and lambda != 0 (lambda = " + num(lambda) + ")");
  detail::require(mu > 0.0, where, "requires mu > 0 (mu = " + num(mu) + ")");
  require_unit_interval(x, where, "x");
  require_order(order, where);

  const double lhs = gegenbauer_C(n, GegenParam(lambda), x);
  const GegenParam inner(lambda + mu);
  const QuadRule1D ys = gauss_jacobi(order, mu - 0.5, mu - 0.5);
  const double sig = sigma(lambda, mu);

  double rhs = 0.0;
  if (lambda > 0.0) {
    const QuadRule1D ss = beta_rule(order, lambda, mu);
    rhs = integrate(ys, [&](double y) {
      return integrate(ss, [&](double s) { return gegenbauer_C(n, inner, s * x + (1.0 - s) * y); });
    });
    rhs *= sig;
  } else {
    // s^(lambda-1) is not integrable here; use the continuation
    // sigma int (F(s) - F(0)) s^(lambda-1)(1-s)^(mu-1) ds + F(0).
    const QuadRule1D ss = beta_rule(order, lambda + 1.0, mu);
    rhs = integrate(ys, [&](double y) {
      const double f0 = gegenbauer_C(n, inner, y);
      const double reg = integrate(ss, [&](double s) {
        return (gegenbauer_C(n, inner, s * x + (1.0 - s) * y) - f0) / s;
      });
      return sig * reg + f0;
    });
  }
  rhs *= c_lambda(mu);
  return make_report("eq:Gegen-1", {{"n", std::int64_t{n}}, {"lambda", lambda}, {"mu", mu}, {"x", x}},
                     lhs, rhs, order);
}

IdentityReport verify_gegen2(int n, double lambda, double mu, double x, int order) {
  const char* where = "verify_gegen2";
  detail::require(n >= 0, where, "requires n >= 0");
  detail::require(lambda > -0.5, where, "requires lambda > -1/2 (lambda = " + num(lambda) + ")");
  detail::require(mu > 0.0, where, "requires mu > 0 (mu = " + num(mu) + ")");
  require_unit_interval(x, where, "x");
  require_order(order, where);

  const double lhs = zonal(n, lambda, x);
  const double kappa = lambda + mu;
  const QuadRule1D ys = gauss_jacobi(order, mu - 0.5, mu - 0.5);
  const QuadRule1D ss = beta_rule(order, lambda + 1.0, mu);
  const double integral = integrate(ys, [&](double y) {
    return integrate(ss, [&](double s) { return zonal(n, kappa, s * x + (1.0 - s) * y); });
  });
  const double rhs = c_lambda(mu) * sigma(lambda + 1.0, mu) * integral;
  return make_report("eq:Gegen-2", {{"n", std::int64_t{n}}, {"lambda", lambda}, {"mu", mu}, {"x", x}},
                     lhs, rhs, order);
}

IdentityReport verify_addition_formula(int n, double lambda, double mu, double theta,
                                       double phi, double t, double s) {
  const char* where = "verify_addition_formula";
  detail::require(n >= 0, where, "requires n >= 0");
  detail::require(lambda > 0.5, where, "requires lambda > 1/2 (b_{k,j,n} domain)");
  detail::require(mu > 0.5, where, "requires mu > 1/2 (b_{k,j,n} domain)");
  require_unit_interval(t, where, "t");
  require_unit_interval(s, where, "s");

  const double ct = std::cos(theta), cp = std::cos(phi);
  const double cc = ct * cp;
  const double sn = std::sin(theta) * std::sin(phi);
  const double lhs = gegenbauer_C(n, GegenParam(lambda + mu), cc * t + sn * s);

  const auto ck = gegenbauer_C_sequence(n, GegenParam(mu - 0.5), t);
  const auto cj = gegenbauer_C_sequence(n, GegenParam(lambda - 0.5), s);
  double rhs = 0.0;
  for (int m = 0; 2 * m <= n; ++m) {
    for (int k = 0; k <= n - 2 * m; ++k) {
      const int j = n - 2 * m - k;
      const GenGegenParam dp(lambda + j, mu + k);
      const double term = b_coeff(k, j, n, lambda, mu) * std::pow(cc, k) * std::pow(sn, j) *
                          gen_gegenbauer_D(2 * m, dp, ct) * gen_gegenbauer_D(2 * m, dp, cp) *
                          ck[k] * cj[j];
      rhs += term;
    }
  }
  return make_report("eq:addition",
                     {{"n", std::int64_t{n}},
                      {"lambda", lambda},
                      {"mu", mu},
                      {"theta", theta},
                      {"phi", phi},
                      {"t", t},
                      {"s", s}},
                     lhs, rhs, 0);
}

namespace {

// Bound on sum_{n>N} M_n r^n where M_{n+1}/M_n <= q for n > N.
double geometric_tail(double log_first, double ratio_sup, double r) {
  const double q = ratio_sup * r;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_first) / (1.0 - q);
}

}  // namespace

GeneratingReports verify_generating(double lambda, double r, double t, int N) {
  const char* where = "verify_generating";
  detail::require(lambda > 0.0, where, "requires lambda > 0");
  detail::require(r >= 0.0 && r < 1.0, where, "requires 0 <= r < 1 (r = " + num(r) + ")");
  detail::require(N >= 0, where, "requires N >= 0");
  require_unit_interval(t, where, "t");

  const GegenParam p(lambda);
  const auto c = gegenbauer_C_sequence(N, p, t);
  const auto z = gegenbauer_Z_sequence(N, p, t);
  double sum_c = 0.0, sum_z = 0.0, rn = 1.0;
  for (int n = 0; n <= N; ++n) {
    sum_c += c[n] * rn;
    sum_z += z[n] * rn;
    rn *= r;
  }
  const double base = 1.0 - 2.0 * r * t + r * r;
  const double gen_c = std::pow(base, -lambda);
  const double gen_z = (1.0 - r * r) * std::pow(base, -(lambda + 1.0));

  GeneratingReports out;
  const ParamMap params{{"lambda", lambda}, {"r", r}, {"t", t}, {"N", std::int64_t{N}}};
  ParamMap pc = params, pz = params;
  pc["series"] = std::string("C");
  pz["series"] = std::string("Z");
  out.gegenbauer = make_report("eq:generatingC", pc, gen_c, sum_c, 0);
  out.zonal = make_report("eq:generatingC", pz, gen_z, sum_z, 0);

  if (r == 0.0) return out;  // both tails vanish
  const int m = N + 1;
  const double log_rm = m * std::log(r);
  const double log_c1 = std::log(gegenbauer_C_at_one(m, p));
  const double ratio_c = std::max(1.0, (m + 2.0 * lambda) / (m + 1.0));
  out.gegenbauer_tail_bound = geometric_tail(log_c1 + log_rm, ratio_c, r);
  const double log_z1 = log_c1 + std::log((m + lambda) / lambda);
  const double ratio_z = ratio_c * (m + 1.0 + lambda) / (m + lambda);
  out.zonal_tail_bound = geometric_tail(log_z1 + log_rm, ratio_z, r);
  return out;
}

IdentityReport verify_product_formula(int n, double lambda, double x, double y, int order) {
  const char* where = "verify_product_formula";
  detail::require(n >= 0, where, "requires n >= 0");
  detail::require(lambda > 0.0, where, "requires lambda > 0 (lambda = " + num(lambda) + ")");
  require_unit_interval(x, where, "x");
  require_unit_interval(y, where, "y");
  require_order(order, where);

  const GegenParam p(lambda);
  const double lhs = gegenbauer_C(n, p, x) * gegenbauer_C(n, p, y) / gegenbauer_C_at_one(n, p);
  const double sx = std::sqrt((1.0 - x) * (1.0 + x));
  const double sy = std::sqrt((1.0 - y) * (1.0 + y));
  const QuadRule1D rule = gauss_jacobi(order, lambda - 1.0, lambda - 1.0);
  const double integral =
      integrate(rule, [&](double t) { return gegenbauer_C(n, p, x * y + sx * sy * t); });
  const double rhs = c_lambda(lambda - 0.5) * integral;
  return make_report("product-formula",
                     {{"n", std::int64_t{n}}, {"lambda", lambda}, {"x", x}, {"y", y}}, lhs, rhs,
                     order);
}

double divided_difference(std::span<const double> xs, const std::function<double(double)>& f) {
  const std::size_t d = xs.size();
  detail::require(d >= 1, "divided_difference", "requires at least one node");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      detail::require(xs[i] != xs[j], "divided_difference",
                      "requires pairwise distinct nodes (x = " + num(xs[i]) + " repeats)");
    }
  }
  std::vector<double> table(d);
  for (std::size_t i = 0; i < d; ++i) table[i] = f(xs[i]);
  for (std::size_t level = 1; level < d; ++level) {
    for (std::size_t i = 0; i + level < d; ++i) {
      table[i] = (table[i + 1] - table[i]) / (xs[i + level] - xs[i]);
    }
  }
  return table[0];
}

SmoothFunction SmoothFunction::parse(std::string_view spec) {
  const std::string name(spec);
  if (spec == "exp") {
    return {name, [](double t, int) { return std::exp(t); }};
  }
  if (spec == "sin" || spec == "cos") {
    const int shift = spec == "sin" ? 0 : 1;
    return {name, [shift](double t, int k) {
              switch ((k + shift) % 4) {
                case 0: return std::sin(t);
                case 1: return std::cos(t);
                case 2: return -std::sin(t);
                default: return -std::cos(t);
              }
            }};
  }
  if (spec.starts_with("pow:")) {
    int deg = -1;
    try {
      std::size_t used = 0;
      deg = std::stoi(std::string(spec.substr(4)), &used);
      if (used != spec.size() - 4) deg = -1;
    } catch (...) {
      deg = -1;
    }
    detail::require(deg >= 0, "SmoothFunction", "pow:K needs a nonnegative integer K");
    return {name, [deg](double t, int k) {
              if (k > deg) return 0.0;
              double c = 1.0;
              for (int i = 0; i < k; ++i) c *= deg - i;
              return c * std::pow(t, deg - k);
            }};
  }
  detail::fail("SmoothFunction", "unknown function '" + name + "' (expected exp, sin, cos, pow:K)");
}

IdentityReport verify_hermite_genocchi(std::span<const double> xs, const SmoothFunction& f,
                                       int order) {
  const char* where = "verify_hermite_genocchi";
  const int d = static_cast<int>(xs.size());
  detail::require(d >= 2, where, "requires at least two nodes");
  require_order(order, where);

  const double lhs = divided_difference(xs, [&](double t) { return f(t); });
  const std::vector<double> ones(d, 1.0);
  const SimplexRule rule = simplex_rule(d, ones, order);
  const double rhs = integrate(rule, [&](std::span<const double> u) {
    double dot = 0.0;
    for (int i = 0; i < d; ++i) dot += xs[i] * u[i];
    return f.derivative(dot, d - 1);
  });
  return make_report("eq:HG", {{"xs", to_vec(xs)}, {"f", f.name}}, lhs, rhs, order);
}

}  // namespace orthokern
