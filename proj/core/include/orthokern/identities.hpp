#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace orthokern {

using ParamValue = std::variant<std::int64_t, double, std::vector<double>, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

/// Both sides of one identity, evaluated independently.
struct IdentityReport {
  std::string identity;  // tag such as "eq:main"
  ParamMap params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // abs_err / max(1, |lhs|)
  int order = 0;         // quadrature nodes per axis; 0 when no quadrature is used
};

IdentityReport make_report(std::string identity, ParamMap params, double lhs, double rhs,
                           int order);

/// Vector of per-coordinate indices. The context selects the constraint:
/// simplex exponents need every entry > 0, cube weights need > -1/2.
class LambdaVec {
public:
  enum class Context { simplex, cube };

  LambdaVec(std::vector<double> entries, Context context);

  std::span<const double> entries() const { return entries_; }
  int dim() const { return static_cast<int>(entries_.size()); }
  double sum() const;
  Context context() const { return context_; }
  double operator[](std::size_t i) const { return entries_[i]; }

private:
  std::vector<double> entries_;
  Context context_;
};

/// Default quadrature order for degree-n integrands.
int default_order(int n);

/// prod (1 - r x_i)^(-lambda_i) against the simplex integral
/// Gamma(|lambda|) / prod Gamma(lambda_i) int (1 - r <x,u>)^(-|lambda|) prod u_i^(lambda_i - 1) du.
IdentityReport verify_main_identity(const LambdaVec& lv, std::span<const double> x, double r,
                                    int order);

/// Two-factor Poisson kernel product against its one-dimensional integral.
IdentityReport verify_poisson_product(double lambda, double mu, double s, double t, double r,
                                      int order);

/// C_n^lambda(x) against the double integral of C_n^(lambda+mu). For
/// -1/2 < lambda < 0 the s-integral is taken in its analytically continued
/// (subtracted) form.
IdentityReport verify_gegen1(int n, double lambda, double mu, double x, int order);

/// Z_n^lambda(x) against the double integral of Z_n^(lambda+mu).
IdentityReport verify_gegen2(int n, double lambda, double mu, double x, int order);

/// Shifted Gegenbauer polynomial against the addition-formula double sum.
/// Needs lambda, mu > 1/2.
IdentityReport verify_addition_formula(int n, double lambda, double mu, double theta,
                                       double phi, double t, double s);

struct GeneratingReports {
  IdentityReport gegenbauer;  // (1 - 2rt + r^2)^(-lambda) vs sum C_n r^n
  IdentityReport zonal;       // (1 - r^2)(1 - 2rt + r^2)^(-lambda-1) vs sum Z_n r^n
  double gegenbauer_tail_bound = 0.0;
  double zonal_tail_bound = 0.0;
};

/// Truncated generating series at N terms, with rigorous bounds on the
/// omitted tails (|C_n(t)| <= C_n(1) for lambda > 0).
GeneratingReports verify_generating(double lambda, double r, double t, int N);

/// Product formula C_n(x) C_n(y) / C_n(1) against its t-integral.
IdentityReport verify_product_formula(int n, double lambda, double x, double y, int order);

/// Divided difference [x_1, ..., x_d] f by the recursive table. Nodes must be
/// pairwise distinct.
double divided_difference(std::span<const double> xs, const std::function<double(double)>& f);

/// A smooth test function given through all of its derivatives.
struct SmoothFunction {
  std::string name;
  std::function<double(double, int)> derivative;  // (t, k) -> f^(k)(t)

  double operator()(double t) const { return derivative(t, 0); }

  /// "exp", "sin", "cos" or "pow:K" (t^K).
  static SmoothFunction parse(std::string_view spec);
};

/// [x_1..x_d] f against int_{T^d} f^(d-1)(<x, t>) dt.
IdentityReport verify_hermite_genocchi(std::span<const double> xs, const SmoothFunction& f,
                                       int order);

}  // namespace orthokern
