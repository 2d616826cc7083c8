#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace orthokern {

/// Index of the Gegenbauer family C_n^lambda, orthogonal for
/// (1 - t^2)^(lambda - 1/2) on (-1, 1). Requires lambda > -1/2.
class GegenParam {
public:
  explicit GegenParam(double lambda);

  double lambda() const { return lambda_; }
  /// lambda == 0 exactly: only the kernel Z_n^0 (Chebyshev limit) is defined.
  bool is_limit_zero() const { return lambda_ == 0.0; }

private:
  double lambda_;
};

/// Jacobi exponents for (1 - t)^alpha (1 + t)^beta; both must exceed -1.
class JacobiParam {
public:
  JacobiParam(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

private:
  double alpha_;
  double beta_;
};

/// Parameters of the generalized Gegenbauer weight
/// |t|^(2 mu) (1 - t^2)^(lambda - 1/2); both must exceed -1/2.
class GenGegenParam {
public:
  GenGegenParam(double lambda, double mu);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }

private:
  double lambda_;
  double mu_;
};

// Gegenbauer ------------------------------------------------------------------

/// C_n^lambda(t) with C_n^lambda(1) = binom(n + 2 lambda - 1, n), by the
/// three-term recurrence. Rejects lambda == 0.
double gegenbauer_C(int n, GegenParam p, double t);

/// C_0^lambda(t), ..., C_n^lambda(t).
std::vector<double> gegenbauer_C_sequence(int n, GegenParam p, double t);

/// Closed-form endpoint value binom(n + 2 lambda - 1, n).
double gegenbauer_C_at_one(int n, GegenParam p);

/// Squared norm h_n^lambda = lambda / (n + lambda) C_n^lambda(1) under the
/// normalized weight c_lambda w_lambda.
double gegenbauer_h(int n, GegenParam p);

/// Z_n^lambda(t) = (n + lambda) / lambda C_n^lambda(t) for lambda >= 0; at
/// lambda == 0 the limit 2 T_n(t) (n >= 1) and 1 (n = 0).
double gegenbauer_Z(int n, GegenParam p, double t);

/// Z_0^lambda(t), ..., Z_n^lambda(t); same domain as gegenbauer_Z.
std::vector<double> gegenbauer_Z_sequence(int n, GegenParam p, double t);

/// Sum_k coeffs[k] Z_k^lambda(t) in one recurrence pass.
double gegenbauer_Z_series(std::span<const double> coeffs, GegenParam p, double t);

// Jacobi ----------------------------------------------------------------------

/// P_n^(alpha,beta)(t) with P_n(1) = binom(n + alpha, n).
double jacobi_P(int n, JacobiParam p, double t);
std::vector<double> jacobi_P_sequence(int n, JacobiParam p, double t);

/// Closed-form endpoint value binom(n + alpha, n).
double jacobi_P_at_one(int n, JacobiParam p);

/// Squared norm of P_n^(alpha,beta) against (1-t)^alpha (1+t)^beta on (-1,1).
double jacobi_norm_squared(int n, JacobiParam p);

// Generalized Gegenbauer -------------------------------------------------------

/// Orthonormal D_n^(lambda,mu) for c_{lambda,mu} |t|^(2mu) (1-t^2)^(lambda-1/2),
/// with positive leading coefficient.
///   D_{2m}   = k P_m^(lambda-1/2, mu-1/2)(2t^2 - 1)
///   D_{2m+1} = k t P_m^(lambda-1/2, mu+1/2)(2t^2 - 1)
double gen_gegenbauer_D(int n, GenGegenParam p, double t);

/// The factor k relating D_n to the Jacobi polynomial above.
double gen_gegenbauer_scale(int n, GenGegenParam p);

// Constants -------------------------------------------------------------------

/// 1 / int_{-1}^1 (1 - t^2)^(lambda - 1/2) dt
///   = Gamma(lambda + 1) / (Gamma(1/2) Gamma(lambda + 1/2)).
/// The same expression serves as c_mu in the index-shift identities.
double c_lambda(double lambda);

/// 1 / int_{-1}^1 |t|^(2 mu) (1 - t^2)^(lambda - 1/2) dt.
double c_lambda_mu(double lambda, double mu);

/// Gamma(lambda + mu) / (Gamma(lambda) Gamma(mu)).
double sigma(double lambda, double mu);

/// Gamma(sum a_i) / prod Gamma(a_i): the reciprocal of the multivariate beta
/// integral over the homogeneous simplex.
double sigma_multi(std::span<const double> a);

/// Coefficient b_{k,j,n}^{lambda,mu} of the addition formula. Defined here
/// for lambda, mu > 1/2 only (Gamma(lambda - 1/2), Gamma(mu - 1/2) appear).
double b_coeff(int k, int j, int n, double lambda, double mu);

/// B_{j,n}: squared ratio between the radial Jacobi factor of the ball basis
/// and the generalized Gegenbauer D_{2j}.
double B_coeff(int j, int n, double lambda, double mu, int d);

/// H_j^n: squared norm of the ball basis element P_{j,nu}^n.
double H_coeff(int j, int n, double lambda, double mu, int d);

/// dim V_n^d = binom(n + d - 1, n).
std::uint64_t dim_Vn(int n, int d);

enum class ConstantKind {
  c_lambda,
  c_lambda_mu,
  sigma,
  c_mu,  // c_lambda evaluated at mu
  b_coeff,
  B_coeff,
  H_coeff,
  dim_Vn,
};

struct ConstantArgs {
  double lambda = 0.0;
  double mu = 0.0;
  int k = 0;
  int j = 0;
  int n = 0;
  int d = 0;
};

/// Dispatches to the named constant. dim_Vn is returned as a double holding
/// an exact integer.
double constant(ConstantKind kind, const ConstantArgs& args);

}  // namespace orthokern
