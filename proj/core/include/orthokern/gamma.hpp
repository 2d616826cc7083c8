#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace orthokern {

/// A real number stored as sign * exp(log_abs). A zero value has sign 0.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  SignedLog operator*(const SignedLog& o) const {
    return {log_abs + o.log_abs, sign * o.sign};
  }
  SignedLog operator/(const SignedLog& o) const {
    return {log_abs - o.log_abs, sign * o.sign};
  }
};

/// log|Gamma(x)| together with the sign of Gamma(x). Throws DomainError at
/// the poles x = 0, -1, -2, ...
SignedLog log_gamma(double x);

/// Gamma(num[0]) * ... / (Gamma(den[0]) * ...), accumulated in log space.
double gamma_ratio(std::initializer_list<double> num,
                   std::initializer_list<double> den);

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1).
SignedLog log_pochhammer(double a, int n);
double pochhammer(double a, int n);

/// Generalized binomial coefficient binom(x + n, n) = (x+1)_n / n! for real x.
/// This is the Cesaro number A_n^x.
double cesaro_number(int n, double x);

/// binom(n, k) for nonnegative integers, exact while it fits in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// A_0^delta, ..., A_n^delta computed by the product recurrence
/// A_m = A_{m-1} (m + delta) / m. Valid for any real delta (delta = -1 gives
/// the unit impulse).
std::vector<double> cesaro_numbers(int n, double delta);

}  // namespace orthokern
