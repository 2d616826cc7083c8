#include "orthokern/gamma.hpp"

#include <math.h>

#include <limits>
#include <stdexcept>
#include <string>

#include "orthokern/error.hpp"

namespace orthokern {

SignedLog log_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    detail::fail("log_gamma", "pole of Gamma at x = " + std::to_string(x));
  }
  int sign = 1;
  // lgamma_r reports the sign without touching the global signgam.
  const double l = ::lgamma_r(x, &sign);
  return {l, sign};
}

double gamma_ratio(std::initializer_list<double> num,
                   std::initializer_list<double> den) {
  SignedLog acc{0.0, 1};
  for (double a : num) acc = acc * log_gamma(a);
  for (double b : den) acc = acc / log_gamma(b);
  return acc.value();
}

SignedLog log_pochhammer(double a, int n) {
  if (n < 0) detail::fail("pochhammer", "n must be nonnegative");
  SignedLog acc{0.0, 1};
  for (int k = 0; k < n; ++k) {
    const double f = a + k;
    if (f == 0.0) return {0.0, 0};
    acc.log_abs += std::log(std::fabs(f));
    if (f < 0.0) acc.sign = -acc.sign;
  }
  return acc;
}

double pochhammer(double a, int n) { return log_pochhammer(a, n).value(); }

double cesaro_number(int n, double x) {
  if (n < 0) detail::fail("cesaro_number", "n must be nonnegative");
  SignedLog acc{0.0, 1};
  for (int k = 1; k <= n; ++k) {
    const double f = (x + k) / k;
    if (f == 0.0) return 0.0;
    acc.log_abs += std::log(std::fabs(f));
    if (f < 0.0) acc.sign = -acc.sign;
  }
  return acc.value();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    r = r * num / i;
  }
  return r;
}

std::vector<double> cesaro_numbers(int n, double delta) {
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1.0;
  for (int m = 1; m <= n; ++m) a[m] = a[m - 1] * (m + delta) / m;
  return a;
}

}  // namespace orthokern
