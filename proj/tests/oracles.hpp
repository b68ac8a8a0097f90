// Independent reference computations for the test suites. Nothing here calls
// into the library's recursions.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// C(p, n) = p (p-1) ... (p-n+1) / n! as a running product.
inline cplx binomial(cplx p, std::size_t n) {
  cplx c = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    c *= (p - double(i)) / double(i + 1);
  return c;
}

/// Coefficients of (1 + b w)^p up to `order`.
inline std::vector<cplx> binomial_series(double b, cplx p, std::size_t order) {
  std::vector<cplx> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n)
    out[n] = binomial(p, n) * std::pow(b, double(n));
  return out;
}

/// sum_{n=1}^{terms} x^n / n^v with compensated summation.
inline double direct_polylog(double v, double x, std::size_t terms) {
  // Running powers with compensated (Kahan) summation in long double.
  const long double lx = x, lv = v;
  long double power = 1.0L, sum = 0.0L, carry = 0.0L;
  for (std::size_t n = 1; n <= terms; ++n) {
    power *= lx;
    if (power < 1e-40L) // remaining terms are below double resolution
      break;
    const long double ln = static_cast<long double>(n);
    const long double denom = v == 2.0 ? ln * ln : std::pow(ln, lv);
    const long double y = power / denom - carry;
    const long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return static_cast<double>(sum);
}

/// sum 1/n^2 over n <= terms plus the integral-test tail estimate 1/(terms + 1/2),
/// whose error is below 1/(12 terms^3).
inline double basel_with_tail(std::size_t terms) {
  return direct_polylog(2.0, 1.0, terms) + 1.0 / (double(terms) + 0.5);
}

/// Mercator coefficients of log(1 + z): (-1)^{n+1}/n.
inline std::vector<double> mercator(std::size_t order) {
  std::vector<double> out(order + 1, 0.0);
  for (std::size_t n = 1; n <= order; ++n)
    out[n] = (n % 2 ? 1.0 : -1.0) / double(n);
  return out;
}

/// Taylor coefficients of an analytic function from samples on |z| = r.
template <class F>
std::vector<cplx> cauchy_coefficients(F &&f, std::size_t order, double r,
                                      std::size_t samples = 512) {
  std::vector<cplx> values(samples);
  for (std::size_t s = 0; s < samples; ++s)
    values[s] = f(std::polar(r, 2.0 * std::numbers::pi * double(s) / double(samples)));
  std::vector<cplx> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    cplx acc = 0.0;
    for (std::size_t s = 0; s < samples; ++s)
      acc += values[s] *
             std::polar(1.0, -2.0 * std::numbers::pi * double(n * s) / double(samples));
    out[n] = acc / double(samples) / std::pow(r, double(n));
  }
  return out;
}

} // namespace oracle
