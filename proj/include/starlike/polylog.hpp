#pragma once

namespace starlike {

/// Polylogarithm Li_v(x) = sum_{n>=1} x^n / n^v for real x in [0, 1].
///
/// Supported orders: v >= 2 on the closed interval, or v > 1 when x < 1.
/// The dilogarithm switches to the reflection
///   Li_2(x) + Li_2(1-x) = pi^2/6 - ln(x) ln(1-x)
/// above x = 1/2 so both branches converge at least like 2^-n. Other orders
/// use the expansion in mu = ln(x) around x = 1. Absolute error is below 1e-12.
///
/// Throws DomainError outside the supported range.
double li(double v, double x);

/// Li_2(x)/x, continuously extended by 1 at x = 0.
double li_ratio(double x);

/// Riemann zeta for real s != 1.
double zeta(double s);

/// Hurwitz zeta sum_{n>=0} (n+a)^-s for s > 1, a > 0, by Euler-Maclaurin.
double hurwitz_zeta(double s, double a);

namespace detail {

/// Dilogarithm on [0, 1] through the reflection identity alone (no direct
/// summation of the original argument). Exposed for consistency checks.
double dilog_reflected(double x);

} // namespace detail

} // namespace starlike
