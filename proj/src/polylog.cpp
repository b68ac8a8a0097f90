#include "starlike/polylog.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "starlike/error.hpp"

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,      1.0 / 42.0,
    -1.0 / 30.0,        5.0 / 66.0,       -691.0 / 2730.0,
    7.0 / 6.0,          -3617.0 / 510.0,  43867.0 / 798.0,
    -174611.0 / 330.0,  854513.0 / 138.0, -236364091.0 / 2730.0};

// Direct sum for x <= 1/2; terms shrink at least geometrically by x.
double li_direct(double v, double x) {
  double sum = 0.0;
  double xn = 1.0;
  for (int n = 1; n < 400; ++n) {
    xn *= x;
    const double term = xn / std::pow(static_cast<double>(n), v);
    sum += term;
    if (term < 1e-18 * sum)
      break;
  }
  return sum;
}

// Euler-Maclaurin for sum_{n>=0} (n+a)^-s, valid for s != 1 with s > -23.
double euler_maclaurin_zeta(double s, double a) {
  constexpr int kHead = 24;
  double sum = 0.0;
  for (int n = 0; n < kHead; ++n)
    sum += std::pow(n + a, -s);
  const double b = a + kHead;
  sum += std::pow(b, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(b, -s);
  // rising factorial s(s+1)...(s+2k-2) divided by (2k)!
  double coef = s / 2.0;
  double bpow = std::pow(b, -s - 1.0);
  for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
    const double term = kBernoulliEven[k - 1] * coef * bpow;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum))
      break;
    const double two_k = 2.0 * static_cast<double>(k);
    coef *= (s + two_k - 1.0) * (s + two_k) / ((two_k + 1.0) * (two_k + 2.0));
    bpow /= b * b;
  }
  return sum;
}

double harmonic(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i)
    h += 1.0 / i;
  return h;
}

// Expansion around x = 1 in mu = ln x, for 1/2 < x < 1 (|mu| < ln 2).
double li_near_one(double v, double x) {
  const double mu = std::log(x);
  const bool integer_order = v == std::floor(v);
  const int singular_k = integer_order ? static_cast<int>(v) - 1 : -1;

  double sum = 0.0;
  if (integer_order) {
    double fact = 1.0;
    for (int i = 2; i <= singular_k; ++i)
      fact *= i;
    sum += std::pow(mu, singular_k) / fact *
           (harmonic(singular_k) - std::log(-mu));
  } else {
    sum += std::tgamma(1.0 - v) * std::pow(-mu, v - 1.0);
  }

  double mu_k_over_fact = 1.0;
  for (int k = 0; k < 60; ++k) {
    if (k > 0)
      mu_k_over_fact *= mu / k;
    if (k == singular_k)
      continue;
    const double term = zeta(v - k) * mu_k_over_fact;
    sum += term;
    // zeta vanishes at negative even integers; those zeros are not convergence
    if (k > 2 && term != 0.0 && std::abs(term) < 1e-18)
      break;
  }
  return sum;
}

void check_domain(double v, double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw Error(Errc::DomainError,
                "polylog argument must lie in [0, 1], got " + std::to_string(x));
  const bool ok = v >= 2.0 || (v > 1.0 && x < 1.0);
  if (!ok)
    throw Error(Errc::DomainError,
                "unsupported polylog order " + std::to_string(v) +
                    " at x = " + std::to_string(x));
}

} // namespace

double detail::dilog_reflected(double x) {
  if (x == 0.0)
    return 0.0;
  if (x == 1.0)
    return kZeta2;
  return kZeta2 - std::log(x) * std::log1p(-x) - li_direct(2.0, 1.0 - x);
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0))
    throw Error(Errc::DomainError, "hurwitz_zeta requires s > 1 and a > 0");
  return euler_maclaurin_zeta(s, a);
}

double zeta(double s) {
  if (s == 1.0)
    throw Error(Errc::DomainError, "zeta has a pole at s = 1");
  if (s == 2.0)
    return kZeta2;
  if (s >= 0.0)
    return euler_maclaurin_zeta(s, 1.0);
  // functional equation maps s < 0 onto 1 - s > 1
  if (s == std::floor(s) && std::fmod(-s, 2.0) == 0.0)
    return 0.0;
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
         std::tgamma(1.0 - s) * zeta(1.0 - s);
}

double li(double v, double x) {
  check_domain(v, x);
  if (x == 0.0)
    return 0.0;
  if (v == 2.0) {
    if (x <= 0.5)
      return li_direct(2.0, x);
    return detail::dilog_reflected(x);
  }
  if (x == 1.0)
    return zeta(v);
  if (x <= 0.5)
    return li_direct(v, x);
  return li_near_one(v, x);
}

double li_ratio(double x) {
  if (x == 0.0)
    return 1.0;
  return li(2.0, x) / x;
}

} // namespace starlike
