#include "starlike/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starlike/error.hpp"

namespace starlike {

namespace {

// Leading coefficients produced by exact normalizations can be off by an ulp.
constexpr double kUnitTolerance = 1e-12;

void require_unit_constant(const Series &a, const char *op) {
  if (std::abs(a[0] - cplx{1.0, 0.0}) > kUnitTolerance)
    throw Error(Errc::NotUnitConstantTerm,
                std::string(op) + " requires a_0 == 1");
}

void require_zero_constant(const Series &a, const char *op) {
  if (a[0] != cplx{})
    throw Error(Errc::NonzeroConstantTerm,
                std::string(op) + " requires a_0 == 0");
}

} // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw Error(Errc::DomainError, "a series needs at least one coefficient");
}

Series Series::constant(cplx value, std::size_t order) {
  Series s(order);
  s[0] = value;
  return s;
}

Series Series::monomial(cplx value, std::size_t exponent, std::size_t order) {
  Series s(order);
  if (exponent <= order)
    s[exponent] = value;
  return s;
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order())
    throw Error(Errc::DomainError, "cannot extend a series past its order");
  return Series(std::vector<cplx>(coeffs_.begin(),
                                  coeffs_.begin() + static_cast<long>(order) + 1));
}

Series Series::scaled(cplx factor) const {
  Series out(*this);
  for (auto &c : out.coeffs_)
    c *= factor;
  return out;
}

double Series::max_abs() const noexcept {
  double m = 0.0;
  for (const auto &c : coeffs_)
    m = std::max(m, std::abs(c));
  return m;
}

Series add(const Series &a, const Series &b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i)
    out[i] = a[i] + b[i];
  return out;
}

Series sub(const Series &a, const Series &b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i)
    out[i] = a[i] - b[i];
  return out;
}

Series mul(const Series &a, const Series &b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx{})
      continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

Series div(const Series &a, const Series &b) {
  if (b[0] == cplx{})
    throw Error(Errc::ZeroConstantTerm, "division by a series with b_0 == 0");
  const std::size_t n = std::min(a.order(), b.order());
  const cplx inv = 1.0 / b[0];
  Series q(n);
  for (std::size_t i = 0; i <= n; ++i) {
    cplx acc = a[i];
    for (std::size_t j = 1; j <= i; ++j)
      acc -= b[j] * q[i - j];
    q[i] = acc * inv;
  }
  return q;
}

Series log_series(const Series &a) {
  require_unit_constant(a, "log_series");
  const std::size_t n = a.order();
  Series out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    cplx acc = static_cast<double>(i) * a[i];
    for (std::size_t k = 1; k < i; ++k)
      acc -= static_cast<double>(k) * out[k] * a[i - k];
    out[i] = acc / (static_cast<double>(i) * a[0]);
  }
  return out;
}

Series exp_series(const Series &a) {
  require_zero_constant(a, "exp_series");
  const std::size_t n = a.order();
  Series out(n);
  out[0] = 1.0;
  for (std::size_t i = 1; i <= n; ++i) {
    cplx acc{};
    for (std::size_t k = 1; k <= i; ++k)
      acc += static_cast<double>(k) * a[k] * out[i - k];
    out[i] = acc / static_cast<double>(i);
  }
  return out;
}

Series pow_complex(const Series &a, cplx p) {
  require_unit_constant(a, "pow_complex");
  if (p == cplx{})
    return Series::constant(1.0, a.order());
  return exp_series(log_series(a).scaled(p));
}

Series integrate_over_t(const Series &a) {
  require_zero_constant(a, "integrate_over_t");
  Series out(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i)
    out[i] = a[i] / static_cast<double>(i);
  return out;
}

Series z_derivative(const Series &a) {
  Series out(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i)
    out[i] = static_cast<double>(i) * a[i];
  return out;
}

Series compose_power(const Series &a, std::size_t m, std::size_t order) {
  if (m == 0)
    throw Error(Errc::DomainError, "compose_power requires m >= 1");
  const std::size_t known = m * (a.order() + 1) - 1;
  Series out(std::min(order, known));
  for (std::size_t i = 0; i * m <= out.order(); ++i)
    out[i * m] = a[i];
  return out;
}

double max_abs_diff(const Series &a, const Series &b) {
  const std::size_t n = std::min(a.order(), b.order());
  double m = 0.0;
  for (std::size_t i = 0; i <= n; ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

} // namespace starlike
