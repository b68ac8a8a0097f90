#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace starlike {

using cplx = std::complex<double>;

/// Taylor coefficients c_0..c_N of an analytic function at the origin,
/// truncated at an explicit order N. Binary operations yield the smaller of
/// the two operand orders; nothing is ever zero-padded past a known order.
class Series {
public:
  /// Zero series of the given order.
  explicit Series(std::size_t order);
  /// Takes ownership of c_0..c_N; the vector must be non-empty.
  explicit Series(std::vector<cplx> coeffs);

  static Series constant(cplx value, std::size_t order);
  static Series monomial(cplx value, std::size_t exponent, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  cplx operator[](std::size_t i) const { return coeffs_[i]; }
  cplx &operator[](std::size_t i) { return coeffs_[i]; }

  /// Drops coefficients above `order`; `order` may not exceed the current one.
  Series truncated(std::size_t order) const;
  Series scaled(cplx factor) const;

  /// Largest coefficient modulus, used for coefficientwise comparisons.
  double max_abs() const noexcept;

private:
  std::vector<cplx> coeffs_;
};

Series add(const Series &a, const Series &b);
Series sub(const Series &a, const Series &b);
Series mul(const Series &a, const Series &b);

/// Quotient a/b. Throws ZeroConstantTerm when b_0 == 0.
Series div(const Series &a, const Series &b);

/// Principal logarithm of a series with a_0 == 1, via n L_n = n a_n - sum k L_k a_{n-k}.
Series log_series(const Series &a);

/// exp of a series with a_0 == 0, via n E_n = sum k a_k E_{n-k}.
Series exp_series(const Series &a);

/// a^p = exp(p log a) on the principal branch; a_0 must be 1.
Series pow_complex(const Series &a, cplx p);

/// integral from 0 to z of a(t)/t dt; a_0 must vanish.
Series integrate_over_t(const Series &a);

/// z a'(z): coefficient n is multiplied by n.
Series z_derivative(const Series &a);

/// b(z) = a(z^m) truncated at `order`. The result order is capped at
/// m*(a.order()+1)-1, the last exponent whose coefficient is known.
Series compose_power(const Series &a, std::size_t m, std::size_t order);

/// Coefficientwise maximum of |a_i - b_i| over the common order.
double max_abs_diff(const Series &a, const Series &b);

inline Series operator+(const Series &a, const Series &b) { return add(a, b); }
inline Series operator-(const Series &a, const Series &b) { return sub(a, b); }
inline Series operator*(const Series &a, const Series &b) { return mul(a, b); }
inline Series operator/(const Series &a, const Series &b) { return div(a, b); }
inline Series operator*(cplx s, const Series &a) { return a.scaled(s); }

} // namespace starlike
