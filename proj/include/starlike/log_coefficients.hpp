#pragma once

#include <cstddef>
#include <vector>

#include "starlike/class_factory.hpp"

namespace starlike {

/// d_1..d_{N_d} where d_n is the coefficient attached to z^{n m} in
/// log(f(z)/z) = 2 sum d_n z^{n m}. The index is the abstract n, never the
/// raw exponent, so weights n^2 and (n+1)^t apply directly.
struct LogCoeffVector {
  std::vector<cplx> d; // d[0] holds d_1
  int m = 1;

  std::size_t n_terms() const noexcept { return d.size(); }
  cplx operator[](std::size_t n) const { return d.at(n - 1); }
};

/// Off-support coefficients of log(f/z) larger than this signal a pipeline bug.
inline constexpr double kSupportTolerance = 1e-12;

/// Throws SupportViolation if log(f/z) has mass off the multiples of m.
LogCoeffVector log_coefficients(const ClassMember &member);

/// Closed form for the extremal function:
/// (1/2)(-1)^{n-1} ((A-B)/(m B)) B^n / n for B != 0, A/(2m) at n = 1 for B = 0.
cplx extremal_log_coefficient(const ClassParams &params, int n);

double sum_sq(const LogCoeffVector &d);
double sum_n2(const LogCoeffVector &d);
/// sum (n+1)^t |d_n|^2; throws WeightOutOfRange for t > 2.
double sum_weighted(const LogCoeffVector &d, double t);

} // namespace starlike
