#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "starlike/class_factory.hpp"

namespace starlike {

/// outer(inner(z)) for an inner series with inner_0 == 0, by Horner's rule.
/// Used only to build subordinate pairs F = G o omega for the l2 check.
Series compose_schwarz(const Series &outer, const Series &inner);

/// F = G o v for a certified Schwarz seed v, to the order of G.
Series subordinate_of(const Series &superordinate, const SchwarzSeed &s);

struct RogosinskiResult {
  bool holds = false;
  /// min over K of sum_{n<=K} |c_n|^2 - sum_{n<=K} |b_n|^2
  double min_slack = 0.0;
  std::size_t tightest_k = 0;
};

inline constexpr double kRogosinskiTolerance = 1e-10;

/// Partial-sum l2 dominance of the coefficients (from exponent 1) of a
/// subordinate function by those of its superordinate, for K = 1..upto.
RogosinskiResult rogosinski_l2_check(const Series &subordinate,
                                     const Series &superordinate,
                                     std::size_t upto);

/// (k+1)^t / k^2 - (k+2)^t / (k+1)^2
double weight_factor(std::size_t k, double t);

/// First k <= k_max whose weight factor is not positive, if any.
std::optional<std::size_t> first_nonpositive_weight(double t, std::size_t k_max);

struct AbelResult {
  bool holds = false;
  /// C sum w_n y_n - sum w_n x_n with w_n = (n+1)^t / n^2
  double margin = 0.0;
  double weighted_x = 0.0;
  double weighted_y = 0.0;
  /// The same two sums rebuilt from partial sums with the weight factors.
  double telescoped_x = 0.0;
  double telescoped_y = 0.0;
};

/// Turns partial-sum dominance X_K <= C Y_K (K = 1..N) into dominance of the
/// (n+1)^t / n^2 weighted sums by summation by parts. x and y are indexed
/// from n = 1 (x[0] is x_1) and must have length >= n_terms.
///
/// Throws HypothesisViolated if some X_K > C Y_K, WeightOutOfRange if t > 2.
AbelResult abel_weight_transfer(std::span<const double> x,
                                std::span<const double> y, double C, double t,
                                std::size_t n_terms);

} // namespace starlike
