#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "starlike/series.hpp"

namespace starlike {

/// Parameters (j, k, A, B) of the Janowski class ST_[j,k](A,B), with the
/// derived exponent step m = j + k - 1.
class ClassParams {
public:
  /// Throws InvalidParams unless -1 <= B <= 0, A != B, m >= 1, and
  /// 0 <= j <= k-1 or (j, k) == (1, 1).
  static ClassParams make(int j, int k, cplx A, double B);

  int j() const noexcept { return j_; }
  int k() const noexcept { return k_; }
  cplx A() const noexcept { return A_; }
  double B() const noexcept { return B_; }
  int m() const noexcept { return j_ + k_ - 1; }

  std::string describe() const;

  friend bool operator==(const ClassParams &, const ClassParams &) = default;

private:
  ClassParams(int j, int k, cplx A, double B) : j_(j), k_(k), A_(A), B_(B) {}

  int j_;
  int k_;
  cplx A_;
  double B_;
};

namespace seed {
struct Identity {};
struct Rotation {
  double theta;
};
/// v(w) = e^{i theta} w e^{c (w - 1)}, c >= 0.
struct ExpDamp {
  double theta;
  double c;
};
/// v(w) = sum_{i>=1} p_i w^i; coeffs[0] holds p_1. Certified by sum |p_i| <= 1.
struct Polynomial {
  std::vector<cplx> coeffs;
};
} // namespace seed

/// Schwarz function v with v(0) = 0 and |v(w)| <= |w| on the disk.
using SchwarzSeed =
    std::variant<seed::Identity, seed::Rotation, seed::ExpDamp, seed::Polynomial>;

/// Throws InvalidSeed if the variant's certificate does not hold.
void validate_seed(const SchwarzSeed &s);

/// Text form used in reports and on the command line:
/// identity | rotation:THETA | expdamp:THETA:C | poly:P1/P2/...
std::string describe(const SchwarzSeed &s);
SchwarzSeed parse_seed(const std::string &text);

/// v evaluated at a point of the disk.
cplx seed_value(const SchwarzSeed &s, cplx w);

/// Taylor coefficients of v up to `order`, constant term exactly 0.
Series seed_series(const SchwarzSeed &s, std::size_t order);

/// A member f of the class, truncated at order N.
///
/// The normalized quotient f/z is stored to the same order N so that the
/// logarithmic coefficients d_n with n*m <= N are all available.
struct ClassMember {
  ClassParams params;
  SchwarzSeed seed;
  std::size_t order;
  Series ratio; // f(z)/z, coefficients 0..N

  /// f itself: coefficients 0..N with f_0 = 0, f_1 = 1.
  Series series() const;
};

/// The extremal function K: z exp(A z^m / m) for B = 0 and
/// z (1 + B z^m)^{(A-B)/(m B)} otherwise.
ClassMember extremal_function(const ClassParams &params, std::size_t order);

/// Member whose z f'/f - 1 equals (A-B) V / (1 + B V) with V(z) = v(z^m).
ClassMember member_from_seed(const ClassParams &params, const SchwarzSeed &s,
                             std::size_t order);

/// Q = z / K: e^{-A z^m / m} for B = 0, (1 + B z^m)^{-(A-B)/(m B)} otherwise.
Series q_function(const ClassParams &params, std::size_t order);

/// The composed witness term (A-B) V / (1 + B V) for a seed, to `order`.
Series subordinate_term(const ClassParams &params, const SchwarzSeed &s,
                        std::size_t order);

} // namespace starlike
