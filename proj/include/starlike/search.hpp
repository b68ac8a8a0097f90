#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "starlike/class_factory.hpp"

namespace starlike {

/// Deterministic splitmix64 stream; doubles are built from the top 53 bits so
/// draws are identical on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

enum class SeedFamily { ExpDamp, Polynomial };

std::string to_string(SeedFamily family);
/// "expdamp" or "poly"; throws DomainError otherwise.
SeedFamily parse_family(const std::string &text);

/// Random certified seed: ExpDamp over [0, 2 pi) x [0, 5], or a polynomial of
/// degree <= 4 on the simplex sum |p_i| <= 1.
SchwarzSeed random_seed(SeedFamily family, Rng &rng);

struct SearchOptions {
  std::size_t budget = 2000;
  std::uint64_t rng_seed = 1;
  /// 0 selects recommended_order(params).
  std::size_t order = 0;
};

struct SearchReport {
  double max_ratio = 0.0;
  SchwarzSeed argmax = seed::Identity{};
  std::size_t evaluations = 0;
  bool converged = false;
  std::size_t order = 0;
};

/// Maximizes sum (n+1)^t |d_n|^2 over the matching bound (t = 0 is the plain
/// Theorem A ratio) across one seed family: coarse grid (or random probes for
/// polynomials), then Nelder-Mead refinement with seeded restarts. The
/// result depends only on the inputs.
SearchReport adversarial_search(const ClassParams &params, double t,
                                SeedFamily family, const SearchOptions &options);

/// Ratio for one seed, as used by the search objective.
double seed_ratio(const ClassParams &params, double t, const SchwarzSeed &s,
                  std::size_t order);

} // namespace starlike
