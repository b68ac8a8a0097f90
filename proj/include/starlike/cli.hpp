#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "starlike/series.hpp"

namespace starlike::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kConfigError = 2,
  kIoError = 3,
};

/// Everything a sweep needs; built from flags, optionally layered over a flat
/// `key = value` config file whose keys are the flag names.
struct SweepConfig {
  std::vector<std::pair<int, int>> pairs;
  std::vector<cplx> A;
  std::vector<double> B;
  std::vector<double> t;
  std::size_t terms = 512;
  std::vector<std::string> seeds;
  double tol = 1e-9;
  double sharp_tol = 1e-8;
  std::uint64_t rng_seed = 1;
  std::string out;
  std::string format = "json";
  bool no_timestamp = false;
  bool slow = false;
  /// Test hook: added to d_1 of Identity-seed members before checking.
  cplx inject_d1{};
  std::string family = "expdamp";
  std::size_t budget = 2000;
};

/// The (j, k) pairs, A, B, t and seeds used when no flags are given.
SweepConfig default_config();

int cmd_verify(const SweepConfig &config, std::ostream &out, std::ostream &err);
int cmd_sharpness(const SweepConfig &config, std::ostream &out, std::ostream &err);
int cmd_search(const SweepConfig &config, std::ostream &out, std::ostream &err);
int cmd_polylog(double v, double x, std::ostream &out, std::ostream &err);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace starlike::cli
