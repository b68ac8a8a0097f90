#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starlike {

enum class Errc {
  ZeroConstantTerm,
  NotUnitConstantTerm,
  NonzeroConstantTerm,
  DomainError,
  InvalidParams,
  InvalidSeed,
  TruncationTooSmall,
  SupportViolation,
  WeightOutOfRange,
  BExcluded,
  DivergentSeries,
  HypothesisViolated,
  SharpnessFailure,
  SlowModeRequired,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (tests, the CLI) can dispatch on the kind rather than the message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace starlike
