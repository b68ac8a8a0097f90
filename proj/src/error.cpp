#include "starlike/error.hpp"

namespace starlike {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
  case Errc::NotUnitConstantTerm: return "NotUnitConstantTerm";
  case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
  case Errc::DomainError: return "DomainError";
  case Errc::InvalidParams: return "InvalidParams";
  case Errc::InvalidSeed: return "InvalidSeed";
  case Errc::TruncationTooSmall: return "TruncationTooSmall";
  case Errc::SupportViolation: return "SupportViolation";
  case Errc::WeightOutOfRange: return "WeightOutOfRange";
  case Errc::BExcluded: return "BExcluded";
  case Errc::DivergentSeries: return "DivergentSeries";
  case Errc::HypothesisViolated: return "HypothesisViolated";
  case Errc::SharpnessFailure: return "SharpnessFailure";
  case Errc::SlowModeRequired: return "SlowModeRequired";
  }
  return "Unknown";
}

} // namespace starlike
