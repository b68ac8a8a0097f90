#pragma once

#include <string>

#include "starlike/series.hpp"

namespace starlike {

/// Parses "re", "imi", "re+imi" or "re-imi" (e.g. "0.8+0.3i", "-2i", "1e-3").
/// Throws DomainError on malformed text.
double parse_real(const std::string &text);
cplx parse_complex(const std::string &text);

/// 17 significant digits, round-trippable.
std::string format_real(double x);
/// Inverse of parse_complex at full precision.
std::string format_complex(cplx z);

} // namespace starlike
