#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "starlike/bounds.hpp"

namespace starlike {

/// One line of a verification report: a single inequality or sharpness check.
struct ReportRow {
  std::string theorem;
  std::string check; // "bound" or "sharpness"
  int j = 0;
  int k = 0;
  cplx A{};
  double B = 0.0;
  std::string seed;
  std::size_t order = 0;
  std::size_t n_terms = 0;
  double partial_sum = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool pass = false;
  std::optional<double> tail_bound;
  double elapsed = 0.0;
  std::string note;
};

std::vector<ReportRow> to_rows(const VerificationReport &report);
ReportRow to_row(const SharpnessRow &row);

/// Orders rows by (params, seed, theorem, check) so output never depends on
/// evaluation order.
void sort_rows(std::vector<ReportRow> &rows);

struct ReportMeta {
  std::string command;
  /// Absent when timestamps are suppressed; elapsed fields are then zeroed.
  std::optional<std::string> timestamp;
};

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

/// Canonical format: {"schema", "command", "timestamp", "summary", "rows"}.
/// Floating-point values carry 17 significant digits.
void write_json(std::ostream &os, const ReportMeta &meta,
                const std::vector<ReportRow> &rows);
/// Same columns as the JSON rows, with A split into re/im.
void write_csv(std::ostream &os, const ReportMeta &meta,
               const std::vector<ReportRow> &rows);

inline constexpr const char *kReportSchema = "starlike.report/1";

} // namespace starlike
