#pragma once

// Serializable record of one command run. Every numeric cell is a decimal
// string produced once, so the JSON, CSV and text encodings carry identical
// digits and parsing a JSON report back is lossless.

#include <string>
#include <utility>
#include <vector>

namespace secz {

inline constexpr const char* kReportSchema = "secz-report/1";
inline constexpr const char* kVersion = "1.0.0";

struct Report {
  std::string command;
  /// Ordered key/value inputs: paths, counts, precision, cutoff.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> columns;
  /// One cell per column.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  /// Wall-clock seconds; excluded from body comparisons.
  double elapsed_seconds = 0.0;

  void add_row(std::vector<std::string> cells);
  /// Cell lookup by column name; throws std::out_of_range if absent.
  const std::string& cell(std::size_t row, const std::string& column) const;
};

std::string to_json(const Report& report, bool include_timing = true);
Report report_from_json(const std::string& text);
/// Header row then data rows; cells quoted only when they contain ',' or '"'.
std::string to_csv(const Report& report);
std::string to_text(const Report& report);

}  // namespace secz
