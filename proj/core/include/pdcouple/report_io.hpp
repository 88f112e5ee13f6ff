#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdcouple/harness.hpp"

namespace pdcouple {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(std::string_view text);

/// %.17g; "nan" and "inf"/"-inf" for non-finite values.
std::string format_double(double v);

/// Per-node rows, one block per report in input order.
void write_records_csv(std::ostream& os, std::span<const CaseReport> reports);

/// One row per report.
void write_summary_csv(std::ostream& os, std::span<const CaseReport> reports);

std::string to_json(std::span<const CaseReport> reports);
std::vector<CaseReport> reports_from_json(std::string_view text);

/// CSV: records go to `path` and summaries to `<stem>.summary.csv` beside it.
/// JSON: everything goes to `path`. Throws std::runtime_error on I/O failure.
void emit(std::span<const CaseReport> reports, OutputFormat format, const std::filesystem::path& path);

std::filesystem::path summary_path(const std::filesystem::path& records_path);

}  // namespace pdcouple
