#pragma once

// Text and line-delimited JSON renderings of verification reports.

#include <optional>
#include <span>
#include <string>

#include "qseries/harness.hpp"

namespace qseries {

std::string to_json_line(const VerificationReport& report);
VerificationReport report_from_json_line(const std::string& line);

// Fixed-width table, one row per report, with a header.
std::string format_table(std::span<const VerificationReport> reports);

struct ReportSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::optional<std::string> first_failure;  // id of the first failing report
};

ReportSummary summarize(std::span<const VerificationReport> reports);
std::string to_string(const ReportSummary& summary);

}  // namespace qseries
