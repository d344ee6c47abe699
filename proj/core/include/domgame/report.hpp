#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "domgame/verifier.hpp"

namespace domgame {

/// Header row of the check table.
inline constexpr const char* kReportHeader = "graph6,check,pass,gg,ggp,gamma,detail";

/// Writes the check table (rows if kept, otherwise failures) followed by a
/// '#'-prefixed summary footer with totals, parse errors and histograms.
void write_report_csv(std::ostream& out, const ScanReport& report);

/// Writes only the '#'-prefixed summary block.
void write_report_summary(std::ostream& out, const ScanReport& report);

/// Reads back the table rows written by write_report_csv; footer lines are
/// skipped. Throws ParseError on malformed rows.
std::vector<CheckResult> parse_report_rows(std::istream& in);

/// "family,k,quantity,claimed,computed,match,note"
void write_claims_csv(std::ostream& out, const std::vector<ClaimRow>& rows);
/// Column-aligned human-readable form.
void write_claims_table(std::ostream& out, const std::vector<ClaimRow>& rows);

/// Quotes a CSV field when it contains separators or quotes.
std::string csv_field(const std::string& s);
/// Splits one CSV line, honoring double-quoted fields.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace domgame
