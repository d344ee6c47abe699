#include "domgame/report.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>

#include "domgame/errors.hpp"

namespace domgame {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  return fields;
}

namespace {

void write_histogram(std::ostream& out, const char* name, const PairHistogram& h) {
  for (const auto& [key, count] : h) {
    out << "# histogram " << name << ' ' << key.first << ' ' << key.second << ' ' << count << '\n';
  }
}

}  // namespace

void write_report_summary(std::ostream& out, const ScanReport& report) {
  out << "# corpus: " << report.corpus << '\n';
  out << "# graphs: " << report.graphs << '\n';
  out << "# checks: " << report.checks_run() << '\n';
  for (const auto& [name, t] : report.totals) {
    out << "# check " << name << " passed=" << t.passed << " failed=" << t.failed << '\n';
  }
  for (const auto& issue : report.parse_errors) {
    out << "# parse-error line " << issue.line << ": " << issue.message << '\n';
  }
  write_histogram(out, "edge-gg", report.edge_pairs_gg);
  write_histogram(out, "edge-ggp", report.edge_pairs_ggp);
  write_histogram(out, "vertex-gg", report.vertex_pairs_gg);
  write_histogram(out, "vertex-ggp", report.vertex_pairs_ggp);
  out << "# result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
}

void write_report_csv(std::ostream& out, const ScanReport& report) {
  out << kReportHeader << '\n';
  const auto& rows = report.rows.empty() ? report.failures : report.rows;
  for (const auto& r : rows) {
    out << csv_field(r.graph6) << ',' << r.check << ',' << (r.pass ? "yes" : "no") << ',' << r.gg << ',' << r.ggp
        << ',' << r.gamma << ',' << csv_field(r.detail) << '\n';
  }
  write_report_summary(out, report);
}

std::vector<CheckResult> parse_report_rows(std::istream& in) {
  std::vector<CheckResult> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kReportHeader) throw ParseError("report: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw ParseError("report: expected 7 fields, got " + std::to_string(f.size()));
    CheckResult r;
    r.graph6 = f[0];
    r.check = f[1];
    if (f[2] != "yes" && f[2] != "no") throw ParseError("report: pass column must be yes/no");
    r.pass = f[2] == "yes";
    try {
      r.gg = std::stoi(f[3]);
      r.ggp = std::stoi(f[4]);
      r.gamma = std::stoi(f[5]);
    } catch (const std::exception&) {
      throw ParseError("report: non-numeric value column");
    }
    r.detail = f[6];
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_claims_csv(std::ostream& out, const std::vector<ClaimRow>& rows) {
  out << "family,k,quantity,claimed,computed,match,note\n";
  for (const auto& r : rows) {
    out << csv_field(r.family) << ',' << r.k << ',' << r.quantity << ',' << r.claimed << ',' << r.computed << ','
        << (r.match ? "yes" : "no") << ',' << csv_field(r.note) << '\n';
  }
}

void write_claims_table(std::ostream& out, const std::vector<ClaimRow>& rows) {
  std::size_t width = 6;
  for (const auto& r : rows) width = std::max(width, r.family.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "family" << std::setw(4) << "k" << std::setw(8)
      << "value" << std::setw(9) << "claimed" << std::setw(10) << "computed" << "match\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.family << std::setw(4)
        << (r.k < 0 ? std::string("-") : std::to_string(r.k)) << std::setw(8) << r.quantity << std::setw(9)
        << r.claimed << std::setw(10) << r.computed << (r.match ? "yes" : "NO");
    if (!r.note.empty()) out << "  (" << r.note << ')';
    out << '\n';
  }
}

}  // namespace domgame
