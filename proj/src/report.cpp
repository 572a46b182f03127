#include <sstream>

#include <json.hpp>

#include "format.hpp"
#include "spectradom/harness.hpp"

namespace spectradom {

using detail::fixed;
using ordered_json = nlohmann::ordered_json;

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string suite_json(const SuiteReport& r, const ReportOptions& options) {
  ordered_json j;
  j["source_description"] = r.source_description;
  j["graphs_processed"] = r.graphs_processed;
  ordered_json by = ordered_json::object();
  for (TheoremId id : kAllTheorems) {
    auto it = r.verdicts_by_theorem.find(id);
    if (it == r.verdicts_by_theorem.end()) continue;
    const TheoremTally& t = it->second;
    by[to_string(id)] = {{"checked", t.checked},
                         {"bound_violations", t.bound_violations},
                         {"equality_cases", t.equality_cases},
                         {"characterization_mismatches", t.characterization_mismatches}};
  }
  j["verdicts_by_theorem"] = by;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"graph6", v.graph6}, {"theorem", to_string(v.theorem)}, {"detail", v.detail}});
  }
  j["violations"] = violations;
  ordered_json cases = ordered_json::array();
  for (const EqualityCase& c : r.equality_cases) {
    cases.push_back({{"graph6", c.graph6}, {"theorem", to_string(c.theorem)}, {"n", c.n}, {"gamma", c.gamma}});
  }
  j["equality_cases"] = cases;
  j["clean"] = r.clean();
  if (options.include_timing) j["elapsed_seconds"] = r.elapsed.count();
  return j.dump(2) + "\n";
}

std::string suite_csv(const SuiteReport& r) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const VerdictRow& row : r.rows) {
    const TheoremVerdict& v = row.verdict;
    out += csv_field(row.graph6) + "," + to_string(v.theorem_id) + "," + std::to_string(v.n) + "," +
           std::to_string(v.gamma) + "," + fixed(v.bound_value) + "," + fixed(v.computed_value) + "," +
           yes_no(v.bound_holds) + "," + yes_no(v.equality) + "," + yes_no(v.recognizer_accepts) + "," +
           yes_no(v.characterization_consistent) + "\n";
  }
  return out;
}

std::string suite_human(const SuiteReport& r) {
  std::ostringstream out;
  out << "source: " << r.source_description << "\n";
  out << "graphs processed: " << r.graphs_processed << "\n";
  out << "theorem          checked  violations  equality  mismatches\n";
  for (TheoremId id : kAllTheorems) {
    auto it = r.verdicts_by_theorem.find(id);
    if (it == r.verdicts_by_theorem.end()) continue;
    char line[128];
    std::snprintf(line, sizeof line, "%-15s %8zu %11zu %9zu %11zu\n", to_string(id), it->second.checked,
                  it->second.bound_violations, it->second.equality_cases, it->second.characterization_mismatches);
    out << line;
  }
  for (const Violation& v : r.violations) out << "VIOLATION " << to_string(v.theorem) << " " << v.graph6 << ": " << v.detail << "\n";
  out << (r.clean() ? "CLEAN" : "VIOLATIONS FOUND") << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const SuiteReport& report, ReportFormat format, const ReportOptions& options) {
  switch (format) {
    case ReportFormat::json: return suite_json(report, options);
    case ReportFormat::csv: return suite_csv(report);
    case ReportFormat::human: return suite_human(report);
  }
  return {};
}

std::string emit_report(const CensusReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      ordered_json j;
      j["n"] = report.n;
      j["gamma"] = report.gamma;
      j["theorem"] = to_string(report.theorem);
      j["source_description"] = report.source_description;
      j["found_extremal"] = report.found_extremal;
      j["constructed_extremal"] = report.constructed_extremal;
      j["match"] = report.match();
      return j.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::string out = "list,graph6\n";
      for (const auto& s : report.found_extremal) out += "found," + csv_field(s) + "\n";
      for (const auto& s : report.constructed_extremal) out += "constructed," + csv_field(s) + "\n";
      return out;
    }
    case ReportFormat::human: {
      std::ostringstream out;
      out << to_string(report.theorem) << " census n=" << report.n << " gamma=" << report.gamma << " ("
          << report.source_description << ")\n";
      out << "found (" << report.found_extremal.size() << "):\n";
      for (const auto& s : report.found_extremal) out << "  " << s << "\n";
      out << "constructed (" << report.constructed_extremal.size() << "):\n";
      for (const auto& s : report.constructed_extremal) out << "  " << s << "\n";
      out << (report.match() ? "MATCH" : "MISMATCH") << "\n";
      return out.str();
    }
  }
  return {};
}

}  // namespace spectradom
