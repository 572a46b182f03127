#ifndef SPECTRADOM_HARNESS_HPP
#define SPECTRADOM_HARNESS_HPP

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectradom/graph.hpp"
#include "spectradom/theorems.hpp"

namespace spectradom {

inline constexpr int kEnumerationMaxVertices = 7;

/// One representative per isomorphism class on n vertices, in increasing
/// order of the upper-triangle code: every labeled graph is generated and
/// kept iff it is its own canonical labeling. Requires 1 <= n <= 7.
void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_nonisomorphic(int n);

class IngestError : public std::runtime_error {
 public:
  IngestError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct IngestIssue {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<IngestIssue> issues;  // only populated in lenient mode
};

/// One graph6 string per line; blank lines are skipped. A malformed line
/// throws IngestError naming the 1-based line, unless `lenient`, in which case
/// it is recorded and skipped.
IngestResult ingest_graph6(std::istream& in, bool lenient = false);
IngestResult ingest_graph6(const std::filesystem::path& path, bool lenient = false);

struct TheoremTally {
  std::size_t checked = 0;
  std::size_t bound_violations = 0;
  std::size_t equality_cases = 0;
  std::size_t characterization_mismatches = 0;
  bool operator==(const TheoremTally&) const = default;
};

struct Violation {
  std::string graph6;
  TheoremId theorem;
  std::string detail;
};

struct EqualityCase {
  std::string graph6;
  TheoremId theorem;
  int n = 0;
  int gamma = 0;
};

struct VerdictRow {
  std::string graph6;
  TheoremVerdict verdict;
};

struct SuiteReport {
  std::string source_description;
  std::size_t graphs_processed = 0;
  std::map<TheoremId, TheoremTally> verdicts_by_theorem;
  std::vector<Violation> violations;        // bound failures and characterization mismatches
  std::vector<EqualityCase> equality_cases;
  std::vector<VerdictRow> rows;             // every verdict, for CSV output
  std::chrono::duration<double> elapsed{0};

  bool clean() const;
};

struct SuiteOptions {
  unsigned jobs = 1;
  /// Stop after the first graph (in source order) with a violation. The
  /// report then covers exactly the graphs up to and including it.
  bool fail_fast = false;
};

/// Runs every applicable checker from `checks` on every graph. Domination
/// number and spectra are computed once per graph. Results are merged in
/// source order and then sorted by canonical form, so the report does not
/// depend on `jobs`.
SuiteReport run_suite(const std::string& source_description, std::span<const Graph> graphs,
                      std::span<const TheoremId> checks, const SuiteOptions& options = {});

struct CensusReport {
  int n = 0;
  int gamma = 0;
  TheoremId theorem = TheoremId::T31;
  std::string source_description;
  std::vector<std::string> found_extremal;        // canonical graph6, sorted
  std::vector<std::string> constructed_extremal;  // canonical graph6, sorted

  bool match() const { return found_extremal == constructed_extremal; }
};

/// Throws std::invalid_argument unless theorem is T31 with 2 <= gamma <= n-1
/// or T41 with 1 <= gamma <= n-1, and n fits canonical labeling.
void validate_census_request(int n, int gamma, TheoremId theorem);

/// The equality family built from its description, canonically deduplicated
/// and sorted. T31: every member of B+ for K_{a, n-gamma+2-a},
/// 2 <= a <= (n-gamma+2)/2, with maximum degree <= n-gamma, plus gamma-2
/// isolated vertices. T41: the clique family and, when allowed, the cocktail
/// party family.
std::vector<Graph> extremal_family(int n, int gamma, TheoremId theorem);

/// Compares equality holders with domination number gamma among all graphs
/// on n <= 7 vertices against extremal_family.
CensusReport extremal_census(int n, int gamma, TheoremId theorem);

/// Same, with an external population (e.g. a complete census read from
/// graph6). Every graph must have order n.
CensusReport extremal_census(int n, int gamma, TheoremId theorem, std::span<const Graph> population,
                             const std::string& source_description);

enum class ReportFormat { json, csv, human };

struct ReportOptions {
  /// Adds elapsed time to JSON output; off by default so that reports are
  /// byte-identical across runs.
  bool include_timing = false;
};

std::string emit_report(const SuiteReport& report, ReportFormat format, const ReportOptions& options = {});
std::string emit_report(const CensusReport& report, ReportFormat format);

inline constexpr const char* kCsvHeader = "graph6,theorem,n,gamma,bound,value,holds,equality,recognizer,consistent";

}  // namespace spectradom

#endif
