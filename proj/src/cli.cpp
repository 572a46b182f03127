#include "spectradom/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "format.hpp"
#include "spectradom/graph6.hpp"
#include "spectradom/harness.hpp"
#include "spectradom/structure.hpp"

namespace spectradom {

namespace {

using detail::fixed;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::optional<int> n;
  std::optional<int> gamma;
  std::string input;
  std::vector<std::string> graphs;  // analyze positionals
  std::string theorems = "all";
  std::string theorem;
  std::string format;
  bool lenient = false;
  bool fail_fast = false;
  bool timing = false;
  unsigned jobs = 0;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("SPECTRADOM_JOBS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SPECTRADOM_JOBS must be a positive integer, got '") + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ReportFormat parse_format(const std::string& text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "human") return ReportFormat::human;
  throw UsageError("unknown format '" + text + "' (json, csv, human)");
}

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  if (text == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto id = parse_theorem_id(item);
    if (!id) throw UsageError("unknown theorem id '" + item + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw UsageError("empty theorem list");
  return out;
}

TheoremId parse_single_theorem(const std::string& text) {
  const auto id = parse_theorem_id(text);
  if (!id) throw UsageError("unknown theorem id '" + text + "'");
  return *id;
}

IngestResult read_input(const std::string& path, bool lenient, std::istream& in, std::ostream& err) {
  IngestResult result = path == "-" ? ingest_graph6(in, lenient) : ingest_graph6(std::filesystem::path(path), lenient);
  for (const IngestIssue& issue : result.issues) err << "skipped line " << issue.line << ": " << issue.message << "\n";
  return result;
}

void require_single_source(const CliConfig& cfg) {
  if (cfg.n.has_value() == !cfg.input.empty()) throw UsageError("give exactly one of --n or --input");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

nlohmann::ordered_json analysis_json(const Graph& g, const GraphProfile& p, const std::vector<TheoremVerdict>& verdicts) {
  nlohmann::ordered_json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  j["gamma"] = p.domination.gamma;
  j["witness"] = p.domination.witness.to_vector();
  j["mu"] = p.spectrum.mu;
  j["q"] = p.spectrum.q;
  j["max_degree"] = p.spectrum.max_degree;
  j["avg_degree"] = p.spectrum.avg_degree;
  j["laplacian_spectrum"] = p.spectrum.laplacian_spectrum;
  j["signless_spectrum"] = p.spectrum.signless_spectrum;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    arr.push_back({{"theorem", to_string(v.theorem_id)},
                   {"bound", v.bound_value},
                   {"value", v.computed_value},
                   {"holds", v.bound_holds},
                   {"equality", v.equality},
                   {"recognizer", v.recognizer_accepts},
                   {"consistent", v.characterization_consistent},
                   {"detail", v.detail}});
  }
  j["verdicts"] = arr;
  return j;
}

std::string analysis_human(const Graph& g, const GraphProfile& p, const std::vector<TheoremVerdict>& verdicts) {
  std::ostringstream out;
  out << "graph " << emit_graph6(g) << "\n";
  out << "  n=" << g.order() << " edges=" << g.edge_count() << " connected=" << yes_no(is_connected(g))
      << " bipartite=" << yes_no(bipartition_of(g).has_value()) << "\n";
  out << "  gamma=" << p.domination.gamma << " witness=" << p.domination.witness.to_string() << "\n";
  out << "  mu=" << fixed(p.spectrum.mu) << " q=" << fixed(p.spectrum.q) << " max_degree=" << p.spectrum.max_degree
      << " avg_degree=" << fixed(p.spectrum.avg_degree) << "\n";
  for (const auto& v : verdicts) {
    char head[32];
    std::snprintf(head, sizeof head, "  %-14s", to_string(v.theorem_id));
    out << head << (v.bound_holds ? "holds" : "VIOLATED") << " equality=" << yes_no(v.equality)
        << " recognizer=" << yes_no(v.recognizer_accepts)
        << (v.characterization_consistent ? "" : " MISMATCH") << " | " << v.detail << "\n";
  }
  return out.str();
}

int do_analyze(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const ReportFormat format = parse_format(cfg.format.empty() ? "human" : cfg.format);
  if (cfg.graphs.empty() && cfg.input.empty()) throw UsageError("analyze needs a graph6 string, a file, or --input");

  std::vector<Graph> graphs;
  for (const std::string& item : cfg.graphs) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(item, ec)) {
      auto r = read_input(item, cfg.lenient, in, err);
      graphs.insert(graphs.end(), r.graphs.begin(), r.graphs.end());
    } else {
      graphs.push_back(parse_graph6(item));
    }
  }
  if (!cfg.input.empty()) {
    auto r = read_input(cfg.input, cfg.lenient, in, err);
    graphs.insert(graphs.end(), r.graphs.begin(), r.graphs.end());
  }

  bool clean = true;
  auto json_out = nlohmann::ordered_json::array();
  SuiteReport rows;
  for (const Graph& g : graphs) {
    const GraphProfile p = profile(g);
    std::vector<TheoremVerdict> verdicts;
    for (TheoremId id : kAllTheorems) {
      if (applicable(id, g, p)) verdicts.push_back(check(id, g, p));
    }
    for (const auto& v : verdicts) clean = clean && v.bound_holds && v.characterization_consistent;
    switch (format) {
      case ReportFormat::human: out << analysis_human(g, p, verdicts); break;
      case ReportFormat::json: json_out.push_back(analysis_json(g, p, verdicts)); break;
      case ReportFormat::csv:
        for (auto& v : verdicts) rows.rows.push_back({emit_graph6(g), v});
        break;
    }
  }
  if (format == ReportFormat::json) out << json_out.dump(2) << "\n";
  if (format == ReportFormat::csv) out << emit_report(rows, ReportFormat::csv);
  return clean ? kExitClean : kExitViolations;
}

int do_verify(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  require_single_source(cfg);
  const ReportFormat format = parse_format(cfg.format.empty() ? "json" : cfg.format);
  const std::vector<TheoremId> checks = parse_theorem_list(cfg.theorems);
  const unsigned jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();

  std::vector<Graph> graphs;
  std::string source;
  if (cfg.n) {
    if (*cfg.n < 1 || *cfg.n > kEnumerationMaxVertices) {
      throw UsageError("--n must be in 1..7; use --input for larger censuses");
    }
    graphs = enumerate_nonisomorphic(*cfg.n);
    source = "enumeration n=" + std::to_string(*cfg.n);
  } else {
    graphs = read_input(cfg.input, cfg.lenient, in, err).graphs;
    source = "graph6 " + (cfg.input == "-" ? std::string("stdin") : cfg.input);
  }

  const SuiteReport report = run_suite(source, graphs, checks, {jobs, cfg.fail_fast});
  out << emit_report(report, format, {cfg.timing});
  return report.clean() ? kExitClean : kExitViolations;
}

int do_census(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  require_single_source(cfg);
  if (!cfg.gamma) throw UsageError("census needs --gamma");
  if (cfg.theorem.empty()) throw UsageError("census needs --theorem");
  const TheoremId theorem = parse_single_theorem(cfg.theorem);
  const ReportFormat format = parse_format(cfg.format.empty() ? "json" : cfg.format);

  CensusReport report;
  if (cfg.n) {
    try {
      validate_census_request(*cfg.n, *cfg.gamma, theorem);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (*cfg.n > kEnumerationMaxVertices) throw UsageError("--n must be <= 7; use --input for larger censuses");
    report = extremal_census(*cfg.n, *cfg.gamma, theorem);
  } else {
    const auto graphs = read_input(cfg.input, cfg.lenient, in, err).graphs;
    if (graphs.empty()) throw UsageError("census input is empty");
    const int n = graphs.front().order();
    try {
      validate_census_request(n, *cfg.gamma, theorem);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    report = extremal_census(n, *cfg.gamma, theorem, graphs,
                             "graph6 " + (cfg.input == "-" ? std::string("stdin") : cfg.input));
  }
  out << emit_report(report, format);
  if (format != ReportFormat::human) err << (report.match() ? "MATCH" : "MISMATCH") << "\n";
  return report.match() ? kExitClean : kExitViolations;
}

int do_extremal(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.n || !cfg.gamma) throw UsageError("extremal needs --n and --gamma");
  if (cfg.theorem.empty()) throw UsageError("extremal needs --theorem");
  const TheoremId theorem = parse_single_theorem(cfg.theorem);
  std::vector<Graph> family;
  try {
    family = extremal_family(*cfg.n, *cfg.gamma, theorem);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const Graph& g : family) out << emit_graph6(g) << "\n";
  return kExitClean;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination number versus (signless) Laplacian spectral radius: analysis and exhaustive checks",
               "spectradom"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "Spectral summary, domination number and every applicable check");
  analyze->add_option("graphs", cfg.graphs, "graph6 strings or files of graph6 lines");
  analyze->add_option("--input", cfg.input, "graph6 file, '-' for stdin");
  analyze->add_option("--format", cfg.format, "human (default), json or csv");
  analyze->add_flag("--lenient", cfg.lenient, "skip malformed lines instead of failing");

  auto* verify = app.add_subcommand("verify", "Run checks over an enumerated or ingested census");
  verify->add_option("--n", cfg.n, "enumerate all graphs on N <= 7 vertices");
  verify->add_option("--input", cfg.input, "graph6 file, '-' for stdin");
  verify->add_option("--theorems", cfg.theorems, "comma-separated ids or 'all'");
  verify->add_option("--format", cfg.format, "json (default), csv or human");
  verify->add_flag("--lenient", cfg.lenient, "skip malformed lines instead of failing");
  verify->add_flag("--fail-fast", cfg.fail_fast, "stop at the first violating graph");
  verify->add_flag("--timing", cfg.timing, "include elapsed time in JSON output");
  verify->add_option("--jobs", cfg.jobs, "worker threads (default: SPECTRADOM_JOBS or all cores)");

  auto* census = app.add_subcommand("census", "Compare found and constructed equality families");
  census->add_option("--n", cfg.n, "enumerate all graphs on N <= 7 vertices");
  census->add_option("--input", cfg.input, "complete graph6 census of one order, '-' for stdin");
  census->add_option("--gamma", cfg.gamma, "domination number");
  census->add_option("--theorem", cfg.theorem, "T31 (L) or T41 (Q)");
  census->add_option("--format", cfg.format, "json (default), csv or human");
  census->add_flag("--lenient", cfg.lenient, "skip malformed lines instead of failing");

  auto* extremal = app.add_subcommand("extremal", "Print the constructed equality family as graph6");
  extremal->add_option("--n", cfg.n, "vertex count");
  extremal->add_option("--gamma", cfg.gamma, "domination number");
  extremal->add_option("--theorem", cfg.theorem, "T31 (L) or T41 (Q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return do_analyze(cfg, in, out, err);
    if (verify->parsed()) return do_verify(cfg, in, out, err);
    if (census->parsed()) return do_census(cfg, in, out, err);
    return do_extremal(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IngestError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericDisagreement& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolations;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace spectradom
