#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "spectradom/canonical.hpp"
#include "spectradom/graph6.hpp"
#include "spectradom/harness.hpp"

using namespace spectradom;

namespace {

std::vector<std::string> canonical_strings(std::initializer_list<Graph> graphs) {
  std::vector<std::string> out;
  for (const Graph& g : graphs) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_nonisomorphic(n).size() == expected[n]);
  CHECK_THROWS_AS(enumerate_nonisomorphic(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_nonisomorphic(8), std::invalid_argument);
}

TEST_CASE("enumeration yields pairwise non-isomorphic canonical labelings") {
  const auto graphs = enumerate_nonisomorphic(5);
  std::set<std::string> oracle_forms;
  for (const Graph& g : graphs) {
    CHECK(canonical_form(g) == emit_graph6(g));
    oracle_forms.insert(oracle::min_triangle_string(g));
  }
  CHECK(oracle_forms.size() == graphs.size());
  CHECK(enumerate_nonisomorphic(5) == graphs);
}

TEST_CASE("ingestion") {
  std::istringstream two("C~\n@\n");
  const IngestResult r = ingest_graph6(two);
  REQUIRE(r.graphs.size() == 2);
  CHECK(r.graphs[0] == complete(4));
  CHECK(r.graphs[1] == empty_graph(1));

  std::istringstream none("");
  CHECK(ingest_graph6(none).graphs.empty());

  std::istringstream bad("Bx\nC~\n");
  try {
    ingest_graph6(bad);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(e.line() == 1);
  }

  std::istringstream mixed("C~\r\n\nBx\n@\n");
  const IngestResult lenient = ingest_graph6(mixed, true);
  CHECK(lenient.graphs.size() == 2);
  REQUIRE(lenient.issues.size() == 1);
  CHECK(lenient.issues[0].line == 3);

  const auto path = std::filesystem::temp_directory_path() / "spectradom_ingest_test.g6";
  {
    std::ofstream out(path);
    out << "Cl\n";
  }
  CHECK(ingest_graph6(path).graphs.at(0) == cycle(4));
  std::filesystem::remove(path);
  CHECK_THROWS(ingest_graph6(std::filesystem::path("/nonexistent/file.g6")));
}

TEST_CASE("run_suite on the 4-vertex census") {
  const auto graphs = enumerate_nonisomorphic(4);
  const TheoremId only[] = {TheoremId::T31};
  const SuiteReport r = run_suite("n=4", graphs, only);
  CHECK(r.graphs_processed == 11);
  CHECK(r.violations.empty());
  CHECK(r.clean());
  const std::string k22 = canonical_form(complete_bipartite(2, 2));
  bool seen = false;
  for (const EqualityCase& c : r.equality_cases) seen = seen || (c.graph6 == k22 && c.gamma == 2);
  CHECK(seen);
}

TEST_CASE("run_suite equality cases for the signless bound at n = 5") {
  const auto graphs = enumerate_nonisomorphic(5);
  const TheoremId only[] = {TheoremId::T41};
  const SuiteReport r = run_suite("n=5", graphs, only);
  CHECK(r.clean());
  std::vector<std::string> found;
  for (const EqualityCase& c : r.equality_cases) found.push_back(canonical_form(parse_graph6(c.graph6)));
  std::sort(found.begin(), found.end());
  std::vector<std::string> constructed;
  for (int gamma = 1; gamma <= 4; ++gamma) {
    for (const Graph& g : extremal_family(5, gamma, TheoremId::T41)) constructed.push_back(emit_graph6(g));
  }
  std::sort(constructed.begin(), constructed.end());
  CHECK(found == constructed);
  CHECK(std::find(found.begin(), found.end(), canonical_form(complete(5))) != found.end());
  CHECK(std::find(found.begin(), found.end(), canonical_form(add_isolated(complete(4), 1))) != found.end());
}

TEST_CASE("run_suite on an empty source") {
  const TheoremId only[] = {TheoremId::T31};
  const SuiteReport r = run_suite("empty", std::span<const Graph>{}, only);
  CHECK(r.graphs_processed == 0);
  CHECK(r.verdicts_by_theorem.at(TheoremId::T31) == TheoremTally{});
  CHECK(r.clean());
  CHECK_THROWS_AS(run_suite("empty", std::span<const Graph>{}, std::span<const TheoremId>{}), std::invalid_argument);
}

TEST_CASE("property: reports do not depend on order or worker count") {
  auto graphs = enumerate_nonisomorphic(6);
  const std::string base = emit_report(run_suite("s", graphs, kAllTheorems), ReportFormat::json);
  std::mt19937_64 rng(47);
  std::shuffle(graphs.begin(), graphs.end(), rng);
  for (unsigned jobs : {1U, 2U, 5U}) {
    const std::string json = emit_report(run_suite("s", graphs, kAllTheorems, {jobs, false}), ReportFormat::json);
    CHECK(json == base);
    const std::string csv = emit_report(run_suite("s", graphs, kAllTheorems, {jobs, false}), ReportFormat::csv);
    CHECK(csv == emit_report(run_suite("s", enumerate_nonisomorphic(6), kAllTheorems), ReportFormat::csv));
  }
}

TEST_CASE("fail-fast stops at the first dirty graph deterministically") {
  // No real graph violates a bound, so a clean run must process everything.
  const auto graphs = enumerate_nonisomorphic(5);
  const SuiteReport r = run_suite("n=5", graphs, kAllTheorems, {3, true});
  CHECK(r.graphs_processed == graphs.size());
}

TEST_CASE("census examples") {
  const CensusReport q42 = extremal_census(4, 2, TheoremId::T41);
  CHECK(q42.match());
  CHECK(q42.constructed_extremal == canonical_strings({add_isolated(complete(3), 1), cycle(4)}));

  const CensusReport l53 = extremal_census(5, 3, TheoremId::T31);
  CHECK(l53.match());
  CHECK(l53.constructed_extremal == canonical_strings({add_isolated(complete_bipartite(2, 2), 1)}));

  CHECK_THROWS_AS(extremal_census(4, 4, TheoremId::T31), std::invalid_argument);
  CHECK_THROWS_AS(extremal_census(4, 1, TheoremId::T31), std::invalid_argument);
  CHECK_THROWS_AS(extremal_census(4, 2, TheoremId::ORE), std::invalid_argument);
  CHECK_THROWS_AS(extremal_census(8, 2, TheoremId::T41), std::invalid_argument);

  const CensusReport q62 = extremal_census(6, 2, TheoremId::T41);
  CHECK(q62.match());
  CHECK(q62.constructed_extremal == canonical_strings({add_isolated(complete(5), 1), cocktail_party(3)}));
}

TEST_CASE("census over a supplied population") {
  const auto graphs = enumerate_nonisomorphic(5);
  CHECK(extremal_census(5, 2, TheoremId::T31, graphs, "given").match());
  const Graph mixed[] = {complete(5), complete(4)};
  CHECK_THROWS_AS(extremal_census(5, 2, TheoremId::T31, mixed, "given"), std::invalid_argument);
}

TEST_CASE("every census with n <= 6 matches") {
  for (int n = 2; n <= 6; ++n) {
    for (int gamma = 1; gamma <= n - 1; ++gamma) {
      CHECK(extremal_census(n, gamma, TheoremId::T41).match());
      if (gamma >= 2) CHECK(extremal_census(n, gamma, TheoremId::T31).match());
    }
  }
}

TEST_CASE("report schemas") {
  const auto graphs = enumerate_nonisomorphic(4);
  const TheoremId only[] = {TheoremId::T41};
  const SuiteReport r = run_suite("n=4", graphs, only);

  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::json));
  CHECK(j["verdicts_by_theorem"]["T41"]["bound_violations"] == 0);
  CHECK(j["graphs_processed"] == 11);
  CHECK(j["clean"] == true);
  CHECK_FALSE(j.contains("elapsed_seconds"));
  const auto timed = nlohmann::json::parse(emit_report(r, ReportFormat::json, {true}));
  CHECK(timed.contains("elapsed_seconds"));

  const std::string csv = emit_report(r, ReportFormat::csv);
  CHECK(csv.substr(0, csv.find('\n')) == "graph6,theorem,n,gamma,bound,value,holds,equality,recognizer,consistent");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);

  const auto c = nlohmann::json::parse(emit_report(extremal_census(4, 2, TheoremId::T41), ReportFormat::json));
  CHECK(c["found_extremal"].size() == 2);
  CHECK(c["constructed_extremal"] == c["found_extremal"]);
  CHECK(c["match"] == true);
}
