#include "spectradom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "spectradom/canonical.hpp"
#include "spectradom/graph6.hpp"
#include "spectradom/structure.hpp"

namespace spectradom {

void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kEnumerationMaxVertices) {
    throw std::invalid_argument("built-in enumeration covers 1 <= n <= " +
                                std::to_string(kEnumerationMaxVertices) +
                                "; supply larger censuses as graph6 input");
  }
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Graph g = detail::graph_from_code(n, code);
    if (detail::is_canonical_labeling(g)) visit(g);
  }
}

std::vector<Graph> enumerate_nonisomorphic(int n) {
  std::vector<Graph> out;
  for_each_nonisomorphic(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

IngestResult ingest_graph6(std::istream& in, bool lenient) {
  IngestResult result;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      result.graphs.push_back(parse_graph6(line));
    } catch (const std::exception& e) {
      if (!lenient) throw IngestError(number, e.what());
      result.issues.push_back({number, e.what()});
    }
  }
  if (in.bad()) throw IngestError(number, "read failure");
  return result;
}

IngestResult ingest_graph6(const std::filesystem::path& path, bool lenient) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ingest_graph6(in, lenient);
}

bool SuiteReport::clean() const {
  for (const auto& [id, tally] : verdicts_by_theorem) {
    if (tally.bound_violations != 0 || tally.characterization_mismatches != 0) return false;
  }
  return true;
}

namespace {

struct GraphOutcome {
  std::string graph6;
  std::string sort_key;
  std::vector<TheoremVerdict> verdicts;
  bool dirty = false;
};

GraphOutcome evaluate(const Graph& g, std::span<const TheoremId> checks) {
  GraphOutcome out;
  out.graph6 = emit_graph6(g);
  out.sort_key = g.order() <= kCanonicalMaxVertices ? canonical_form(g) : out.graph6;
  const GraphProfile p = profile(g);
  for (TheoremId id : checks) {
    if (!applicable(id, g, p)) continue;
    TheoremVerdict v = check(id, g, p);
    out.dirty = out.dirty || !v.bound_holds || !v.characterization_consistent;
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

std::size_t theorem_rank(TheoremId id) {
  return static_cast<std::size_t>(std::find(kAllTheorems.begin(), kAllTheorems.end(), id) - kAllTheorems.begin());
}

}  // namespace

SuiteReport run_suite(const std::string& source_description, std::span<const Graph> graphs,
                      std::span<const TheoremId> checks, const SuiteOptions& options) {
  if (checks.empty()) throw std::invalid_argument("run_suite needs at least one theorem");
  const auto started = std::chrono::steady_clock::now();

  std::vector<TheoremId> ids(checks.begin(), checks.end());
  std::sort(ids.begin(), ids.end(), [](TheoremId a, TheoremId b) { return theorem_rank(a) < theorem_rank(b); });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<GraphOutcome> outcomes(graphs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_at{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size() || i > stop_at.load()) return;
      try {
        outcomes[i] = evaluate(graphs[i], ids);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop_at.store(0);
        return;
      }
      if (options.fail_fast && outcomes[i].dirty) {
        std::size_t seen = stop_at.load();
        while (i < seen && !stop_at.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t processed = std::min(graphs.size(), stop_at.load() == std::numeric_limits<std::size_t>::max()
                                                            ? graphs.size()
                                                            : stop_at.load() + 1);
  outcomes.resize(processed);

  // Stable sort by canonical form keeps source order among isomorphic inputs.
  std::vector<std::size_t> order(processed);
  for (std::size_t i = 0; i < processed; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return outcomes[a].sort_key < outcomes[b].sort_key; });

  SuiteReport report;
  report.source_description = source_description;
  report.graphs_processed = processed;
  for (TheoremId id : ids) report.verdicts_by_theorem[id] = {};
  for (std::size_t i : order) {
    const GraphOutcome& o = outcomes[i];
    for (const TheoremVerdict& v : o.verdicts) {
      TheoremTally& tally = report.verdicts_by_theorem[v.theorem_id];
      ++tally.checked;
      if (!v.bound_holds) {
        ++tally.bound_violations;
        report.violations.push_back({o.graph6, v.theorem_id, "bound violated: " + v.detail});
      }
      if (!v.characterization_consistent) {
        ++tally.characterization_mismatches;
        report.violations.push_back({o.graph6, v.theorem_id, "characterization mismatch: " + v.detail});
      }
      if (v.equality) {
        ++tally.equality_cases;
        report.equality_cases.push_back({o.graph6, v.theorem_id, v.n, v.gamma});
      }
      report.rows.push_back({o.graph6, v});
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

void validate_census_request(int n, int gamma, TheoremId theorem) {
  if (theorem != TheoremId::T31 && theorem != TheoremId::T41) {
    throw std::invalid_argument("census supports T31 (L) and T41 (Q) only");
  }
  if (n < 1 || n > kCanonicalMaxVertices) {
    throw std::invalid_argument("census needs 1 <= n <= " + std::to_string(kCanonicalMaxVertices));
  }
  const int lowest = theorem == TheoremId::T31 ? 2 : 1;
  if (gamma < lowest || gamma > n - 1) {
    throw std::invalid_argument(std::string(to_string(theorem)) + " census needs " + std::to_string(lowest) +
                                " <= gamma <= n-1, got gamma=" + std::to_string(gamma) +
                                " n=" + std::to_string(n));
  }
}

std::vector<Graph> extremal_family(int n, int gamma, TheoremId theorem) {
  validate_census_request(n, gamma, theorem);
  std::map<std::string, Graph> unique;
  auto keep = [&](const Graph& g) { unique.emplace(canonical_form(g), canonical_graph(g)); };

  if (theorem == TheoremId::T31) {
    const int core = n - gamma + 2;
    for (int a = 2; a <= core / 2; ++a) {
      const Graph b = complete_bipartite(a, core - a);
      const Bipartition bp{VertexSet::first(a), VertexSet::first(core) - VertexSet::first(a)};
      b_plus_members(b, bp, [&](const Graph& h) {
        if (h.max_degree() <= n - gamma) keep(add_isolated(h, gamma - 2));
      });
    }
  } else {
    keep(add_isolated(complete(n - gamma + 1), gamma - 1));
    if (gamma >= 2 && (n - gamma) % 2 == 0) keep(add_isolated(cocktail_party((n - gamma + 2) / 2), gamma - 2));
  }

  std::vector<Graph> out;
  for (auto& [form, g] : unique) out.push_back(g);
  return out;
}

CensusReport extremal_census(int n, int gamma, TheoremId theorem, std::span<const Graph> population,
                             const std::string& source_description) {
  validate_census_request(n, gamma, theorem);
  CensusReport report;
  report.n = n;
  report.gamma = gamma;
  report.theorem = theorem;
  report.source_description = source_description;

  std::set<std::string> found;
  for (const Graph& g : population) {
    if (g.order() != n) {
      throw std::invalid_argument("census population mixes orders: expected " + std::to_string(n) + ", got " +
                                  std::to_string(g.order()));
    }
    const GraphProfile p = profile(g);
    if (p.domination.gamma != gamma) continue;
    const TheoremVerdict v = theorem == TheoremId::T31 ? check_theorem_L(g, p) : check_theorem_Q(g, p);
    if (v.equality) found.insert(canonical_form(g));
  }
  report.found_extremal.assign(found.begin(), found.end());
  for (const Graph& g : extremal_family(n, gamma, theorem)) report.constructed_extremal.push_back(emit_graph6(g));
  return report;
}

CensusReport extremal_census(int n, int gamma, TheoremId theorem) {
  validate_census_request(n, gamma, theorem);
  if (n > kEnumerationMaxVertices) {
    throw std::invalid_argument("enumeration census needs n <= " + std::to_string(kEnumerationMaxVertices) +
                                "; supply the population as graph6 input");
  }
  const std::vector<Graph> all = enumerate_nonisomorphic(n);
  return extremal_census(n, gamma, theorem, all, "enumeration n=" + std::to_string(n));
}

}  // namespace spectradom
