#include "spectradom/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "format.hpp"
#include "spectradom/structure.hpp"

namespace spectradom {

using detail::fixed;

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::L21: return "L21";
    case TheoremId::L22: return "L22";
    case TheoremId::L23: return "L23";
    case TheoremId::L31: return "L31";
    case TheoremId::T31: return "T31";
    case TheoremId::C32: return "C32";
    case TheoremId::T41: return "T41";
    case TheoremId::Q_BIPARTITE: return "Q_BIPARTITE";
    case TheoremId::BRAND_SEIFTER: return "BRAND_SEIFTER";
    case TheoremId::ORE: return "ORE";
    case TheoremId::Q_2N2: return "Q_2N2";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "L") return TheoremId::T31;
  if (upper == "Q") return TheoremId::T41;
  for (TheoremId id : kAllTheorems) {
    if (upper == to_string(id)) return id;
  }
  return std::nullopt;
}

GraphProfile profile(const Graph& g) { return {domination_number(g), summary(g)}; }

namespace {

TheoremVerdict start(TheoremId id, const Graph& g, const GraphProfile& p) {
  TheoremVerdict v;
  v.theorem_id = id;
  v.n = g.order();
  v.gamma = p.domination.gamma;
  return v;
}

[[noreturn]] void misuse(TheoremId id, const std::string& why) {
  throw std::invalid_argument(std::string(to_string(id)) + ": " + why);
}

bool has_universal_vertex(const Graph& g) { return g.max_degree() == g.order() - 1; }

bool is_complete(const Graph& g) { return g.min_degree() == g.order() - 1; }

bool complement_disconnected(const Graph& g) { return !is_connected(complement(g)); }

// Some component C has |C| = target and a disconnected complement, which is
// exactly when mu(C) = |C| = target.
bool structural_mu_equals(const Graph& g, int target) {
  for (VertexSet comp : components(g)) {
    if (comp.size() == target && complement_disconnected(induced_subgraph(g, comp))) return true;
  }
  return false;
}

// Some component is connected and degree-regular of degree d >= 1, which is
// exactly when its q reaches 2d.
bool structural_q_equals(const Graph& g, int degree) {
  if (degree < 1) return false;
  for (VertexSet comp : components(g)) {
    bool regular = true;
    for (int v : comp) regular = regular && g.degree(v) == degree;
    if (regular) return true;
  }
  return false;
}

void corroborate(const TheoremVerdict& v, bool structural, const char* quantity) {
  const bool numeric = std::abs(v.computed_value - v.bound_value) < kEqualityTolerance;
  if (numeric != structural) {
    throw NumericDisagreement(std::string(to_string(v.theorem_id)) + ": structural equality " +
                              (structural ? "holds" : "fails") + " but " + quantity + " = " +
                              fixed(v.computed_value, 12) + " vs bound " + fixed(v.bound_value, 0));
  }
}

void set_characterization(TheoremVerdict& v, bool equality, bool recognizer) {
  v.equality = equality;
  v.recognizer_accepts = recognizer;
  v.characterization_consistent = equality == recognizer;
}

TheoremVerdict edgeless(TheoremId id, const Graph& g, const GraphProfile& p, double bound) {
  TheoremVerdict v = start(id, g, p);
  v.bound_value = bound;
  v.computed_value = 0.0;
  v.detail = "edgeless graph (gamma = n): spectral radii are zero";
  return v;
}

std::string slack_text(const char* name, double value, double bound) {
  return std::string(name) + "=" + fixed(value) + " bound=" + fixed(bound, 0) +
         " slack=" + fixed(bound - value);
}

std::string witness_text(const std::optional<ExtremalWitness>& w) {
  if (!w) return "recognizer: no";
  std::string out = std::string("recognizer: ") + to_string(w->kind) +
                    " isolated=" + std::to_string(w->isolated_count);
  if (w->bipartition) out += " U=" + w->bipartition->u.to_string() + " W=" + w->bipartition->w.to_string();
  return out;
}

}  // namespace

TheoremVerdict check_remark_gamma1(const Graph& g, const GraphProfile& p) {
  const int n = g.order();
  if (p.domination.gamma != 1) misuse(TheoremId::T31, "gamma = 1 remark needs gamma = 1");
  if (n < 2) misuse(TheoremId::T31, "gamma = 1 remark needs n >= 2");
  TheoremVerdict v = start(TheoremId::T31, g, p);
  v.bound_value = n;
  v.computed_value = p.spectrum.mu;
  const bool reaches = std::abs(v.computed_value - n) < kEqualityTolerance;
  const bool universal = has_universal_vertex(g);
  v.bound_holds = reaches && universal;
  set_characterization(v, reaches, universal);
  v.detail = "gamma = 1 remark: " + slack_text("mu", v.computed_value, n) +
             (universal ? "; universal vertex present" : "; no universal vertex");
  return v;
}

TheoremVerdict check_theorem_L(const Graph& g, const GraphProfile& p) {
  const int n = g.order();
  const int gamma = p.domination.gamma;
  if (gamma == n) return edgeless(TheoremId::T31, g, p, 2.0);
  if (gamma == 1) return check_remark_gamma1(g, p);
  TheoremVerdict v = start(TheoremId::T31, g, p);
  v.bound_value = n - gamma + 2;
  v.computed_value = p.spectrum.mu;
  v.bound_holds = v.computed_value <= v.bound_value + kBoundTolerance;
  const bool structural = structural_mu_equals(g, n - gamma + 2);
  corroborate(v, structural, "mu");
  const auto witness = is_extremal_L(g, gamma);
  set_characterization(v, structural, witness.has_value());
  v.detail = slack_text("mu", v.computed_value, v.bound_value) + "; " + witness_text(witness);
  return v;
}

TheoremVerdict check_corollary_bipartite(const Graph& g, const GraphProfile& p) {
  const int n = g.order();
  const int gamma = p.domination.gamma;
  if (!bipartition_of(g)) misuse(TheoremId::C32, "graph is not bipartite");
  if (gamma == n) return edgeless(TheoremId::C32, g, p, 2.0);
  if (gamma < 2) misuse(TheoremId::C32, "needs 2 <= gamma <= n-1");
  TheoremVerdict v = start(TheoremId::C32, g, p);
  v.bound_value = n - gamma + 2;
  v.computed_value = p.spectrum.mu;
  v.bound_holds = v.computed_value <= v.bound_value + kBoundTolerance;
  const bool structural = structural_mu_equals(g, n - gamma + 2);
  corroborate(v, structural, "mu");
  const auto witness = is_extremal_bipartite_L(g, gamma);
  set_characterization(v, structural, witness.has_value());
  v.detail = slack_text("mu", v.computed_value, v.bound_value) + "; " + witness_text(witness);
  return v;
}

TheoremVerdict check_theorem_Q(const Graph& g, const GraphProfile& p) {
  const int n = g.order();
  const int gamma = p.domination.gamma;
  if (gamma == n) return edgeless(TheoremId::T41, g, p, 0.0);
  TheoremVerdict v = start(TheoremId::T41, g, p);
  v.bound_value = 2.0 * (n - gamma);
  v.computed_value = p.spectrum.q;
  v.bound_holds = v.computed_value <= v.bound_value + kBoundTolerance;
  const bool structural = structural_q_equals(g, n - gamma);
  corroborate(v, structural, "q");
  const auto witness = is_extremal_Q(g, gamma);
  set_characterization(v, structural, witness.has_value());
  v.detail = slack_text("q", v.computed_value, v.bound_value) + "; " + witness_text(witness);
  return v;
}

TheoremVerdict check_q_bipartite(const Graph& g, const GraphProfile& p) {
  const int n = g.order();
  const int gamma = p.domination.gamma;
  if (!bipartition_of(g)) misuse(TheoremId::Q_BIPARTITE, "graph is not bipartite");
  if (gamma == n) return edgeless(TheoremId::Q_BIPARTITE, g, p, 2.0);
  if (gamma < 2) misuse(TheoremId::Q_BIPARTITE, "needs 2 <= gamma <= n-1");
  TheoremVerdict v = start(TheoremId::Q_BIPARTITE, g, p);
  v.bound_value = n - gamma + 2;
  v.computed_value = p.spectrum.q;
  const double gap = std::abs(p.spectrum.q - p.spectrum.mu);
  const bool coincide = gap < kBipartiteCoincidenceTolerance;
  v.bound_holds = v.computed_value <= v.bound_value + kBoundTolerance && coincide;
  const bool structural = structural_mu_equals(g, n - gamma + 2);
  corroborate(v, structural, "q");
  const auto witness = is_extremal_bipartite_L(g, gamma);
  set_characterization(v, structural, witness.has_value());
  v.detail = slack_text("q", v.computed_value, v.bound_value) + " |q-mu|=" + fixed(gap, 12) + "; " +
             witness_text(witness);
  return v;
}

TheoremVerdict check_brand_seifter(const Graph& g, const GraphProfile& p) {
  const int gamma = p.domination.gamma;
  if (!is_connected(g)) misuse(TheoremId::BRAND_SEIFTER, "graph is disconnected");
  if (gamma < 3) misuse(TheoremId::BRAND_SEIFTER, "needs gamma >= 3");
  TheoremVerdict v = start(TheoremId::BRAND_SEIFTER, g, p);
  v.bound_value = g.order() - (gamma - 1) / 2;  // n - ceil((gamma - 2) / 2)
  v.computed_value = p.spectrum.mu;
  v.bound_holds = v.computed_value < v.bound_value - kBoundTolerance;
  v.detail = "strict: " + slack_text("mu", v.computed_value, v.bound_value);
  return v;
}

TheoremVerdict check_ore(const Graph& g, const GraphProfile& p) {
  if (!isolated_vertices(g).empty()) misuse(TheoremId::ORE, "graph has isolated vertices");
  TheoremVerdict v = start(TheoremId::ORE, g, p);
  v.bound_value = g.order() / 2;
  v.computed_value = p.domination.gamma;
  v.bound_holds = p.domination.gamma <= g.order() / 2;
  v.detail = "gamma=" + std::to_string(p.domination.gamma) + " bound=" + std::to_string(g.order() / 2) +
             " witness=" + p.domination.witness.to_string();
  return v;
}

TheoremVerdict check_q_2n2(const Graph& g, const GraphProfile& p) {
  TheoremVerdict v = start(TheoremId::Q_2N2, g, p);
  v.bound_value = 2.0 * (g.order() - 1);
  v.computed_value = p.spectrum.q;
  v.bound_holds = v.computed_value <= v.bound_value + kBoundTolerance;
  const bool reaches = std::abs(v.computed_value - v.bound_value) < kEqualityTolerance;
  set_characterization(v, reaches, is_complete(g));
  v.detail = slack_text("q", v.computed_value, v.bound_value) + (is_complete(g) ? "; complete" : "");
  return v;
}

TheoremVerdict check_edge_monotonicity(const Graph& g, const GraphProfile& p, Edge non_edge) {
  auto [a, b] = non_edge;
  if (a == b || g.adjacent(a, b)) misuse(TheoremId::L21, "needs a non-edge");
  TheoremVerdict v = start(TheoremId::L21, g, p);
  v.bound_value = p.spectrum.mu;
  v.computed_value = mu(g.with_edge(a, b));
  v.bound_holds = v.computed_value >= v.bound_value - kBoundTolerance;
  v.detail = "mu(G+" + std::to_string(a) + "-" + std::to_string(b) + ")=" + fixed(v.computed_value) +
             " mu(G)=" + fixed(v.bound_value);
  return v;
}

TheoremVerdict check_edge_monotonicity(const Graph& g, const GraphProfile& p) {
  if (is_complete(g)) misuse(TheoremId::L21, "complete graph has no non-edge");
  TheoremVerdict worst;
  bool first = true;
  for (int a : g.vertices()) {
    for (int b : g.vertices() - g.closed_neighbors(a)) {
      if (b < a) continue;
      TheoremVerdict v = check_edge_monotonicity(g, p, {a, b});
      if (first || v.computed_value < worst.computed_value) worst = std::move(v);
      first = false;
    }
  }
  return worst;
}

TheoremVerdict check_order_bound(const Graph& g, const GraphProfile& p) {
  TheoremVerdict v = start(TheoremId::L22, g, p);
  v.bound_value = g.order();
  v.computed_value = p.spectrum.mu;
  v.bound_holds = v.computed_value <= v.bound_value + kBoundTolerance;
  const bool reaches = std::abs(v.computed_value - v.bound_value) < kEqualityTolerance;
  const bool split = complement_disconnected(g);
  set_characterization(v, reaches, split);
  v.detail = slack_text("mu", v.computed_value, v.bound_value) +
             (split ? "; complement disconnected" : "; complement connected");
  return v;
}

TheoremVerdict check_degree_bounds(const Graph& g, const GraphProfile& p) {
  TheoremVerdict v = start(TheoremId::L23, g, p);
  const double lower = 2.0 * p.spectrum.avg_degree;
  v.bound_value = 2.0 * p.spectrum.max_degree;
  v.computed_value = p.spectrum.q;
  v.bound_holds = lower - kBoundTolerance <= v.computed_value &&
                  v.computed_value <= v.bound_value + kBoundTolerance;
  const bool lower_eq = std::abs(v.computed_value - lower) < kEqualityTolerance;
  const bool upper_eq = std::abs(v.computed_value - v.bound_value) < kEqualityTolerance;
  const bool regular = is_regular(g);
  v.equality = lower_eq || upper_eq;
  v.recognizer_accepts = regular;
  const bool connected = is_connected(g);
  v.characterization_consistent = !connected || (lower_eq == regular && upper_eq == regular);
  v.detail = "2*avg_degree=" + fixed(lower) + " q=" + fixed(v.computed_value) +
             " 2*max_degree=" + fixed(v.bound_value, 0) + (regular ? "; regular" : "; irregular") +
             (connected ? "" : "; disconnected, characterization not applicable");
  return v;
}

TheoremVerdict check_union_bound(const Graph& g, const GraphProfile& p) {
  if (!is_connected(g) || g.edge_count() == 0) misuse(TheoremId::L31, "needs a connected graph with an edge");
  TheoremVerdict v = start(TheoremId::L31, g, p);
  v.bound_value = neighborhood_union_bound(g);
  v.computed_value = p.spectrum.mu;
  v.bound_holds = v.computed_value <= v.bound_value + kBoundTolerance;
  const bool reaches = std::abs(v.computed_value - v.bound_value) < kEqualityTolerance;
  v.detail = slack_text("mu", v.computed_value, v.bound_value);
  if (g.order() <= kSPlusMaxVertices) {
    const auto witness = s_plus_witness(g);
    set_characterization(v, reaches, witness.has_value());
    if (witness) v.detail += "; S+ witness U=" + witness->u.to_string() + " W=" + witness->w.to_string();
  } else {
    v.equality = reaches;
    v.detail += "; S+ membership not evaluated above 20 vertices";
  }
  return v;
}

bool applicable(TheoremId id, const Graph& g, const GraphProfile& p) {
  const int gamma = p.domination.gamma;
  switch (id) {
    case TheoremId::L21:
      return !is_complete(g);
    case TheoremId::L22:
    case TheoremId::L23:
    case TheoremId::T31:
    case TheoremId::T41:
    case TheoremId::Q_2N2:
      return true;
    case TheoremId::L31:
      return g.edge_count() > 0 && is_connected(g);
    case TheoremId::C32:
    case TheoremId::Q_BIPARTITE:
      return (gamma >= 2 || gamma == g.order()) && bipartition_of(g).has_value();
    case TheoremId::BRAND_SEIFTER:
      return gamma >= 3 && is_connected(g);
    case TheoremId::ORE:
      return isolated_vertices(g).empty();
  }
  return false;
}

TheoremVerdict check(TheoremId id, const Graph& g, const GraphProfile& p) {
  switch (id) {
    case TheoremId::L21: return check_edge_monotonicity(g, p);
    case TheoremId::L22: return check_order_bound(g, p);
    case TheoremId::L23: return check_degree_bounds(g, p);
    case TheoremId::L31: return check_union_bound(g, p);
    case TheoremId::T31: return check_theorem_L(g, p);
    case TheoremId::C32: return check_corollary_bipartite(g, p);
    case TheoremId::T41: return check_theorem_Q(g, p);
    case TheoremId::Q_BIPARTITE: return check_q_bipartite(g, p);
    case TheoremId::BRAND_SEIFTER: return check_brand_seifter(g, p);
    case TheoremId::ORE: return check_ore(g, p);
    case TheoremId::Q_2N2: return check_q_2n2(g, p);
  }
  throw std::invalid_argument("unknown theorem id");
}

TheoremVerdict check_theorem_L(const Graph& g) { return check_theorem_L(g, profile(g)); }
TheoremVerdict check_remark_gamma1(const Graph& g) { return check_remark_gamma1(g, profile(g)); }
TheoremVerdict check_corollary_bipartite(const Graph& g) { return check_corollary_bipartite(g, profile(g)); }
TheoremVerdict check_theorem_Q(const Graph& g) { return check_theorem_Q(g, profile(g)); }
TheoremVerdict check_q_bipartite(const Graph& g) { return check_q_bipartite(g, profile(g)); }
TheoremVerdict check_brand_seifter(const Graph& g) { return check_brand_seifter(g, profile(g)); }
TheoremVerdict check_ore(const Graph& g) { return check_ore(g, profile(g)); }
TheoremVerdict check_q_2n2(const Graph& g) { return check_q_2n2(g, profile(g)); }

}  // namespace spectradom
