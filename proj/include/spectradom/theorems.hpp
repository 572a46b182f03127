#ifndef SPECTRADOM_THEOREMS_HPP
#define SPECTRADOM_THEOREMS_HPP

/**
 * Per-graph checkers for the domination-number bounds on the Laplacian and
 * signless Laplacian spectral radii, and for the supporting lemmas.
 *
 * A checker never throws because a bound fails: that outcome is recorded in
 * the verdict. Exceptions are reserved for precondition misuse
 * (std::invalid_argument) and for a structural equality decision that
 * contradicts the eigenvalue at tolerance (NumericDisagreement), which
 * indicates broken tolerances rather than a property of the graph.
 */

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spectradom/domination.hpp"
#include "spectradom/graph.hpp"
#include "spectradom/spectral.hpp"

namespace spectradom {

enum class TheoremId {
  L21,            // mu(G + e) >= mu(G)
  L22,            // mu <= n, equality iff complement disconnected
  L23,            // 2 avg_deg <= q <= 2 max_deg, equality iff regular (connected)
  L31,            // mu <= max |N(u) | N(v)|, equality iff in S+ (connected)
  T31,            // mu <= n - gamma + 2
  C32,            // bipartite version of T31
  T41,            // q <= 2(n - gamma)
  Q_BIPARTITE,    // q <= n - gamma + 2 for bipartite graphs
  BRAND_SEIFTER,  // mu < n - ceil((gamma - 2) / 2), connected, gamma >= 3
  ORE,            // gamma <= floor(n / 2) without isolated vertices
  Q_2N2,          // q <= 2(n - 1), equality iff complete
};

inline constexpr std::array<TheoremId, 11> kAllTheorems = {
    TheoremId::L21, TheoremId::L22, TheoremId::L23,         TheoremId::L31,
    TheoremId::T31, TheoremId::C32, TheoremId::T41,         TheoremId::Q_BIPARTITE,
    TheoremId::BRAND_SEIFTER,       TheoremId::ORE,         TheoremId::Q_2N2,
};

const char* to_string(TheoremId id);
/// Accepts the canonical names plus "L" (T31) and "Q" (T41); case-insensitive.
std::optional<TheoremId> parse_theorem_id(std::string_view text);

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr double kEqualityTolerance = 1e-7;
inline constexpr double kBipartiteCoincidenceTolerance = 1e-8;

struct TheoremVerdict {
  TheoremId theorem_id;
  int n = 0;
  int gamma = 0;
  double bound_value = 0.0;
  double computed_value = 0.0;
  bool bound_holds = true;
  bool equality = false;
  bool recognizer_accepts = false;
  /// equality == recognizer_accepts where a characterization applies; true
  /// otherwise.
  bool characterization_consistent = true;
  std::string detail;
};

class NumericDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Everything the checkers need that is expensive to compute; build once per
/// graph.
struct GraphProfile {
  DominationResult domination;
  SpectralSummary spectrum;
};

GraphProfile profile(const Graph& g);

// Each checker has an overload that computes the profile itself.

/// Laplacian bound n - gamma + 2 for 2 <= gamma <= n-1. gamma = 1 is routed to
/// check_remark_gamma1; gamma = n (edgeless) short-circuits.
TheoremVerdict check_theorem_L(const Graph& g, const GraphProfile& p);
TheoremVerdict check_theorem_L(const Graph& g);

/// gamma = 1 forces a universal vertex and mu = n. Requires n >= 2.
TheoremVerdict check_remark_gamma1(const Graph& g, const GraphProfile& p);
TheoremVerdict check_remark_gamma1(const Graph& g);

TheoremVerdict check_corollary_bipartite(const Graph& g, const GraphProfile& p);
TheoremVerdict check_corollary_bipartite(const Graph& g);

TheoremVerdict check_theorem_Q(const Graph& g, const GraphProfile& p);
TheoremVerdict check_theorem_Q(const Graph& g);

TheoremVerdict check_q_bipartite(const Graph& g, const GraphProfile& p);
TheoremVerdict check_q_bipartite(const Graph& g);

TheoremVerdict check_brand_seifter(const Graph& g, const GraphProfile& p);
TheoremVerdict check_brand_seifter(const Graph& g);

TheoremVerdict check_ore(const Graph& g, const GraphProfile& p);
TheoremVerdict check_ore(const Graph& g);

TheoremVerdict check_q_2n2(const Graph& g, const GraphProfile& p);
TheoremVerdict check_q_2n2(const Graph& g);

/// Edge monotonicity for one specified non-edge.
TheoremVerdict check_edge_monotonicity(const Graph& g, const GraphProfile& p, Edge non_edge);
/// Edge monotonicity over every non-edge; computed_value is the smallest
/// mu(G + e). Requires g to be non-complete.
TheoremVerdict check_edge_monotonicity(const Graph& g, const GraphProfile& p);

TheoremVerdict check_order_bound(const Graph& g, const GraphProfile& p);      // L22
TheoremVerdict check_degree_bounds(const Graph& g, const GraphProfile& p);    // L23
TheoremVerdict check_union_bound(const Graph& g, const GraphProfile& p);      // L31

/// Whether `id` applies to g, i.e. whether check(id, ...) would not throw on
/// its preconditions.
bool applicable(TheoremId id, const Graph& g, const GraphProfile& p);

/// Dispatches to the checker for `id` (L21 uses every non-edge).
TheoremVerdict check(TheoremId id, const Graph& g, const GraphProfile& p);

}  // namespace spectradom

#endif
