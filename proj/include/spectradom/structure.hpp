#ifndef SPECTRADOM_STRUCTURE_HPP
#define SPECTRADOM_STRUCTURE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spectradom/graph.hpp"

namespace spectradom {

/// BFS 2-colouring, component by component. The smallest vertex of every
/// component (isolated vertices included) lands in U. Empty if g has an odd
/// cycle.
std::optional<Bipartition> bipartition_of(const Graph& g);

/// Throws std::invalid_argument unless bp splits V(g) into two disjoint sets
/// with no edge inside either set.
void require_valid_bipartition(const Graph& g, const Bipartition& bp);

/// All of U share one degree r >= 1 and all of W share one degree s >= 1.
/// Connectivity is not required.
bool is_semiregular_bipartite(const Graph& g, const Bipartition& bp);

/// Same-side pairs with identical neighbourhoods on the opposite side.
struct TwinEdgeSets {
  std::vector<Edge> e_u;
  std::vector<Edge> e_w;
};

TwinEdgeSets twin_edge_sets(const Graph& b, const Bipartition& bp);

inline constexpr int kBPlusMaxTwinEdges = 20;

/// Number of graphs b_plus_members would yield: 2^(|e_u| + |e_w|).
std::uint64_t b_plus_count(const Graph& b, const Bipartition& bp);

/// Calls visit(H) for every H with E(b) <= E(H) <= E(b) + e_u + e_w, b first.
/// Throws std::invalid_argument if there are more than 20 twin edges.
void b_plus_members(const Graph& b, const Bipartition& bp,
                    const std::function<void(const Graph&)>& visit);

inline constexpr int kSPlusMaxVertices = 20;

/// Decides membership in the union of B+ over all semiregular bipartite B.
/// Searches every bipartition (U, W) with 0 in U: the cross edges must form a
/// semiregular bipartite graph and every same-side edge must join twins of
/// it. Returns the first witness bipartition found.
std::optional<Bipartition> s_plus_witness(const Graph& g);
bool is_in_s_plus(const Graph& g);

enum class ExtremalKind { L_theorem, Q_clique, Q_cocktail, bipartite_L };

const char* to_string(ExtremalKind kind);

struct ExtremalWitness {
  ExtremalKind kind;
  int isolated_count = 0;
  VertexSet core_vertices;
  std::optional<Bipartition> bipartition;  // of the core, in g's labels
};

/// Equality family for the Laplacian bound: exactly gamma-2 isolated
/// vertices, a core on n-gamma+2 vertices containing every pair across some
/// split (U, W) with |U|, |W| >= 2, and maximum degree <= n-gamma.
/// Requires 2 <= gamma <= n-1.
std::optional<ExtremalWitness> is_extremal_L(const Graph& g, int gamma);

/// Equality families for the signless Laplacian bound:
/// K_{n-gamma+1} + (gamma-1)K_1, or for gamma >= 2 with n-gamma even the
/// cocktail party graph on n-gamma+2 vertices + (gamma-2)K_1.
/// Requires 1 <= gamma <= n-1.
std::optional<ExtremalWitness> is_extremal_Q(const Graph& g, int gamma);

/// Bipartite equality family: gamma-2 isolated vertices plus K_{a,b} with
/// a, b >= 2 and a + b = n-gamma+2. Requires g bipartite, 2 <= gamma <= n-1.
std::optional<ExtremalWitness> is_extremal_bipartite_L(const Graph& g, int gamma);

}  // namespace spectradom

#endif
