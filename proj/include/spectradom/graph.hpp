#ifndef SPECTRADOM_GRAPH_HPP
#define SPECTRADOM_GRAPH_HPP

/**
 * Small undirected simple graphs on at most 64 vertices. Each adjacency row
 * is a single 64-bit word, so vertex subsets are plain machine words too.
 */

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spectradom {

inline constexpr int kMaxVertices = 64;

/// Subset of {0, ..., 63}; interpreted relative to some graph's vertex count.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  /// "{0,2,5}"
  std::string to_string() const;

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Ordered pair of disjoint vertex sets.
struct Bipartition {
  VertexSet u;
  VertexSet w;
  bool operator==(const Bipartition&) const = default;
};

/// Immutable undirected simple graph. Invariants (symmetric, loop-free, no
/// bits at or above n) are established by every constructor.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Builds from adjacency rows; throws std::invalid_argument if the rows are
  /// asymmetric, contain a loop, or reference a vertex >= n.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[check(v)]); }
  VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1U; }
  int degree(int v) const { return std::popcount(adj_[check(v)]); }
  int edge_count() const;
  int max_degree() const;
  int min_degree() const;
  std::vector<Edge> edges() const;

  /// G + uv; throws if uv is already an edge, a loop, or out of range.
  Graph with_edge(int u, int v) const;

  bool operator==(const Graph& other) const;

 private:
  int check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return v;
  }

  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Graph with exactly the given edges; duplicates (in either orientation) collapse.
Graph from_edges(int n, std::span<const Edge> edges);
inline Graph from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

enum class Family { complete, complete_bipartite, star, path, cycle, cocktail_party, empty };

/// Named families. Parameters: complete(n), complete_bipartite(a, b),
/// star(k) = K_{1,k}, path(n), cycle(n), cocktail_party(k) on 2k vertices,
/// empty(n).
Graph construct(Family family, std::span<const int> params);

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph path(int n);
Graph cycle(int n);
/// Complement of k disjoint edges: (2k-2)-regular on 2k vertices.
Graph cocktail_party(int k);
Graph empty_graph(int n);

Graph complement(const Graph& g);
/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// g with k extra isolated vertices appended; k may be 0.
Graph add_isolated(const Graph& g, int k);
/// Subgraph induced by s, relabeled to 0..|s|-1 in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet s);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

/// N(u) | N(v)
VertexSet neighborhood_union(const Graph& g, int u, int v);
/// (V \ (N(u) | N(v))) | {u, v}; uv must be an edge.
VertexSet duv_set(const Graph& g, int u, int v);
/// V \ N(u)
VertexSet du_set(const Graph& g, int u);

}  // namespace spectradom

#endif
