#include "spectradom/graph.hpp"

#include <algorithm>

namespace spectradom {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 1..64");
  }
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  const std::uint64_t outside = ~VertexSet::first(g.n_).bits();
  for (int v = 0; v < g.n_; ++v) {
    const std::uint64_t row = rows[v];
    if (row & outside) throw std::invalid_argument("adjacency row references a vertex >= n");
    if ((row >> v) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    g.adj_[v] = row;
  }
  for (int v = 0; v < g.n_; ++v) {
    for (int u : VertexSet(g.adj_[v])) {
      if (!((g.adj_[u] >> v) & 1U)) throw std::invalid_argument("adjacency rows are not symmetric");
    }
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(adj_[v]));
  return best;
}

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[v]));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] >> u << u)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("loop edge");
  if (adjacent(u, v)) throw std::invalid_argument("edge already present");
  Graph g = *this;
  g.adj_[u] |= std::uint64_t{1} << v;
  g.adj_[v] |= std::uint64_t{1} << u;
  return g;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph from_edges(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 1..64");
  }
  std::vector<std::uint64_t> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return Graph::from_rows(rows);
}

Graph complete(int n) {
  Graph base(n);
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = base.vertices().without(v).bits();
  return Graph::from_rows(rows);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs both sides >= 1");
  if (a + b > kMaxVertices) throw std::invalid_argument("complete_bipartite exceeds 64 vertices");
  const VertexSet left = VertexSet::first(a);
  const VertexSet right = VertexSet::first(a + b) - left;
  std::vector<std::uint64_t> rows(a + b);
  for (int v = 0; v < a + b; ++v) rows[v] = (v < a ? right : left).bits();
  return Graph::from_rows(rows);
}

Graph star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  return complete_bipartite(1, leaves);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return from_edges(n, edges);
}

Graph cocktail_party(int k) {
  if (k < 1) throw std::invalid_argument("cocktail_party needs k >= 1");
  if (2 * k > kMaxVertices) throw std::invalid_argument("cocktail_party exceeds 64 vertices");
  std::vector<Edge> matching;
  for (int i = 0; i < k; ++i) matching.emplace_back(2 * i, 2 * i + 1);
  return complement(from_edges(2 * k, matching));
}

Graph empty_graph(int n) { return Graph(n); }

Graph construct(Family family, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family expects " + std::to_string(count) + " parameter(s)");
    }
  };
  switch (family) {
    case Family::complete:
      need(1);
      return complete(params[0]);
    case Family::complete_bipartite:
      need(2);
      return complete_bipartite(params[0], params[1]);
    case Family::star:
      need(1);
      return star(params[0]);
    case Family::path:
      need(1);
      return path(params[0]);
    case Family::cycle:
      need(1);
      return cycle(params[0]);
    case Family::cocktail_party:
      need(1);
      return cocktail_party(params[0]);
    case Family::empty:
      need(1);
      return empty_graph(params[0]);
  }
  throw std::invalid_argument("unknown family");
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = (g.vertices() - g.neighbors(v)).without(v).bits();
  return Graph::from_rows(rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxVertices) throw std::invalid_argument("disjoint union exceeds 64 vertices");
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v).bits();
  for (int v = 0; v < h.order(); ++v) rows[g.order() + v] = h.neighbors(v).bits() << g.order();
  return Graph::from_rows(rows);
}

Graph add_isolated(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative isolated vertex count");
  return k == 0 ? g : disjoint_union(g, Graph(k));
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::out_of_range("induced subgraph set exceeds vertex range");
  const std::vector<int> keep = s.to_vector();
  std::vector<std::uint64_t> rows(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) rows[i] |= std::uint64_t{1} << j;
    }
  }
  return Graph::from_rows(rows);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (int v : g.vertices()) {
    if (g.neighbors(v).empty()) out = out.with(v);
  }
  return out;
}

VertexSet neighborhood_union(const Graph& g, int u, int v) {
  return g.neighbors(u) | g.neighbors(v);
}

VertexSet duv_set(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) {
    throw std::invalid_argument("duv_set requires an edge, got (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  return (g.vertices() - neighborhood_union(g, u, v)).with(u).with(v);
}

VertexSet du_set(const Graph& g, int u) { return g.vertices() - g.neighbors(u); }

}  // namespace spectradom
