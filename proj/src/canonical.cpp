#include "spectradom/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spectradom/graph6.hpp"

namespace spectradom {

namespace {

void require_small(const Graph& g) {
  if (g.order() > kCanonicalMaxVertices) {
    throw std::invalid_argument("canonical labeling supports at most " +
                                std::to_string(kCanonicalMaxVertices) + " vertices, got " +
                                std::to_string(g.order()));
  }
}

// degree first, then neighbour-degree histogram
std::array<std::uint64_t, kMaxVertices> vertex_keys(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices> keys{};
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    std::array<int, kCanonicalMaxVertices + 1> hist{};
    for (int u : g.neighbors(v)) ++hist[g.degree(u)];
    std::uint64_t key = static_cast<std::uint64_t>(g.degree(v));
    for (int d = 0; d < n; ++d) key = key * (kCanonicalMaxVertices + 1) + hist[d];
    keys[v] = key;
  }
  return keys;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    total_bits_ = n_ * (n_ - 1) / 2;
    const auto keys = vertex_keys(g);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    for (int j = 0; j < n_; ++j) {
      VertexSet cell;
      for (int v : order) {
        if (keys[v] == keys[order[j]]) cell = cell.with(v);
      }
      cell_at_[j] = cell;
    }
  }

  std::uint64_t run() {
    search(0, VertexSet{}, 0);
    return best_;
  }

 private:
  bool twins(int a, int b) const {
    return g_.neighbors(a).without(b) == g_.neighbors(b).without(a);
  }

  void search(int j, VertexSet used, std::uint64_t prefix) {
    if (j == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        found_ = true;
      }
      return;
    }
    const int bits_after = (j + 1) * j / 2;
    VertexSet tried;
    for (int v : cell_at_[j] - used) {
      bool redundant = false;
      for (int t : tried) {
        if (twins(t, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried = tried.with(v);

      std::uint64_t next = prefix;
      for (int i = 0; i < j; ++i) next = (next << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
      if (found_ && next > (best_ >> (total_bits_ - bits_after))) continue;
      perm_[j] = v;
      search(j + 1, used.with(v), next);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_ = 0;
  std::array<VertexSet, kMaxVertices> cell_at_{};
  std::array<int, kMaxVertices> perm_{};
  std::uint64_t best_ = 0;
  bool found_ = false;
};

}  // namespace

namespace detail {

std::uint64_t triangle_code(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("triangle code needs n <= 11");
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 1 || n > 11) throw std::invalid_argument("graph_from_code needs 1 <= n <= 11");
  std::array<std::uint64_t, kMaxVertices> rows{};
  int k = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --k;
      if ((code >> k) & 1U) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n));
}

bool invariant_sorted(const Graph& g) {
  require_small(g);
  const auto keys = vertex_keys(g);
  return std::is_sorted(keys.begin(), keys.begin() + g.order());
}

bool is_canonical_labeling(const Graph& g) {
  return invariant_sorted(g) && CanonicalSearch(g).run() == triangle_code(g);
}

}  // namespace detail

Graph canonical_graph(const Graph& g) {
  require_small(g);
  return detail::graph_from_code(g.order(), CanonicalSearch(g).run());
}

std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  require_small(g);
  require_small(h);
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const Graph& x) {
    std::vector<int> d;
    for (int v : x.vertices()) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  return CanonicalSearch(g).run() == CanonicalSearch(h).run();
}

}  // namespace spectradom
