#include "spectradom/structure.hpp"

#include <stdexcept>
#include <string>

#include "spectradom/canonical.hpp"

namespace spectradom {

std::optional<Bipartition> bipartition_of(const Graph& g) {
  Bipartition bp;
  for (const VertexSet comp : components(g)) {
    VertexSet side = VertexSet::single(comp.front());
    VertexSet other;
    VertexSet frontier = side;
    bool on_u = true;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      if (!(next & (on_u ? side : other)).empty()) return std::nullopt;
      next -= (on_u ? other : side);
      (on_u ? other : side) |= next;
      frontier = next;
      on_u = !on_u;
    }
    bp.u |= side;
    bp.w |= other;
  }
  return bp;
}

void require_valid_bipartition(const Graph& g, const Bipartition& bp) {
  if (!(bp.u & bp.w).empty()) throw std::invalid_argument("bipartition sides overlap");
  if ((bp.u | bp.w) != g.vertices()) throw std::invalid_argument("bipartition does not cover V(G)");
  for (int v : bp.u) {
    if (!(g.neighbors(v) & bp.u).empty()) throw std::invalid_argument("edge inside U");
  }
  for (int v : bp.w) {
    if (!(g.neighbors(v) & bp.w).empty()) throw std::invalid_argument("edge inside W");
  }
}

namespace {

// common degree of `side` into `into`, or -1 if degrees differ
int common_degree(const Graph& g, VertexSet side, VertexSet into) {
  int degree = -1;
  for (int v : side) {
    const int d = (g.neighbors(v) & into).size();
    if (degree == -1) {
      degree = d;
    } else if (d != degree) {
      return -1;
    }
  }
  return degree;
}

std::vector<Edge> twins_within(const Graph& b, VertexSet side, VertexSet opposite) {
  std::vector<Edge> out;
  for (int x : side) {
    for (int y : side) {
      if (y <= x) continue;
      if ((b.neighbors(x) & opposite) == (b.neighbors(y) & opposite)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

bool is_semiregular_bipartite(const Graph& g, const Bipartition& bp) {
  require_valid_bipartition(g, bp);
  if (bp.u.empty() || bp.w.empty()) return false;
  return common_degree(g, bp.u, bp.w) >= 1 && common_degree(g, bp.w, bp.u) >= 1;
}

TwinEdgeSets twin_edge_sets(const Graph& b, const Bipartition& bp) {
  require_valid_bipartition(b, bp);
  return {twins_within(b, bp.u, bp.w), twins_within(b, bp.w, bp.u)};
}

std::uint64_t b_plus_count(const Graph& b, const Bipartition& bp) {
  const TwinEdgeSets twins = twin_edge_sets(b, bp);
  const std::size_t k = twins.e_u.size() + twins.e_w.size();
  if (k > kBPlusMaxTwinEdges) {
    throw std::invalid_argument(std::to_string(k) + " twin edges exceed the B+ enumeration cap of " +
                                std::to_string(kBPlusMaxTwinEdges));
  }
  return std::uint64_t{1} << k;
}

void b_plus_members(const Graph& b, const Bipartition& bp,
                    const std::function<void(const Graph&)>& visit) {
  const std::uint64_t count = b_plus_count(b, bp);
  TwinEdgeSets twins = twin_edge_sets(b, bp);
  std::vector<Edge> extra = std::move(twins.e_u);
  extra.insert(extra.end(), twins.e_w.begin(), twins.e_w.end());

  std::vector<std::uint64_t> base(b.order());
  for (int v : b.vertices()) base[v] = b.neighbors(v).bits();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::uint64_t> rows = base;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if ((mask >> i) & 1U) {
        auto [x, y] = extra[i];
        rows[x] |= std::uint64_t{1} << y;
        rows[y] |= std::uint64_t{1} << x;
      }
    }
    visit(Graph::from_rows(rows));
  }
}

std::optional<Bipartition> s_plus_witness(const Graph& g) {
  const int n = g.order();
  if (n > kSPlusMaxVertices) {
    throw std::invalid_argument("S+ membership supports at most " + std::to_string(kSPlusMaxVertices) +
                                " vertices");
  }
  const VertexSet all = g.vertices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    const VertexSet u = VertexSet((mask << 1) | 1U);
    const VertexSet w = all - u;
    if (w.empty()) continue;
    if (common_degree(g, u, w) < 1 || common_degree(g, w, u) < 1) continue;

    auto twins_ok = [&](VertexSet side, VertexSet opposite) {
      for (int x : side) {
        const VertexSet across = g.neighbors(x) & opposite;
        for (int y : g.neighbors(x) & side) {
          if ((g.neighbors(y) & opposite) != across) return false;
        }
      }
      return true;
    };
    if (twins_ok(u, w) && twins_ok(w, u)) return Bipartition{u, w};
  }
  return std::nullopt;
}

bool is_in_s_plus(const Graph& g) { return s_plus_witness(g).has_value(); }

const char* to_string(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::L_theorem:
      return "L_theorem";
    case ExtremalKind::Q_clique:
      return "Q_clique";
    case ExtremalKind::Q_cocktail:
      return "Q_cocktail";
    case ExtremalKind::bipartite_L:
      return "bipartite_L";
  }
  return "?";
}

namespace {

void require_gamma(const Graph& g, int gamma, int lowest) {
  if (gamma < lowest || gamma > g.order() - 1) {
    throw std::invalid_argument("gamma " + std::to_string(gamma) + " outside " + std::to_string(lowest) +
                                ".." + std::to_string(g.order() - 1));
  }
}

// components of the complement restricted to `core`
std::vector<VertexSet> co_components(const Graph& g, VertexSet core) {
  std::vector<VertexSet> out;
  VertexSet unseen = core;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= (core - g.neighbors(v)).without(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

}  // namespace

std::optional<ExtremalWitness> is_extremal_L(const Graph& g, int gamma) {
  require_gamma(g, gamma, 2);
  const int n = g.order();
  const VertexSet isolated = isolated_vertices(g);
  if (isolated.size() != gamma - 2) return std::nullopt;
  if (g.max_degree() > n - gamma) return std::nullopt;
  const VertexSet core = g.vertices() - isolated;
  const int m = core.size();
  if (m < 4) return std::nullopt;

  // A split has every cross pair as an edge iff no complement edge crosses it,
  // i.e. U is a union of complement components. Subset sum over their sizes.
  const std::vector<VertexSet> comps = co_components(g, core);
  std::vector<std::optional<std::uint64_t>> reach(m + 1);
  reach[0] = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const int size = comps[i].size();
    for (int s = m; s >= size; --s) {
      if (!reach[s] && reach[s - size]) reach[s] = *reach[s - size] | (std::uint64_t{1} << i);
    }
  }
  for (int s = 2; s <= m - 2; ++s) {
    if (!reach[s]) continue;
    VertexSet u;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if ((*reach[s] >> i) & 1U) u |= comps[i];
    }
    VertexSet w = core - u;
    if (!u.contains(core.front())) std::swap(u, w);
    return ExtremalWitness{ExtremalKind::L_theorem, isolated.size(), core, Bipartition{u, w}};
  }
  return std::nullopt;
}

std::optional<ExtremalWitness> is_extremal_Q(const Graph& g, int gamma) {
  require_gamma(g, gamma, 1);
  const int n = g.order();
  const VertexSet isolated = isolated_vertices(g);
  const VertexSet core = g.vertices() - isolated;
  const bool cocktail_allowed = gamma >= 2 && (n - gamma) % 2 == 0;

  if (n <= kCanonicalMaxVertices) {
    const std::string form = canonical_form(g);
    if (form == canonical_form(add_isolated(complete(n - gamma + 1), gamma - 1))) {
      return ExtremalWitness{ExtremalKind::Q_clique, isolated.size(), core, std::nullopt};
    }
    if (cocktail_allowed &&
        form == canonical_form(add_isolated(cocktail_party((n - gamma + 2) / 2), gamma - 2))) {
      return ExtremalWitness{ExtremalKind::Q_cocktail, isolated.size(), core, std::nullopt};
    }
    return std::nullopt;
  }

  // Beyond the canonical-labeling cap both families are recognised directly:
  // a clique core, or a core whose complement is a perfect matching.
  auto core_degree_is = [&](int d) {
    for (int v : core) {
      if (g.degree(v) != d) return false;
    }
    return true;
  };
  const int m = core.size();
  if (isolated.size() == gamma - 1 && m == n - gamma + 1 && core_degree_is(m - 1)) {
    return ExtremalWitness{ExtremalKind::Q_clique, isolated.size(), core, std::nullopt};
  }
  if (cocktail_allowed && isolated.size() == gamma - 2 && m == n - gamma + 2 && core_degree_is(m - 2)) {
    return ExtremalWitness{ExtremalKind::Q_cocktail, isolated.size(), core, std::nullopt};
  }
  return std::nullopt;
}

std::optional<ExtremalWitness> is_extremal_bipartite_L(const Graph& g, int gamma) {
  const auto bp = bipartition_of(g);
  if (!bp) throw std::invalid_argument("graph is not bipartite");
  require_gamma(g, gamma, 2);
  const VertexSet isolated = isolated_vertices(g);
  if (isolated.size() != gamma - 2) return std::nullopt;
  const VertexSet core = g.vertices() - isolated;
  const VertexSet u = bp->u & core;
  const VertexSet w = bp->w & core;
  if (u.size() < 2 || w.size() < 2) return std::nullopt;
  if (g.edge_count() != u.size() * w.size()) return std::nullopt;
  return ExtremalWitness{ExtremalKind::bipartite_L, isolated.size(), core, Bipartition{u, w}};
}

}  // namespace spectradom
