#include "spectradom/domination.hpp"

#include <array>
#include <stdexcept>

namespace spectradom {

bool is_dominating(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph order");
  VertexSet covered = s;
  for (int v : s) covered |= g.neighbors(v);
  return covered == g.vertices();
}

namespace {

class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : all_(g.vertices()) {
    for (int v : all_) closed_[v] = g.closed_neighbors(v);
  }

  DominationResult solve() {
    best_ = greedy();
    best_size_ = best_.size() + 1;  // force the search to certify an optimum itself
    branch(VertexSet{}, VertexSet{}, VertexSet{});
    return {best_size_, best_};
  }

 private:
  VertexSet greedy() const {
    VertexSet chosen, covered;
    while (covered != all_) {
      int pick = -1, gain = -1;
      for (int v : all_) {
        const int g = (closed_[v] - covered).size();
        if (g > gain) {
          gain = g;
          pick = v;
        }
      }
      chosen = chosen.with(pick);
      covered |= closed_[pick];
    }
    return chosen;
  }

  // ceil(|uncovered| / largest single-vertex coverage of the uncovered part)
  int lower_bound(VertexSet uncovered, VertexSet allowed) const {
    int widest = 0;
    for (int v : allowed) {
      const int c = (closed_[v] & uncovered).size();
      if (c > widest) widest = c;
    }
    return (uncovered.size() + widest - 1) / widest;
  }

  // Vertices in `excluded` were already tried by an earlier sibling branch and
  // may not be chosen in this subtree.
  void branch(VertexSet chosen, VertexSet covered, VertexSet excluded) {
    const VertexSet uncovered = all_ - covered;
    if (uncovered.empty()) {
      if (chosen.size() < best_size_) {
        best_size_ = chosen.size();
        best_ = chosen;
      }
      return;
    }
    if (chosen.size() + 1 >= best_size_) return;

    // uncovered vertex with the fewest ways to be covered
    const VertexSet allowed = all_ - excluded;
    int target = -1, options = kMaxVertices + 1;
    for (int v : uncovered) {
      const int c = (closed_[v] & allowed).size();
      if (c < options) {
        options = c;
        target = v;
      }
    }
    if (options == 0) return;
    if (chosen.size() + lower_bound(uncovered, allowed) >= best_size_) return;

    VertexSet tried;
    for (int w : closed_[target] & allowed) {
      branch(chosen.with(w), covered | closed_[w], excluded | tried);
      tried = tried.with(w);
    }
  }

  VertexSet all_;
  std::array<VertexSet, kMaxVertices> closed_{};
  VertexSet best_;
  int best_size_ = 0;
};

}  // namespace

DominationResult domination_number(const Graph& g) { return DominationSearch(g).solve(); }

}  // namespace spectradom
