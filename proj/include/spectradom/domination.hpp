#ifndef SPECTRADOM_DOMINATION_HPP
#define SPECTRADOM_DOMINATION_HPP

#include "spectradom/graph.hpp"

namespace spectradom {

/// A minimum dominating set and its size. Some texts call such a set
/// "minimal"; here "minimum" always means smallest cardinality.
struct DominationResult {
  int gamma = 0;
  VertexSet witness;
};

/// True iff every vertex outside s has a neighbour in s. Throws
/// std::out_of_range if s has members >= g.order().
bool is_dominating(const Graph& g, VertexSet s);

/// Exact domination number by branch and bound on the closed-neighbourhood
/// set cover. The witness is the first optimum reached in the fixed branching
/// order, so it is reproducible.
DominationResult domination_number(const Graph& g);

}  // namespace spectradom

#endif
