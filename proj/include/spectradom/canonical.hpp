#ifndef SPECTRADOM_CANONICAL_HPP
#define SPECTRADOM_CANONICAL_HPP

#include <cstdint>
#include <string>

#include "spectradom/graph.hpp"

namespace spectradom {

inline constexpr int kCanonicalMaxVertices = 10;

/**
 * Canonical labeling by exhaustive search.
 *
 * Vertices are first ordered by an isomorphism invariant (degree, then the
 * multiset of neighbour degrees); the search then tries every relabeling that
 * respects that order and keeps the one whose upper-triangle bit string
 * x01 x02 x12 x03 ... is lexicographically smallest. Twin vertices are
 * interchangeable, so only one of each twin class is branched on.
 *
 * The returned string is the graph6 encoding of the canonically relabeled
 * graph, so it doubles as a printable certificate. Throws
 * std::invalid_argument for graphs with more than 10 vertices.
 */
std::string canonical_form(const Graph& g);

/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

/// Degree-sequence screen followed by canonical form comparison; both graphs
/// must have at most 10 vertices.
bool is_isomorphic(const Graph& g, const Graph& h);

namespace detail {

/// Upper-triangle bit string in column order, first pair in the most
/// significant position. Requires n <= 11.
std::uint64_t triangle_code(const Graph& g);

/// Graph whose triangle code is `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// True iff vertex invariants are nondecreasing along 0..n-1. Every canonical
/// labeling has this property, so it is a cheap necessary test.
bool invariant_sorted(const Graph& g);

/// True iff g is its own canonical labeling.
bool is_canonical_labeling(const Graph& g);

}  // namespace detail

}  // namespace spectradom

#endif
