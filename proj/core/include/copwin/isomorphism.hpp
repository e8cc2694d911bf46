#pragma once

#include <vector>

#include "copwin/canon.hpp"
#include "copwin/graph.hpp"

namespace copwin {

/// Every edge-preserving bijection V(g1) -> V(g2); result[i][v] is the image of v.
/// Direct backtracking over colour-refinement classes, independent of the
/// canonical labeling search.
std::vector<Permutation> all_isomorphisms(const Graph& g1, const Graph& g2);

using VertexTuple = std::vector<int>;

/// Partitions `tuples` (all of equal arity) into Aut(g)-orbits. Orbits are
/// listed by first occurrence; tuples inside an orbit keep input order.
std::vector<std::vector<VertexTuple>> automorphism_orbits(const Graph& g, const std::vector<VertexTuple>& tuples);

/// Automorphism classes of vertices, sorted by degree ascending and then by
/// the least canonical position inside each class.
std::vector<VertexSet> vertex_order_classes(const Graph& g);

}  // namespace copwin
