#pragma once

#include <array>
#include <utility>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

/// Ordered pairs (x, u), x != u, with N(x) ⊆ N[u]. Adjacency of x and u is not required.
std::vector<std::pair<int, int>> find_corners(const Graph& g);
bool has_corner(const Graph& g);

/// All graphs obtained by adding one vertex m (label g.order()) that is a
/// corner of the result, with every degree at most max_degree, pairwise
/// non-isomorphic. m always gets at least one neighbour.
std::vector<Graph> corner_extensions(const Graph& g, int max_degree);

/// Unordered triples {x < y < z}: pairwise non-adjacent with no common neighbour.
std::vector<std::array<int, 3>> strong_stable_sets(const Graph& g);

bool is_planar(const Graph& g);

/// Closed-neighbourhood domination N[x] ⊆ N[u]; the classical dismantling relation.
bool is_dominated(const Graph& g, int x, int u);

}  // namespace copwin
