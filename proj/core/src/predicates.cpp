#include "copwin/predicates.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <set>

#include "copwin/canon.hpp"

namespace copwin {

std::vector<std::pair<int, int>> find_corners(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g.order(); ++x) {
    for (int u = 0; u < g.order(); ++u) {
      if (u != x && g.neighbors(x).is_subset_of(g.closed_neighborhood(u))) out.emplace_back(x, u);
    }
  }
  return out;
}

bool has_corner(const Graph& g) {
  for (int x = 0; x < g.order(); ++x) {
    for (int u = 0; u < g.order(); ++u) {
      if (u != x && g.neighbors(x).is_subset_of(g.closed_neighborhood(u))) return true;
    }
  }
  return false;
}

std::vector<Graph> corner_extensions(const Graph& g, int max_degree) {
  const int n = g.order();
  std::set<uint32_t> attachments;
  for (int u = 0; u < n; ++u) {
    const uint32_t closed = g.closed_neighborhood(u).bits();
    // Every nonempty subset of N[u].
    for (uint32_t s = closed; s; s = (s - 1) & closed) attachments.insert(s);
  }
  std::vector<Graph> out;
  std::set<CanonicalForm> seen;
  for (uint32_t s : attachments) {
    VertexSet attach(s);
    if (attach.size() > max_degree) continue;
    bool fits = true;
    for (int v : attach) fits = fits && g.degree(v) + 1 <= max_degree;
    if (!fits) continue;
    Graph h(n + 1);
    for (auto [a, b] : g.edges()) h.add_edge(a, b);
    for (int v : attach) h.add_edge(n, v);
    if (seen.insert(canonical_form(h)).second) out.push_back(h);
  }
  return out;
}

std::vector<std::array<int, 3>> strong_stable_sets(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (g.has_edge(x, z) || g.has_edge(y, z)) continue;
        if ((g.neighbors(x) & g.neighbors(y) & g.neighbors(z)).empty()) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

bool is_planar(const Graph& g) {
  const int n = g.order();
  const int m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_dominated(const Graph& g, int x, int u) {
  return x != u && g.closed_neighborhood(x).is_subset_of(g.closed_neighborhood(u));
}

}  // namespace copwin
