#include "copwin/reductions.hpp"

#include <stdexcept>

#include "copwin/game.hpp"
#include "copwin/predicates.hpp"

namespace copwin {

namespace {

void check_k_max(int k_max) {
  if (k_max < 1 || k_max > kMaxCops) throw std::invalid_argument("k_max must be in 1..4");
}

std::optional<std::pair<int, int>> first_corner(const Graph& g) {
  for (int x = 0; x < g.order(); ++x) {
    for (int u = 0; u < g.order(); ++u) {
      if (u != x && g.neighbors(x).is_subset_of(g.closed_neighborhood(u))) return std::pair{x, u};
    }
  }
  return std::nullopt;
}

Classification engine_from(const Graph& g, int k_from, int k_max, std::string evidence) {
  for (int k = k_from; k <= k_max; ++k) {
    if (cops_can_win(g, k)) return {k, k_max, std::move(evidence)};
  }
  return {std::nullopt, k_max, std::move(evidence)};
}

// Connected input only.
Classification classify_connected(const Graph& g, int k_max) {
  if (g.order() == 1) return {1, k_max, "trivial"};
  const Graph h = strip_corners(g);
  if (h.order() == 1) {
    // Corner stripping only tells c(G) in {1, 2}; settle it on the original graph.
    if (cops_can_win(g, 1)) return {1, k_max, "corner-strip+k1-engine"};
    if (k_max < 2) return {std::nullopt, k_max, "corner-strip+k1-engine"};
    return {2, k_max, "corner-strip+k1-engine"};
  }
  // A cornerless graph on two or more vertices has no dominated vertex, so it
  // is not cop-win; hence c(H) >= 2 and c(G) = c(H).
  const std::string stripped = h.order() < g.order() ? "corner-strip+" : "";
  if (k_max < 2) return {std::nullopt, k_max, stripped + "cornerless"};
  const std::optional<int> bound = degree_shortcut(h);
  if (bound == 2) return {2, k_max, stripped + "degree-lemma"};
  if (bound == 3 && k_max >= 3) {
    if (cops_can_win(h, 2)) return {2, k_max, stripped + "degree-corollary+game-engine"};
    return {3, k_max, stripped + "degree-corollary+game-engine"};
  }
  return engine_from(h, 2, k_max, stripped + "game-engine");
}

}  // namespace

Graph strip_corners(const Graph& g) {
  Graph h = g;
  while (h.order() > 1) {
    auto corner = first_corner(h);
    if (!corner) break;
    h = remove_vertices(h, VertexSet::single(corner->first));
  }
  return h;
}

Graph strip_corners(const Graph& g, const CornerChooser& choose) {
  Graph h = g;
  while (h.order() > 1) {
    auto corners = find_corners(h);
    if (corners.empty()) break;
    const std::size_t pick = choose(corners);
    if (pick >= corners.size()) throw std::out_of_range("corner chooser returned an invalid index");
    h = remove_vertices(h, VertexSet::single(corners[pick].first));
  }
  return h;
}

std::optional<int> degree_shortcut(const Graph& g) {
  const int n = g.order();
  const int delta = g.max_degree();
  if (delta >= n - 5) return 2;
  if (delta > n - 11) return 3;
  return std::nullopt;
}

Classification component_rule(const Graph& g, int k_max, const Classifier& leaf) {
  check_k_max(k_max);
  if (g.order() == 0) throw std::invalid_argument("cannot classify the empty graph");
  const std::vector<VertexSet> components = connected_components(g);
  if (components.size() == 1) return leaf(g);
  Classification out{0, k_max, "component-max"};
  for (VertexSet comp : components) {
    const Classification part = leaf(induced_subgraph(g, comp));
    if (part.exceeds()) return {std::nullopt, k_max, "component-max"};
    out.cop_number = std::max(*out.cop_number, *part.cop_number);
  }
  return out;
}

std::optional<Graph> retract_component_rule(const Graph& g, int u, int k) {
  if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex out of range");
  if (k < 2) return std::nullopt;
  const VertexSet outside = g.closed_neighborhood(u).complement(g.order());
  VertexSet strip;
  for (VertexSet comp : connected_components(g, outside)) {
    const Classification c = classify(induced_subgraph(g, comp), std::min(k - 1, kMaxCops));
    if (!c.exceeds()) strip |= comp;
  }
  if (strip.empty()) return std::nullopt;
  return remove_vertices(g, strip);
}

Classification classify_by_engine(const Graph& g, int k_max) {
  check_k_max(k_max);
  return engine_from(g, 1, k_max, "game-engine");
}

Classification classify(const Graph& g, int k_max, bool use_reductions) {
  if (!use_reductions) {
    return component_rule(g, k_max, [k_max](const Graph& c) { return classify_by_engine(c, k_max); });
  }
  return component_rule(g, k_max, [k_max](const Graph& c) { return classify_connected(c, k_max); });
}

bool m_filter(const Graph& g, const std::unordered_set<CanonicalForm>& three_cop_list) {
  if (has_corner(g)) return false;
  for (int u = 0; u < g.order(); ++u) {
    const Graph rest = remove_vertices(g, g.closed_neighborhood(u));
    if (rest.order() == 0 || !is_connected(rest)) return false;
    if (!three_cop_list.contains(canonical_form(rest))) return false;
  }
  return true;
}

}  // namespace copwin
