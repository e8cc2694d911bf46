#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "copwin/canon.hpp"
#include "copwin/graph.hpp"

namespace copwin {

/// Verdict of the threshold classifier: an exact cop number up to k_max, or
/// "greater than k_max" (cop_number empty).
struct Classification {
  std::optional<int> cop_number;
  int k_max = 0;
  /// Rule chain used, e.g. "corner-strip+degree-lemma" or "game-engine".
  std::string evidence;

  bool exceeds() const { return !cop_number.has_value(); }
  /// Bucket index used by reports: the cop number, or k_max + 1 for "greater".
  int bucket() const { return cop_number.value_or(k_max + 1); }
  bool operator==(const Classification& o) const { return cop_number == o.cop_number && k_max == o.k_max; }
};

using Classifier = std::function<Classification(const Graph&)>;

/// Picks which corner to delete next from the current list of (x, u) pairs.
using CornerChooser = std::function<std::size_t(const std::vector<std::pair<int, int>>&)>;

/// Deletes corners until none remain (always the first listed corner, or the
/// one picked by `choose`). The result of a connected graph is connected and,
/// whenever its cop number is at least 2, has the same cop number as g.
Graph strip_corners(const Graph& g);
Graph strip_corners(const Graph& g, const CornerChooser& choose);

/// 2 when Δ >= n - 5; otherwise 3 when Δ > n - 11; otherwise nothing.
std::optional<int> degree_shortcut(const Graph& g);

/// Classifies every connected component with `leaf` and combines by maximum,
/// with "greater than k_max" absorbing. Throws std::invalid_argument on the empty graph.
Classification component_rule(const Graph& g, int k_max, const Classifier& leaf);

/// For K the union of all components of G - N[u] with c(K) <= k - 1, returns
/// G - K (then c(G) <= k iff c(G - K) <= k); nothing when no component qualifies.
std::optional<Graph> retract_component_rule(const Graph& g, int u, int k);

/// Exact cop number up to k_max (1..4) through components, corner stripping,
/// the degree bounds, and the game engine for whatever remains. When
/// `use_reductions` is false every component goes straight to the engine.
Classification classify(const Graph& g, int k_max, bool use_reductions = true);

/// Game-engine-only classification of a connected graph.
Classification classify_by_engine(const Graph& g, int k_max);

/// True iff g has no corner and, for every vertex u, G - N[u] is connected
/// with canonical form in `three_cop_list`.
bool m_filter(const Graph& g, const std::unordered_set<CanonicalForm>& three_cop_list);

}  // namespace copwin
