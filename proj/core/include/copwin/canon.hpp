#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "copwin/graph.hpp"

namespace copwin {

/// Vertex permutation; perm[v] is the image of v.
using Permutation = std::vector<int>;

/// Result of the canonical labeling search.
struct Labeling {
  /// order[p] is the vertex placed at canonical position p.
  std::vector<int> order;
  /// position[v] is the canonical position of vertex v.
  std::vector<int> position;
  /// Automorphisms discovered during the search; they generate the full
  /// (color-preserving) automorphism group.
  std::vector<Permutation> generators;
};

/// Canonical labeling by equitable partition refinement and backtracking.
/// `colors` (optional, one entry per vertex) restricts to color-preserving
/// relabelings; cells of the initial partition are ordered by color value.
Labeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// Canonical byte encoding: graph6 of the canonically relabelled graph,
/// followed by the color sequence in canonical order when colors are given.
/// Equal iff the graphs are isomorphic (color-preserving when colored).
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;

 private:
  std::string bytes_;
};

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});
/// The graph relabelled into canonical order.
Graph canonical_graph(const Graph& g);

/// orbit[v] = least vertex of the orbit of v under the group generated by `generators`.
std::vector<int> orbits_from_generators(int n, std::span<const Permutation> generators);

/// Every element of the group generated by `generators` (closure by BFS).
/// Throws std::length_error when the group exceeds `limit` elements.
std::vector<Permutation> group_elements(int n, std::span<const Permutation> generators,
                                        std::size_t limit = 1'000'000);

}  // namespace copwin

template <>
struct std::hash<copwin::CanonicalForm> {
  std::size_t operator()(const copwin::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes());
  }
};
