#pragma once

#include <cstdint>
#include <functional>

#include "copwin/graph.hpp"

namespace copwin {

inline constexpr int kMaxGeneratedOrder = 16;

/// Family of graphs to enumerate: connected graphs of order n with every
/// degree in [min_degree, max_degree].
struct GenSpec {
  int n = 1;
  int min_degree = 0;
  int max_degree = 0;
  bool connected_only = true;

  /// Throws std::invalid_argument unless 1 <= n <= kMaxGeneratedOrder,
  /// 0 <= min_degree <= max_degree < n, and connected_only is set.
  void validate() const;
};

struct GenOptions {
  /// Worker threads; 1 runs the search inline.
  int threads = 1;
  /// Search-tree level (graph order) at which subtrees become independent tasks.
  int split_level = 0;
  /// Only subtrees whose index at split_level is congruent to res modulo mod
  /// are explored (for sharding one run over several processes).
  int res = 0;
  int mod = 1;
};

using GraphSink = std::function<void(const Graph&)>;

/// Streams every isomorphism class of the family exactly once and returns the
/// count. Orderly generation by canonical vertex augmentation: a graph is
/// accepted from its parent G - v only when v is, up to automorphism, the
/// canonical deletion vertex among the non-cut vertices. The stream order is
/// deterministic for a fixed spec and options, including the threaded mode
/// (task outputs are released in task order). The sink is never called
/// concurrently.
std::uint64_t generate(const GenSpec& spec, const GraphSink& sink, const GenOptions& options = {});

}  // namespace copwin
