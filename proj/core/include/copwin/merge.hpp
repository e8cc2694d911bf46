#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "copwin/canon.hpp"
#include "copwin/graph.hpp"
#include "copwin/partial_graph.hpp"

namespace copwin {

/// Inputs of the merging procedure: build all connected graphs G of order n
/// and maximum degree delta = D2 with non-adjacent v1, v2 of degrees D1, D2
/// such that G - N[v2] is in L1 and G - N[v1] is in L2.
struct MergeConfig {
  int n = 0;
  int D1 = 0;
  int D2 = 0;
  int delta = 0;
  std::vector<Graph> L1;
  std::vector<Graph> L2;

  /// Check that every list member is 3-cop-win (disable only for toy
  /// instances that exercise the construction on arbitrary connected graphs).
  bool require_three_cop_win = true;
  /// Phase-2 populations larger than this are reduced by strong isomorphism
  /// after a step; the final step always deduplicates by isomorphism.
  std::size_t dedup_threshold = 1000;
  /// Turns every strong-isomorphism reduction off (Phase 1 siblings and
  /// Phase 2 steps) and keeps every final; for the losslessness check.
  bool dedup = true;
  /// Optional restriction of the run to some d1 values (empty = all).
  std::vector<int> only_d1;
  /// Optional restriction to G1 members of these maximum degrees (empty = all).
  std::vector<int> only_delta1;

  /// Throws std::invalid_argument on any violated input condition.
  void validate() const;
};

/// A completed graph with the vertices it was merged along.
struct MergeFinal {
  Graph graph;
  int v1 = -1;
  int v2 = -1;
  Provenance provenance;
};

/// One line of the report, keyed like the published tables.
struct MergeRow {
  int delta = 0;
  int n = 0;
  int D1 = 0;
  int delta1 = 0;
  int g1_count = 0;
  int d1 = 0;
  std::uint64_t bases = 0;
  std::uint64_t finals = 0;
  /// Finals with cop number 1, 2, 3 and at least 4.
  std::array<std::uint64_t, 4> by_cop_number{};
};

struct MergeReport {
  std::vector<MergeRow> rows;
  std::uint64_t base_count = 0;
  std::uint64_t final_count = 0;
  std::array<std::uint64_t, 4> by_cop_number{};

  /// One JSON object per row, newline separated.
  std::string to_jsonl() const;
};

struct MergeOptions {
  int threads = 1;
  bool classify_finals = true;
  std::function<void(const PartialGraph&)> on_base;
  std::function<void(const MergeFinal&)> on_final;
};

/// Stateful runner caching the per-list indices; const methods are safe to
/// call concurrently.
class Merger {
 public:
  explicit Merger(MergeConfig cfg);

  const MergeConfig& config() const { return cfg_; }

  /// All base graphs, in deterministic order.
  std::vector<PartialGraph> phase1() const;
  /// All completions of one base satisfying the output contract, pairwise
  /// non-isomorphic (unless dedup is off).
  std::vector<Graph> phase2(const PartialGraph& base) const;
  MergeReport run(const MergeOptions& options = {}) const;

  /// Whether canonical_form(h) belongs to L1 / L2.
  bool in_l1(const Graph& h) const;
  bool in_l2(const Graph& h) const;

 private:
  void bases_for(int g1_index, int d1, std::vector<PartialGraph>& out) const;

  MergeConfig cfg_;
  std::unordered_set<CanonicalForm> l1_forms_;
  std::unordered_set<CanonicalForm> l2_forms_;
  std::vector<std::vector<VertexSet>> l1_classes_;
  std::vector<std::vector<VertexSet>> l2_classes_;
  /// (d2, canonical form of G2 - N[v2]) -> (G2 index, class index).
  std::map<std::pair<int, CanonicalForm>, std::vector<std::pair<int, int>>> l2_index_;
};

std::vector<PartialGraph> phase1(const MergeConfig& cfg);
std::vector<Graph> phase2(const PartialGraph& base, const MergeConfig& cfg);
MergeReport run_merge(const MergeConfig& cfg, const MergeOptions& options = {});

/// Violations of the output contract for a final graph merged along (v1, v2);
/// empty when the graph passes. Recomputed directly from the graph.
std::vector<std::string> audit_final(const Merger& merger, const Graph& g, int v1, int v2);

/// Line-oriented key=value metadata for persisted bases and finals.
std::string sidecar_line(const PartialGraph& base);
std::string sidecar_line(const MergeFinal& final_graph);

}  // namespace copwin
