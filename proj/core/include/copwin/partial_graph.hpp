#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copwin/canon.hpp"
#include "copwin/graph.hpp"

namespace copwin {

/// Vertex types of a graph under construction by the merging procedure.
/// The two "done" labels mark vertices of N(v2) whose extra edges have
/// already been decided.
enum class CellLabel : uint8_t {
  kV1 = 0,           // {v1}
  kOnlyV1 = 1,       // N(v1) \ N(v2)
  kOutside = 2,      // (N[v1] ∪ N[v2])^c
  kCommonDone = 3,   // N(v1) ∩ N(v2), already processed
  kCommon = 4,       // N(v1) ∩ N(v2), not yet processed
  kOnlyV2Done = 5,   // N(v2) \ N(v1), already processed
  kOnlyV2 = 6,       // N(v2) \ N(v1), not yet processed
  kV2 = 7,           // {v2}
};

std::string to_string(CellLabel label);

struct LabeledCell {
  CellLabel label;
  VertexSet members;

  bool operator==(const LabeledCell&) const = default;
};

/// Ordered list of labelled, pairwise disjoint cells covering 0..n-1.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument when cells overlap or do not cover 0..n-1.
  Partition(int n, std::vector<LabeledCell> cells);

  const std::vector<LabeledCell>& cells() const { return cells_; }
  /// Members of the cell with this label (empty when absent).
  VertexSet members(CellLabel label) const;
  CellLabel label_of(int v) const { return label_of_[static_cast<std::size_t>(v)]; }
  int order() const { return static_cast<int>(label_of_.size()); }
  /// Moves v into the cell with label `to`, creating it (at the end) if needed.
  void move(int v, CellLabel to);

  bool operator==(const Partition&) const = default;

 private:
  std::vector<LabeledCell> cells_;
  std::vector<CellLabel> label_of_;
};

/// Where a base graph came from.
struct Provenance {
  int g1_index = -1;
  int g2_index = -1;
  int d1 = 0;
  int d2 = 0;
  /// Indices into vertex_order_classes of G1 and of G2.
  int v1_class = -1;
  int v2_class = -1;

  bool operator==(const Provenance&) const = default;
};

/// A graph under construction: (graph, ordered partition, restricted set).
struct PartialGraph {
  Graph graph;
  Partition cells;
  /// Vertices whose degree must stay below the maximum degree.
  VertexSet restricted;
  /// Number of N(v2) vertices already processed in Phase 2.
  int cursor = 0;
  Provenance provenance;
  int v1 = -1;
  int v2 = -1;

  /// Vertex colours encoding the cell label and the restricted flag.
  std::vector<int> colors() const;
  /// Colour-aware canonical form; equal iff strongly isomorphic.
  CanonicalForm strong_form() const;
};

/// True iff some isomorphism maps every cell of p1 onto the same-labelled cell
/// of p2 and maps R onto R. Throws std::invalid_argument when the two
/// partially-constructed graphs do not share order, cell sizes, and R size.
bool are_strongly_isomorphic(const PartialGraph& p1, const PartialGraph& p2);

}  // namespace copwin
