#include "copwin/partial_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace copwin {

std::string to_string(CellLabel label) {
  switch (label) {
    case CellLabel::kV1:
      return "v1";
    case CellLabel::kOnlyV1:
      return "only_v1";
    case CellLabel::kOutside:
      return "outside";
    case CellLabel::kCommonDone:
      return "common_done";
    case CellLabel::kCommon:
      return "common";
    case CellLabel::kOnlyV2Done:
      return "only_v2_done";
    case CellLabel::kOnlyV2:
      return "only_v2";
    case CellLabel::kV2:
      return "v2";
  }
  return "?";
}

Partition::Partition(int n, std::vector<LabeledCell> cells) : cells_(std::move(cells)), label_of_(n) {
  VertexSet seen;
  for (const LabeledCell& c : cells_) {
    if (!(seen & c.members).empty()) throw std::invalid_argument("partition cells overlap");
    if (!c.members.is_subset_of(VertexSet::range(n))) throw std::invalid_argument("partition cell out of range");
    seen |= c.members;
    for (int v : c.members) label_of_[static_cast<std::size_t>(v)] = c.label;
  }
  if (seen != VertexSet::range(n)) throw std::invalid_argument("partition cells do not cover every vertex");
}

VertexSet Partition::members(CellLabel label) const {
  for (const LabeledCell& c : cells_) {
    if (c.label == label) return c.members;
  }
  return {};
}

void Partition::move(int v, CellLabel to) {
  for (LabeledCell& c : cells_) c.members.erase(v);
  auto it = std::find_if(cells_.begin(), cells_.end(), [&](const LabeledCell& c) { return c.label == to; });
  if (it == cells_.end()) {
    cells_.push_back({to, VertexSet::single(v)});
  } else {
    it->members.insert(v);
  }
  label_of_[static_cast<std::size_t>(v)] = to;
}

std::vector<int> PartialGraph::colors() const {
  std::vector<int> out(static_cast<std::size_t>(graph.order()));
  for (int v = 0; v < graph.order(); ++v) {
    out[static_cast<std::size_t>(v)] = static_cast<int>(cells.label_of(v)) * 2 + (restricted.contains(v) ? 1 : 0);
  }
  return out;
}

CanonicalForm PartialGraph::strong_form() const { return canonical_form(graph, colors()); }

bool are_strongly_isomorphic(const PartialGraph& p1, const PartialGraph& p2) {
  if (p1.graph.order() != p2.graph.order() || p1.cells.order() != p1.graph.order() ||
      p2.cells.order() != p2.graph.order()) {
    throw std::invalid_argument("partially-constructed graphs differ in order");
  }
  for (int label = 0; label <= static_cast<int>(CellLabel::kV2); ++label) {
    const auto l = static_cast<CellLabel>(label);
    if (p1.cells.members(l).size() != p2.cells.members(l).size()) {
      throw std::invalid_argument("partially-constructed graphs have different cell structure");
    }
  }
  if (p1.restricted.size() != p2.restricted.size()) {
    throw std::invalid_argument("partially-constructed graphs have restricted sets of different sizes");
  }
  return p1.strong_form() == p2.strong_form();
}

}  // namespace copwin
