#include "copwin/named_graphs.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace copwin {

namespace {

const std::vector<std::pair<int, int>> kPetersenEdges = {
    {0, 1}, {0, 2}, {0, 3}, {1, 6}, {1, 7}, {2, 8}, {2, 4}, {4, 5},
    {4, 7}, {5, 6}, {8, 6}, {8, 9}, {9, 7}, {9, 3}, {3, 5},
};

// 1-based as drawn; a = 14, b = 7, c = 1.
const std::vector<std::pair<int, int>> kRobertsonEdges = {
    {1, 2},   {1, 5},   {1, 16},  {1, 19},  {2, 3},   {2, 9},   {2, 13},  {3, 4},   {3, 7},   {3, 18},
    {4, 5},   {4, 12},  {4, 15},  {5, 6},   {5, 10},  {6, 7},   {6, 13},  {6, 17},  {7, 8},   {7, 11},
    {8, 9},   {8, 15},  {8, 19},  {9, 10},  {9, 17},  {10, 11}, {10, 14}, {11, 12}, {11, 16}, {12, 13},
    {12, 19}, {13, 14}, {14, 15}, {14, 18}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
};

// 1-based as drawn.
const std::vector<std::pair<int, int>> kDodecahedralEdges = {
    {1, 14},  {1, 15},  {1, 16},  {2, 5},   {2, 6},   {2, 13},  {3, 7},   {3, 14},  {3, 19},  {4, 8},
    {4, 15},  {4, 20},  {5, 11},  {5, 19},  {6, 12},  {6, 20},  {7, 11},  {7, 16},  {8, 12},  {8, 16},
    {9, 10},  {9, 14},  {9, 17},  {10, 15}, {10, 18}, {11, 12}, {13, 17}, {13, 18}, {17, 19}, {18, 20},
};

Graph from_one_based(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

void check_cage(const Graph& g, int order, int degree, const char* name) {
  if (g.order() != order || !is_regular(g, degree) || girth(g) != 5 || !is_connected(g)) {
    throw std::logic_error(std::string("transcribed edge list fails self-check: ") + name);
  }
}

Graph petersen() {
  Graph g(10, kPetersenEdges);
  check_cage(g, 10, 3, "petersen");
  return g;
}

}  // namespace

int petersen_alpha(int i) {
  static constexpr int kAlpha[] = {0, 2, 8, 9, 3};
  if (i < 1 || i > 5) throw std::out_of_range("alpha index");
  return kAlpha[i - 1];
}

int petersen_beta(int i) {
  static constexpr int kBeta[] = {1, 4, 6, 7, 5};
  if (i < 1 || i > 5) throw std::out_of_range("beta index");
  return kBeta[i - 1];
}

CorneredPetersen cornered_petersen(int i, bool swap_roles) {
  static const std::vector<std::vector<int>> kAttach = {
      {}, {0}, {0, 1}, {2, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 2, 3},
  };
  if (i < 0 || i > 6) throw std::invalid_argument("cornered Petersen index must be in 0..6");
  CorneredPetersen out;
  if (i == 0) {
    out.graph = petersen();
    out.m = -1;
    out.m_prime = -1;
    return out;
  }
  Graph g(11, kPetersenEdges);
  for (int v : kAttach[i]) g.add_edge(10, v);
  out.graph = g;
  if (swap_roles) {
    if (i < 5) throw std::invalid_argument("m and m' are interchangeable only for i in {5, 6}");
    std::swap(out.m, out.m_prime);
  }
  return out;
}

Graph named_graph(NamedGraph which) {
  switch (which) {
    case NamedGraph::kPetersen:
      return petersen();
    case NamedGraph::kRobertson: {
      Graph g = from_one_based(19, kRobertsonEdges);
      check_cage(g, 19, 4, "robertson");
      return g;
    }
    case NamedGraph::kDodecahedral: {
      Graph g = from_one_based(20, kDodecahedralEdges);
      check_cage(g, 20, 3, "dodecahedral");
      return g;
    }
    default:
      return cornered_petersen(static_cast<int>(which) - static_cast<int>(NamedGraph::kCorneredPetersen1) + 1).graph;
  }
}

std::string to_string(NamedGraph which) {
  switch (which) {
    case NamedGraph::kPetersen:
      return "petersen";
    case NamedGraph::kRobertson:
      return "robertson";
    case NamedGraph::kDodecahedral:
      return "dodecahedral";
    default:
      return "cornered_petersen_" +
             std::to_string(static_cast<int>(which) - static_cast<int>(NamedGraph::kCorneredPetersen1) + 1);
  }
}

Graph named_graph(std::string_view name) {
  if (name == "petersen") return named_graph(NamedGraph::kPetersen);
  if (name == "robertson") return named_graph(NamedGraph::kRobertson);
  if (name == "dodecahedral") return named_graph(NamedGraph::kDodecahedral);
  constexpr std::string_view kPrefix = "cornered_petersen_";
  if (name.starts_with(kPrefix) && name.size() == kPrefix.size() + 1) {
    int i = name.back() - '0';
    if (i >= 1 && i <= 6) return cornered_petersen(i).graph;
  }
  throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

}  // namespace copwin
