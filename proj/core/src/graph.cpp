#include "copwin/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace copwin {

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." +
                                std::to_string(kMaxOrder));
  }
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_ || u == v) {
    throw std::invalid_argument("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= uint32_t{1} << v;
  adj_[v] |= uint32_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(uint32_t{1} << v);
  adj_[v] &= ~(uint32_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (order_ == 0) return 0;
  int best = kMaxOrder;
  for (int v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for (int v : VertexSet(adj_[u] & ~((uint32_t{2} << u) - 1))) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (order_ != other.order_) return false;
  return std::equal(adj_.begin(), adj_.begin() + order_, other.adj_.begin());
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_labels) {
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for (int v : keep) index[v] = next++;
  Graph h(next);
  if (old_labels) old_labels->assign(keep.begin(), keep.end());
  for (int v : keep) {
    for (int w : g.neighbors(v) & keep) {
      if (w > v) h.add_edge(index[v], index[w]);
    }
  }
  return h;
}

Graph remove_vertices(const Graph& g, VertexSet removed, std::vector<int>* old_labels) {
  return induced_subgraph(g, removed.complement(g.order()), old_labels);
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

void articulation_dfs(const Graph& g, int v, int parent, int& timer, std::array<int, kMaxOrder>& disc,
                      std::array<int, kMaxOrder>& low, VertexSet& cuts) {
  disc[v] = low[v] = ++timer;
  int children = 0;
  for (int w : g.neighbors(v)) {
    if (disc[w] == 0) {
      ++children;
      articulation_dfs(g, w, v, timer, disc, low, cuts);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cuts.insert(v);
    } else if (w != parent) {
      low[v] = std::min(low[v], disc[w]);
    }
  }
  if (parent < 0 && children > 1) cuts.insert(v);
}

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  std::array<int, kMaxOrder> disc{}, low{};
  VertexSet cuts;
  int timer = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (disc[v] == 0) articulation_dfs(g, v, -1, timer, disc, low, cuts);
  }
  return cuts;
}

int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    std::array<int, kMaxOrder> dist, parent;
    dist.fill(-1);
    parent.fill(-1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          int cycle = dist[v] + dist[w] + 1;
          if (best == 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

Graph relabel(const Graph& g, const std::vector<int>& new_label) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(new_label[u], new_label[v]);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(a.order() + u, a.order() + v);
  return h;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace copwin
