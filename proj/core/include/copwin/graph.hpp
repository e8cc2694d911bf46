#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

namespace copwin {

inline constexpr int kMaxOrder = 32;

/// Set of vertices of a graph with at most kMaxOrder vertices, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    iterator() = default;
    explicit iterator(uint32_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    uint32_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(uint32_t bits) : bits_(bits) {}
  static constexpr VertexSet single(int v) { return VertexSet(uint32_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int front() const { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= uint32_t{1} << v; }
  void erase(int v) { bits_ &= ~(uint32_t{1} << v); }

  /// Complement relative to the vertex set of an order-n graph.
  constexpr VertexSet complement(int n) const { return VertexSet(range(n).bits_ & ~bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  uint32_t bits_ = 0;
};

/// Undirected simple graph on at most kMaxOrder vertices.
///
/// Adjacency is stored as one bit row per vertex; the relation is kept
/// symmetric and irreflexive by every mutator.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument when order is negative or exceeds kMaxOrder.
  explicit Graph(int order);
  Graph(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::range(order_); }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighborhood(int v) const { return VertexSet(adj_[v] | (uint32_t{1} << v)); }
  uint32_t row(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  int edge_count() const;
  int max_degree() const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

 private:
  int order_ = 0;
  std::array<uint32_t, kMaxOrder> adj_{};
};

/// Subgraph induced by `keep`, relabelled 0.. in increasing order of the
/// original labels. When `old_labels` is given it receives new -> old.
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_labels = nullptr);
/// G - S.
Graph remove_vertices(const Graph& g, VertexSet removed, std::vector<int>* old_labels = nullptr);

/// Components ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Component structure restricted to the vertices of `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
/// Vertices whose removal disconnects the component containing them.
VertexSet cut_vertices(const Graph& g);

/// Length of a shortest cycle, or 0 for forests.
int girth(const Graph& g);
bool is_regular(const Graph& g, int degree);

/// new_label[v] gives the image of v.
Graph relabel(const Graph& g, const std::vector<int>& new_label);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);

}  // namespace copwin
