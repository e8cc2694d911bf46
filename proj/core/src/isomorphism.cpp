#include "copwin/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace copwin {

namespace {

// Stable colour refinement run jointly on both graphs so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& a, const Graph& b) {
  std::vector<int> ca(a.order()), cb(b.order());
  for (int v = 0; v < a.order(); ++v) ca[v] = a.degree(v);
  for (int v = 0; v < b.order(); ++v) cb[v] = b.degree(v);
  for (int round = 0; round < a.order() + 1; ++round) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> sig{c[v]};
      std::vector<int> around;
      for (int w : g.neighbors(v)) around.push_back(c[w]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      return sig;
    };
    std::vector<std::vector<int>> sa, sb;
    for (int v = 0; v < a.order(); ++v) sa.push_back(signature(a, ca, v));
    for (int v = 0; v < b.order(); ++v) sb.push_back(signature(b, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> na(a.order()), nb(b.order());
    for (int v = 0; v < a.order(); ++v) na[v] = ids[sa[v]];
    for (int v = 0; v < b.order(); ++v) nb[v] = ids[sb[v]];
    auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
    bool stable = classes(na) == classes(ca) && classes(nb) == classes(cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

}  // namespace

std::vector<Permutation> all_isomorphisms(const Graph& g1, const Graph& g2) {
  const int n = g1.order();
  if (n != g2.order() || g1.edge_count() != g2.edge_count()) return {};
  if (n == 0) return {Permutation{}};
  auto [c1, c2] = joint_refinement(g1, g2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return {};
  }

  // Static order: repeatedly take the vertex with most already-ordered neighbours.
  std::vector<int> order;
  VertexSet placed;
  while (static_cast<int>(order.size()) < n) {
    int best = -1, best_score = -1;
    for (int v : placed.complement(n)) {
      int score = (g1.neighbors(v) & placed).size();
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }

  std::vector<Permutation> out;
  Permutation image(n, -1);
  VertexSet mapped1, used2;

  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back(image);
      return;
    }
    const int v = order[depth];
    VertexSet want;
    for (int u : g1.neighbors(v) & mapped1) want.insert(image[u]);
    for (int w = 0; w < n; ++w) {
      if (used2.contains(w) || c2[w] != c1[v]) continue;
      if ((g2.neighbors(w) & used2) != want) continue;
      image[v] = w;
      mapped1.insert(v);
      used2.insert(w);
      self(self, depth + 1);
      mapped1.erase(v);
      used2.erase(w);
      image[v] = -1;
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<std::vector<VertexTuple>> automorphism_orbits(const Graph& g, const std::vector<VertexTuple>& tuples) {
  if (tuples.empty()) return {};
  const std::size_t arity = tuples.front().size();
  for (const VertexTuple& t : tuples) {
    if (t.size() != arity) throw std::invalid_argument("tuples of unequal arity");
    for (int v : t) {
      if (v < 0 || v >= g.order()) throw std::invalid_argument("tuple vertex out of range");
    }
  }
  const Labeling lab = canonical_labeling(g);

  // Close the tuple set under the generators, then union along generator images.
  std::map<VertexTuple, int> index;
  std::vector<VertexTuple> closure;
  for (const VertexTuple& t : tuples) {
    if (index.emplace(t, static_cast<int>(closure.size())).second) closure.push_back(t);
  }
  std::vector<int> root;
  for (std::size_t head = 0; head < closure.size(); ++head) {
    for (const Permutation& gen : lab.generators) {
      VertexTuple img(arity);
      for (std::size_t i = 0; i < arity; ++i) img[i] = gen[closure[head][i]];
      if (index.emplace(img, static_cast<int>(closure.size())).second) closure.push_back(img);
    }
  }
  root.resize(closure.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const Permutation& gen : lab.generators) {
      VertexTuple img(arity);
      for (std::size_t k = 0; k < arity; ++k) img[k] = gen[closure[i][k]];
      int a = find(static_cast<int>(i)), b = find(index.at(img));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<std::vector<VertexTuple>> orbits;
  std::map<int, std::size_t> slot;
  for (const VertexTuple& t : tuples) {
    int r = find(index.at(t));
    auto [it, fresh] = slot.emplace(r, orbits.size());
    if (fresh) orbits.emplace_back();
    orbits[it->second].push_back(t);
  }
  return orbits;
}

std::vector<VertexSet> vertex_order_classes(const Graph& g) {
  const Labeling lab = canonical_labeling(g);
  const std::vector<int> orbit = orbits_from_generators(g.order(), lab.generators);
  std::map<int, VertexSet> by_root;
  for (int v = 0; v < g.order(); ++v) by_root[orbit[v]].insert(v);
  std::vector<VertexSet> classes;
  for (auto& [root, members] : by_root) classes.push_back(members);
  auto key = [&](VertexSet cls) {
    int least = kMaxOrder;
    for (int v : cls) least = std::min(least, lab.position[v]);
    return std::pair{g.degree(cls.front()), least};
  };
  std::sort(classes.begin(), classes.end(), [&](VertexSet a, VertexSet b) { return key(a) < key(b); });
  return classes;
}

}  // namespace copwin
