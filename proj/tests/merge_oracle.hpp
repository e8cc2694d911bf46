#pragma once

// Brute-force restatement of the merge output contract, shared by the merge
// tests and the acceptance runner.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "copwin/canon.hpp"
#include "copwin/generate.hpp"
#include "copwin/merge.hpp"
#include "oracles.hpp"

namespace merge_oracle {

using namespace copwin;

// Isomorphism test by trying every bijection (lists in the toy instances have
// at most 7 vertices).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (oracle::is_isomorphism(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool in_list(const Graph& h, const std::vector<Graph>& list) {
  return std::any_of(list.begin(), list.end(), [&](const Graph& l) { return brute_isomorphic(h, l); });
}

inline Graph without_closed_neighbourhood(const Graph& g, int v) {
  return remove_vertices(g, g.closed_neighborhood(v));
}

// The output contract, restated directly: some non-adjacent pair (v1, v2) of
// degrees D1, D2 whose neighbourhood complements lie in L1 / L2, every other
// vertex of maximum degree has its complement in L1, and when D1 < D2 the
// maximum-degree vertices are pairwise adjacent and v1, v2 share a neighbour.
inline bool satisfies_contract(const Graph& g, const MergeConfig& cfg) {
  if (g.order() != cfg.n || g.max_degree() != cfg.delta || !oracle::connected(g)) return false;
  std::vector<int> top;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == cfg.delta) top.push_back(v);
  }
  if (cfg.D1 < cfg.D2) {
    for (int a : top) {
      for (int b : top) {
        if (a != b && !g.has_edge(a, b)) return false;
      }
    }
  }
  std::vector<int> in_l1(static_cast<std::size_t>(g.order()), -1);
  auto l1 = [&](int v) {
    int& memo = in_l1[static_cast<std::size_t>(v)];
    if (memo < 0) memo = in_list(without_closed_neighbourhood(g, v), cfg.L1) ? 1 : 0;
    return memo == 1;
  };
  for (int v2 = 0; v2 < g.order(); ++v2) {
    if (g.degree(v2) != cfg.D2 || !l1(v2)) continue;
    for (int v1 = 0; v1 < g.order(); ++v1) {
      if (v1 == v2 || g.has_edge(v1, v2) || g.degree(v1) != cfg.D1) continue;
      if (cfg.D1 < cfg.D2 && (g.neighbors(v1) & g.neighbors(v2)).empty()) continue;
      if (!in_list(without_closed_neighbourhood(g, v1), cfg.L2)) continue;
      bool others = true;
      for (int u : top) {
        if (u != v1 && u != v2 && !l1(u)) others = false;
      }
      if (others) return true;
    }
  }
  return false;
}

inline std::set<CanonicalForm> brute_force_finals(const MergeConfig& cfg) {
  std::set<CanonicalForm> out;
  generate({cfg.n, 1, cfg.delta, true}, [&](const Graph& g) {
    if (satisfies_contract(g, cfg)) out.insert(canonical_form(g));
  });
  return out;
}

inline std::set<CanonicalForm> merged_finals(const MergeConfig& cfg, std::size_t* raw = nullptr) {
  std::set<CanonicalForm> out;
  std::size_t count = 0;
  MergeOptions o;
  o.classify_finals = false;
  o.on_final = [&](const MergeFinal& f) {
    ++count;
    out.insert(canonical_form(f.graph));
  };
  run_merge(cfg, o);
  if (raw) *raw = count;
  return out;
}

inline MergeConfig toy(int n, int D1, int D2, Graph l1, Graph l2) {
  MergeConfig cfg;
  cfg.n = n;
  cfg.D1 = D1;
  cfg.D2 = D2;
  cfg.delta = D2;
  cfg.L1 = {std::move(l1)};
  cfg.L2 = {std::move(l2)};
  cfg.require_three_cop_win = false;
  return cfg;
}

inline std::vector<MergeConfig> toy_instances() {
  Graph bull(5);  // triangle 0-1-2 with pendants 3 (at 0) and 4 (at 1)
  bull.add_edge(0, 1);
  bull.add_edge(1, 2);
  bull.add_edge(0, 2);
  bull.add_edge(0, 3);
  bull.add_edge(1, 4);
  return {
      toy(8, 2, 2, path_graph(5), path_graph(5)),
      toy(9, 3, 3, cycle_graph(5), cycle_graph(5)),
      toy(9, 3, 3, path_graph(5), path_graph(5)),
      toy(9, 3, 3, bull, bull),
      toy(10, 3, 3, cycle_graph(6), cycle_graph(6)),
      toy(10, 3, 3, path_graph(6), path_graph(6)),
      toy(11, 3, 3, cycle_graph(7), cycle_graph(7)),
      toy(10, 4, 4, path_graph(5), path_graph(5)),
      toy(9, 2, 3, path_graph(5), path_graph(6)),
      toy(9, 2, 3, cycle_graph(5), cycle_graph(6)),
      toy(10, 3, 4, path_graph(5), path_graph(6)),
      toy(10, 2, 3, path_graph(6), path_graph(7)),
  };
}

}  // namespace merge_oracle
