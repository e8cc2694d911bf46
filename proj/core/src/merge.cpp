#include "copwin/merge.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "copwin/isomorphism.hpp"
#include "copwin/reductions.hpp"
#include "json.hpp"

namespace copwin {

namespace {

bool has_nonadjacent_pair_of_degree(const Graph& g, int degree) {
  VertexSet top;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == degree) top.insert(v);
  }
  for (int v : top) {
    if (!(top - g.closed_neighborhood(v)).empty()) return true;
  }
  return false;
}

bool contains(const std::vector<int>& values, int x) {
  return values.empty() || std::find(values.begin(), values.end(), x) != values.end();
}

std::vector<int> allowed_d1(const MergeConfig& cfg) {
  std::vector<int> out;
  const int top = cfg.D1 < cfg.D2 ? cfg.D1 - 1 : cfg.D1;
  for (int d1 = top; d1 >= 1; --d1) {
    if (contains(cfg.only_d1, d1)) out.push_back(d1);
  }
  return out;
}

std::string join(VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

void MergeConfig::validate() const {
  auto fail = [](const std::string& why) { throw std::invalid_argument("merge config: " + why); };
  if (D1 < 1 || D1 > D2) fail("need 1 <= D1 <= D2");
  if (delta != D2) fail("the maximum degree must equal D2");
  if (n > kMaxOrder || n <= D2 + 1) fail("n must exceed D2 + 1 and be at most 32");
  auto check_list = [&](const std::vector<Graph>& list, int order, const char* name) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Graph& g = list[i];
      const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
      if (g.order() != order) fail(where + " has order " + std::to_string(g.order()) + ", expected " + std::to_string(order));
      if (!is_connected(g)) fail(where + " is disconnected");
      if (g.max_degree() > delta) fail(where + " exceeds the maximum degree");
      if (require_three_cop_win && classify(g, 3).cop_number != 3) fail(where + " is not 3-cop-win");
    }
  };
  check_list(L1, n - D2 - 1, "L1");
  check_list(L2, n - D1 - 1, "L2");
  for (int d1 : only_d1) {
    if (d1 < 1 || d1 > D1) fail("only_d1 value out of range");
  }
}

Merger::Merger(MergeConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  for (const Graph& g : cfg_.L1) {
    l1_forms_.insert(canonical_form(g));
    l1_classes_.push_back(vertex_order_classes(g));
  }
  for (std::size_t j = 0; j < cfg_.L2.size(); ++j) {
    const Graph& g2 = cfg_.L2[j];
    l2_forms_.insert(canonical_form(g2));
    l2_classes_.push_back(vertex_order_classes(g2));
    const auto& classes = l2_classes_.back();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const int v2 = classes[c].front();
      const Graph rest = remove_vertices(g2, g2.closed_neighborhood(v2));
      l2_index_[{g2.degree(v2), canonical_form(rest)}].emplace_back(static_cast<int>(j), static_cast<int>(c));
    }
  }
}

bool Merger::in_l1(const Graph& h) const { return h.order() > 0 && l1_forms_.contains(canonical_form(h)); }
bool Merger::in_l2(const Graph& h) const { return h.order() > 0 && l2_forms_.contains(canonical_form(h)); }

void Merger::bases_for(int g1_index, int d1, std::vector<PartialGraph>& out) const {
  const Graph& g1 = cfg_.L1[static_cast<std::size_t>(g1_index)];
  const auto& classes = l1_classes_[static_cast<std::size_t>(g1_index)];
  const int delta = cfg_.delta;
  const int d2 = d1 + cfg_.D2 - cfg_.D1;
  const int fresh = cfg_.D2 - d2;
  const bool equal_degrees = cfg_.D1 == cfg_.D2;
  const int m1 = g1.order();

  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int v1 = classes[c].front();
    if (g1.degree(v1) != d1) continue;
    // With a vertex of full degree already in G1, only the maximal class can
    // serve as v1 (any other choice leaves a full-degree vertex in R).
    if (equal_degrees && g1.max_degree() == delta && (c + 1 != classes.size() || d1 != cfg_.D1)) continue;
    VertexSet restricted;
    if (equal_degrees) {
      for (std::size_t later = c + 1; later < classes.size(); ++later) restricted |= classes[later];
    } else {
      restricted = g1.vertices();
    }
    bool dead = false;
    for (int r : restricted) dead = dead || g1.degree(r) >= delta;
    if (dead) continue;

    std::vector<int> old1;
    const Graph h1 = remove_vertices(g1, g1.closed_neighborhood(v1), &old1);
    auto matches = l2_index_.find({d2, canonical_form(h1)});
    if (matches == l2_index_.end()) continue;

    for (auto [j, c2] : matches->second) {
      const Graph& g2 = cfg_.L2[static_cast<std::size_t>(j)];
      const int v2 = l2_classes_[static_cast<std::size_t>(j)][static_cast<std::size_t>(c2)].front();
      std::vector<int> old2;
      const Graph h2 = remove_vertices(g2, g2.closed_neighborhood(v2), &old2);

      // Merged layout: G1 vertices, then v2, its G2-neighbours, and the fresh
      // common neighbours.
      const int v2m = m1;
      std::vector<int> map2(static_cast<std::size_t>(g2.order()), -1);
      map2[static_cast<std::size_t>(v2)] = v2m;
      int next = v2m + 1;
      VertexSet only_v2;
      for (int w : g2.neighbors(v2)) {
        only_v2.insert(next);
        map2[static_cast<std::size_t>(w)] = next++;
      }
      VertexSet common;
      for (int f = 0; f < fresh; ++f) common.insert(next++);
      VertexSet only_v1 = g1.neighbors(v1);
      VertexSet outside = g1.vertices() - g1.closed_neighborhood(v1);

      std::set<CanonicalForm> siblings;
      for (const Permutation& phi : all_isomorphisms(h1, h2)) {
        for (std::size_t k = 0; k < phi.size(); ++k) {
          map2[static_cast<std::size_t>(old2[static_cast<std::size_t>(phi[k])])] = old1[k];
        }
        Graph merged(cfg_.n);
        for (auto [a, b] : g1.edges()) merged.add_edge(a, b);
        for (auto [a, b] : g2.edges()) {
          merged.add_edge(map2[static_cast<std::size_t>(a)], map2[static_cast<std::size_t>(b)]);
        }
        for (int f : common) {
          merged.add_edge(v1, f);
          merged.add_edge(v2m, f);
        }
        bool ok = true;
        for (int v = 0; v < cfg_.n && ok; ++v) {
          ok = merged.degree(v) <= delta && !(restricted.contains(v) && merged.degree(v) >= delta);
        }
        if (!ok) continue;

        PartialGraph base;
        base.graph = merged;
        base.cells = Partition(cfg_.n, {{CellLabel::kV1, VertexSet::single(v1)},
                                        {CellLabel::kOnlyV1, only_v1},
                                        {CellLabel::kOutside, outside},
                                        {CellLabel::kCommon, common},
                                        {CellLabel::kOnlyV2, only_v2},
                                        {CellLabel::kV2, VertexSet::single(v2m)}});
        base.restricted = restricted;
        base.cursor = 0;
        base.provenance = {g1_index, j, d1, d2, static_cast<int>(c), c2};
        base.v1 = v1;
        base.v2 = v2m;
        if (cfg_.dedup && !siblings.insert(base.strong_form()).second) continue;
        out.push_back(std::move(base));
      }
    }
  }
}

std::vector<PartialGraph> Merger::phase1() const {
  std::vector<PartialGraph> out;
  for (std::size_t i = 0; i < cfg_.L1.size(); ++i) {
    if (!contains(cfg_.only_delta1, cfg_.L1[i].max_degree())) continue;
    for (int d1 : allowed_d1(cfg_)) bases_for(static_cast<int>(i), d1, out);
  }
  return out;
}

std::vector<Graph> Merger::phase2(const PartialGraph& base) const {
  const int delta = cfg_.delta;
  const bool prune_pairs = cfg_.D1 < cfg_.D2;
  const VertexSet common = base.cells.members(CellLabel::kCommon);
  const VertexSet only_v2 = base.cells.members(CellLabel::kOnlyV2);
  const VertexSet only_v1 = base.cells.members(CellLabel::kOnlyV1);
  std::vector<int> steps = common.to_vector();
  for (int b : only_v2) steps.push_back(b);

  Partition cells = base.cells;
  VertexSet done;
  std::vector<Graph> population{base.graph};

  for (int a : steps) {
    const bool is_common = common.contains(a);
    std::vector<Graph> next;
    for (const Graph& g : population) {
      VertexSet candidates = is_common ? g.vertices() - VertexSet::single(base.v1) - VertexSet::single(base.v2) -
                                             VertexSet::single(a) - done
                                       : only_v1;
      candidates = candidates - g.neighbors(a);
      std::vector<int> partners;
      for (int w : candidates) {
        const int limit = base.restricted.contains(w) ? delta - 1 : delta;
        if (g.degree(w) + 1 <= limit) partners.push_back(w);
      }
      const int cap = delta - g.degree(a);
      // Every subset of partners of size at most cap.
      Graph work = g;
      auto choose = [&](auto&& self, std::size_t from, int budget) -> void {
        if (!(prune_pairs && has_nonadjacent_pair_of_degree(work, delta))) next.push_back(work);
        if (budget == 0) return;
        for (std::size_t k = from; k < partners.size(); ++k) {
          work.add_edge(a, partners[k]);
          self(self, k + 1, budget - 1);
          work.remove_edge(a, partners[k]);
        }
      };
      if (cap >= 0) choose(choose, 0, cap);
    }
    done.insert(a);
    cells.move(a, is_common ? CellLabel::kCommonDone : CellLabel::kOnlyV2Done);
    if (cfg_.dedup && next.size() > cfg_.dedup_threshold) {
      PartialGraph shape{Graph(), cells, base.restricted, 0, base.provenance, base.v1, base.v2};
      shape.graph = base.graph;
      const std::vector<int> colors = shape.colors();
      std::set<CanonicalForm> seen;
      std::vector<Graph> kept;
      for (Graph& g : next) {
        if (seen.insert(canonical_form(g, colors)).second) kept.push_back(std::move(g));
      }
      next.swap(kept);
    }
    population.swap(next);
  }

  std::vector<Graph> finals;
  std::set<CanonicalForm> seen;
  for (const Graph& g : population) {
    if (!is_connected(g)) continue;
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u) {
      if (u == base.v1 || u == base.v2 || g.degree(u) != delta) continue;
      ok = in_l1(remove_vertices(g, g.closed_neighborhood(u)));
    }
    if (!ok) continue;
    if (cfg_.dedup && !seen.insert(canonical_form(g)).second) continue;
    finals.push_back(g);
  }
  return finals;
}

MergeReport Merger::run(const MergeOptions& options) const {
  if (options.threads < 1) throw std::invalid_argument("threads must be positive");
  MergeReport report;
  std::map<std::pair<int, int>, MergeRow> rows;
  std::map<int, int> g1_count;
  for (std::size_t i = 0; i < cfg_.L1.size(); ++i) {
    const Graph& g1 = cfg_.L1[i];
    if (!contains(cfg_.only_delta1, g1.max_degree())) continue;
    ++g1_count[g1.max_degree()];
    for (int d1 : allowed_d1(cfg_)) {
      bool has_vertex = false;
      for (int v = 0; v < g1.order(); ++v) has_vertex = has_vertex || g1.degree(v) == d1;
      const bool shortcut_excluded = cfg_.D1 == cfg_.D2 && g1.max_degree() == cfg_.delta && d1 != cfg_.D1;
      if (has_vertex && !shortcut_excluded) {
        MergeRow& row = rows[{g1.max_degree(), d1}];
        row.delta = cfg_.delta;
        row.n = cfg_.n;
        row.D1 = cfg_.D1;
        row.delta1 = g1.max_degree();
        row.d1 = d1;
      }
    }
  }
  for (auto& [key, row] : rows) row.g1_count = g1_count[key.first];

  const std::vector<PartialGraph> bases = phase1();
  for (const PartialGraph& b : bases) {
    ++rows[{cfg_.L1[static_cast<std::size_t>(b.provenance.g1_index)].max_degree(), b.provenance.d1}].bases;
    if (options.on_base) options.on_base(b);
  }
  report.base_count = bases.size();

  struct Outcome {
    std::vector<Graph> finals;
    std::vector<int> buckets;
  };
  const std::size_t chunk = static_cast<std::size_t>(options.threads) * 8;
  for (std::size_t start = 0; start < bases.size(); start += chunk) {
    const std::size_t stop = std::min(bases.size(), start + chunk);
    std::vector<Outcome> outcomes(stop - start);
    std::atomic<std::size_t> cursor{start};
    auto work = [&]() {
      for (std::size_t i = cursor.fetch_add(1); i < stop; i = cursor.fetch_add(1)) {
        Outcome& out = outcomes[i - start];
        out.finals = phase2(bases[i]);
        if (options.classify_finals) {
          for (const Graph& g : out.finals) out.buckets.push_back(std::min(classify(g, 3).bucket(), 4));
        }
      }
    };
    if (options.threads == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < options.threads; ++t) pool.emplace_back(work);
      for (std::thread& th : pool) th.join();
    }
    for (std::size_t i = start; i < stop; ++i) {
      const PartialGraph& b = bases[i];
      const Outcome& out = outcomes[i - start];
      MergeRow& row = rows[{cfg_.L1[static_cast<std::size_t>(b.provenance.g1_index)].max_degree(), b.provenance.d1}];
      row.finals += out.finals.size();
      report.final_count += out.finals.size();
      for (int bucket : out.buckets) {
        ++row.by_cop_number[static_cast<std::size_t>(bucket - 1)];
        ++report.by_cop_number[static_cast<std::size_t>(bucket - 1)];
      }
      if (options.on_final) {
        for (const Graph& g : out.finals) options.on_final({g, b.v1, b.v2, b.provenance});
      }
    }
  }

  for (auto it = rows.rbegin(); it != rows.rend(); ++it) report.rows.push_back(it->second);
  return report;
}

std::vector<PartialGraph> phase1(const MergeConfig& cfg) { return Merger(cfg).phase1(); }

std::vector<Graph> phase2(const PartialGraph& base, const MergeConfig& cfg) { return Merger(cfg).phase2(base); }

MergeReport run_merge(const MergeConfig& cfg, const MergeOptions& options) { return Merger(cfg).run(options); }

std::string MergeReport::to_jsonl() const {
  std::string out;
  for (const MergeRow& r : rows) {
    nlohmann::ordered_json j;
    j["delta"] = r.delta;
    j["n"] = r.n;
    j["D1"] = r.D1;
    j["delta1"] = r.delta1;
    j["g1_count"] = r.g1_count;
    j["d1"] = r.d1;
    j["bases"] = r.bases;
    j["finals"] = r.finals;
    j["cop1"] = r.by_cop_number[0];
    j["cop2"] = r.by_cop_number[1];
    j["cop3"] = r.by_cop_number[2];
    j["cop4plus"] = r.by_cop_number[3];
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> audit_final(const Merger& merger, const Graph& g, int v1, int v2) {
  const MergeConfig& cfg = merger.config();
  std::vector<std::string> issues;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) issues.push_back(what);
  };
  require(g.order() == cfg.n, "order differs from n");
  require(is_connected(g), "graph is disconnected");
  require(g.max_degree() == cfg.delta, "maximum degree differs from D2");
  if (v1 < 0 || v2 < 0 || v1 >= g.order() || v2 >= g.order() || v1 == v2) {
    issues.push_back("invalid merge vertices");
    return issues;
  }
  require(!g.has_edge(v1, v2), "v1 and v2 are adjacent");
  require(g.degree(v1) == cfg.D1, "deg(v1) != D1");
  require(g.degree(v2) == cfg.D2, "deg(v2) != D2");
  require(merger.in_l1(remove_vertices(g, g.closed_neighborhood(v2))), "G - N[v2] not in L1");
  require(merger.in_l2(remove_vertices(g, g.closed_neighborhood(v1))), "G - N[v1] not in L2");
  for (int u = 0; u < g.order(); ++u) {
    if (u == v1 || u == v2 || g.degree(u) != cfg.delta) continue;
    require(merger.in_l1(remove_vertices(g, g.closed_neighborhood(u))),
            "G - N[" + std::to_string(u) + "] not in L1");
  }
  if (cfg.D1 < cfg.D2) {
    require(!has_nonadjacent_pair_of_degree(g, cfg.delta), "maximum-degree vertices do not form a clique");
    require(!(g.neighbors(v1) & g.neighbors(v2)).empty(), "v1 and v2 have no common neighbour");
  }
  return issues;
}

std::string sidecar_line(const PartialGraph& base) {
  std::ostringstream out;
  const Provenance& p = base.provenance;
  out << "kind=base g1=" << p.g1_index << " g2=" << p.g2_index << " d1=" << p.d1 << " d2=" << p.d2
      << " v1_class=" << p.v1_class << " v2_class=" << p.v2_class << " v1=" << base.v1 << " v2=" << base.v2;
  for (const LabeledCell& c : base.cells.cells()) out << " cell_" << to_string(c.label) << "=" << join(c.members);
  out << " restricted=" << join(base.restricted);
  return out.str();
}

std::string sidecar_line(const MergeFinal& f) {
  std::ostringstream out;
  const Provenance& p = f.provenance;
  out << "kind=final g1=" << p.g1_index << " g2=" << p.g2_index << " d1=" << p.d1 << " d2=" << p.d2
      << " v1_class=" << p.v1_class << " v2_class=" << p.v2_class << " v1=" << f.v1 << " v2=" << f.v2;
  return out.str();
}

}  // namespace copwin
