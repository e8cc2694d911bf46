#include "copwin/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "copwin/canon.hpp"
#include "copwin/graph6.hpp"
#include "copwin/isomorphism.hpp"
#include "copwin/named_graphs.hpp"
#include "copwin/predicates.hpp"
#include "copwin/reductions.hpp"

namespace copwin {

namespace {

using json = nlohmann::ordered_json;

std::string canonical_graph6(const Graph& g) { return write_graph6(canonical_graph(g)); }

// Thrown from inside a sink to stop a source early.
struct StopStream {};

}  // namespace

// ---------------------------------------------------------------------------
// Sources

GraphSource generated_source(const GenSpec& spec, const GenOptions& options) {
  spec.validate();
  return [spec, options](const GraphSink& sink) { generate(spec, sink, options); };
}

GraphSource graph6_file_source(const std::string& path) {
  return [path](const GraphSink& sink) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open " + path);
      in = &file;
    }
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(*in, line)) {
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line_number == 1 && line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
      Graph g;
      try {
        g = parse_graph6(line);
      } catch (const Graph6Error& e) {
        throw Graph6Error(path + ":" + std::to_string(line_number) + ": " + e.what());
      }
      sink(g);
    }
  };
}

GraphSource vector_source(std::vector<Graph> graphs) {
  return [graphs = std::move(graphs)](const GraphSink& sink) {
    for (const Graph& g : graphs) sink(g);
  };
}

// ---------------------------------------------------------------------------
// Stream classification

std::string ClassReport::to_json(bool include_run) const {
  json j;
  j["spec"] = spec;
  j["k_max"] = k_max;
  j["total"] = total;
  json b = json::object();
  for (int i = 1; i <= k_max; ++i) b[std::to_string(i)] = bucket(i);
  b[">" + std::to_string(k_max)] = bucket(k_max + 1);
  j["buckets"] = b;
  j["witness_bucket"] = witness_bucket;
  j["witnesses"] = witnesses;
  j["complete"] = complete;
  if (include_run) {
    j["shards"] = shards;
    j["resumed_shards"] = resumed_shards;
    j["wall_seconds"] = wall_seconds;
  }
  return j.dump();
}

namespace {

struct ShardResult {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> buckets;
  std::vector<std::string> witnesses;
};

ShardResult classify_shard(const std::vector<Graph>& graphs, const ClassifyOptions& options) {
  const std::size_t nb = static_cast<std::size_t>(options.k_max) + 1;
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(graphs.size())));
  std::vector<ShardResult> partial(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> cursor{0};
  auto work = [&](ShardResult& out) {
    out.buckets.assign(nb, 0);
    for (std::size_t i = cursor.fetch_add(1); i < graphs.size(); i = cursor.fetch_add(1)) {
      const Graph& g = graphs[i];
      if (!is_connected(g)) throw std::invalid_argument("classify_stream expects connected graphs");
      const int b = classify(g, options.k_max, options.use_reductions).bucket();
      ++out.buckets[static_cast<std::size_t>(b - 1)];
      if (b == options.witness_bucket) out.witnesses.push_back(canonical_graph6(g));
    }
  };
  if (threads == 1) {
    work(partial[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(partial[static_cast<std::size_t>(t)]);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  ShardResult result;
  result.count = graphs.size();
  result.buckets.assign(nb, 0);
  for (const ShardResult& p : partial) {
    for (std::size_t i = 0; i < nb; ++i) result.buckets[i] += p.buckets[i];
    result.witnesses.insert(result.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  return result;
}

json ledger_header(const std::string& spec, const ClassifyOptions& options) {
  json h;
  h["type"] = "header";
  h["spec"] = spec;
  h["k_max"] = options.k_max;
  h["witness_bucket"] = options.witness_bucket;
  h["shard_size"] = options.shard_size;
  return h;
}

// Shards recorded in an existing ledger, contiguous from index 0.
std::vector<ShardResult> read_ledger(const std::string& path, const json& header) {
  std::vector<ShardResult> shards;
  std::ifstream in(path);
  if (!in) return shards;
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error&) {
      break;  // a torn last line from an interrupted write
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      if (j != header) throw std::invalid_argument("checkpoint " + path + " belongs to a different run");
      seen_header = true;
    } else if (type == "shard") {
      if (!seen_header) throw std::invalid_argument("checkpoint " + path + " has no header");
      if (j.at("index").get<std::size_t>() != shards.size()) break;
      ShardResult s;
      s.count = j.at("count").get<std::uint64_t>();
      s.buckets = j.at("buckets").get<std::vector<std::uint64_t>>();
      s.witnesses = j.at("witnesses").get<std::vector<std::string>>();
      shards.push_back(std::move(s));
    }
  }
  return shards;
}

}  // namespace

ClassReport classify_stream(const GraphSource& source, const std::string& spec, const ClassifyOptions& options) {
  if (options.k_max < 1 || options.k_max > kMaxCops) throw std::invalid_argument("k_max must be in 1..4");
  if (options.shard_size == 0) throw std::invalid_argument("shard_size must be positive");
  if (options.threads < 1) throw std::invalid_argument("threads must be positive");
  const auto start_time = std::chrono::steady_clock::now();

  ClassReport report;
  report.spec = spec;
  report.k_max = options.k_max;
  report.witness_bucket = options.witness_bucket;
  report.buckets.assign(static_cast<std::size_t>(options.k_max) + 1, 0);

  const json header = ledger_header(spec, options);
  std::vector<ShardResult> done;
  std::ofstream ledger;
  if (!options.checkpoint.empty()) {
    if (options.resume) done = read_ledger(options.checkpoint, header);
    // Rewrite the ledger with exactly the shards being kept, so a torn tail never survives.
    ledger.open(options.checkpoint, std::ios::trunc);
    if (!ledger) throw std::runtime_error("cannot write checkpoint " + options.checkpoint);
    ledger << header.dump() << '\n';
    for (std::size_t i = 0; i < done.size(); ++i) {
      json s;
      s["type"] = "shard";
      s["index"] = i;
      s["count"] = done[i].count;
      s["buckets"] = done[i].buckets;
      s["witnesses"] = done[i].witnesses;
      ledger << s.dump() << '\n';
    }
    ledger.flush();
  }
  std::uint64_t skip = 0;
  for (const ShardResult& s : done) skip += s.count;
  report.resumed_shards = done.size();

  std::vector<ShardResult> shards = std::move(done);
  std::vector<Graph> pending;
  pending.reserve(std::min<std::size_t>(options.shard_size, 1u << 20));
  std::uint64_t seen = 0;
  std::size_t new_shards = 0;

  auto flush = [&]() {
    ShardResult s = classify_shard(pending, options);
    pending.clear();
    if (ledger.is_open()) {
      json j;
      j["type"] = "shard";
      j["index"] = shards.size();
      j["count"] = s.count;
      j["buckets"] = s.buckets;
      j["witnesses"] = s.witnesses;
      ledger << j.dump() << '\n';
      ledger.flush();
    }
    shards.push_back(std::move(s));
    ++new_shards;
    if (options.max_new_shards != 0 && new_shards >= options.max_new_shards) throw StopStream{};
  };

  bool stopped = false;
  try {
    source([&](const Graph& g) {
      if (seen++ < skip) return;
      pending.push_back(g);
      if (pending.size() == options.shard_size) flush();
    });
    if (!pending.empty()) flush();
  } catch (const StopStream&) {
    stopped = true;
  }
  if (seen < skip) throw std::invalid_argument("checkpoint covers more graphs than the input holds");

  for (const ShardResult& s : shards) {
    report.total += s.count;
    for (std::size_t i = 0; i < report.buckets.size(); ++i) report.buckets[i] += s.buckets[i];
    report.witnesses.insert(report.witnesses.end(), s.witnesses.begin(), s.witnesses.end());
  }
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.shards = shards.size();
  report.complete = !stopped;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  if (ledger.is_open() && report.complete) {
    json j = json::parse(report.to_json(true));
    j["type"] = "report";
    ledger << j.dump() << '\n';
  }
  return report;
}

// ---------------------------------------------------------------------------
// Chasing lemmas and symmetry checks

std::vector<ChasingInstance> verify_chasing(ChasingLemma lemma, int i) {
  if (i < 0 || i > 6) throw std::invalid_argument("cornered Petersen index must be in 0..6");
  const CorneredPetersen cp = cornered_petersen(i);
  const Graph& g = cp.graph;
  VertexSet base = g.vertices();
  if (cp.m >= 0) base.erase(cp.m);
  const bool relaxed = i == 5 || i == 6;

  std::map<std::array<int, 3>, bool> cache;
  auto forced = [&](int x, int y, int z, std::vector<int>& robber_targets) {
    robber_targets = {x};
    if (relaxed && x == cp.m_prime) robber_targets.push_back(cp.m);
    const Side side = lemma == ChasingLemma::kStrongStable ? Side::kCops : Side::kRobber;
    const std::array<int, 3> key{x, std::min(y, z), std::max(y, z)};
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::vector<GameState> targets;
    for (int r : robber_targets) targets.push_back({{y, z}, r, side});
    const bool result = can_force(g, 2, targets);
    cache.emplace(key, result);
    return result;
  };

  std::vector<ChasingInstance> out;
  if (lemma == ChasingLemma::kStrongStable) {
    // The labels of P_i - m coincide with those of P_i because m is the last vertex.
    const Graph sub = induced_subgraph(g, base);
    for (const auto& t : strong_stable_sets(sub)) {
      for (int r = 0; r < 3; ++r) {
        ChasingInstance inst;
        inst.i = i;
        inst.x = t[static_cast<std::size_t>(r)];
        inst.y = t[static_cast<std::size_t>((r + 1) % 3)];
        inst.z = t[static_cast<std::size_t>((r + 2) % 3)];
        inst.forced = forced(inst.x, inst.y, inst.z, inst.robber_targets);
        out.push_back(std::move(inst));
      }
    }
  } else {
    for (int x : base) {
      for (int y : base) {
        for (int z : base) {
          if (x == y || x == z || y == z) continue;
          ChasingInstance inst;
          inst.i = i;
          inst.x = x;
          inst.y = y;
          inst.z = z;
          inst.forced = forced(x, y, z, inst.robber_targets);
          out.push_back(std::move(inst));
        }
      }
    }
  }
  return out;
}

TransitivityReport verify_transitivity() {
  const Graph g = named_graph(NamedGraph::kPetersen);
  TransitivityReport report;
  std::vector<VertexTuple> vertices;
  std::vector<VertexTuple> arcs;
  std::vector<VertexTuple> triples;
  for (int v = 0; v < g.order(); ++v) vertices.push_back({v});
  for (const auto& [u, v] : g.edges()) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  for (auto t : strong_stable_sets(g)) {
    std::sort(t.begin(), t.end());
    do {
      triples.push_back({t[0], t[1], t[2]});
    } while (std::next_permutation(t.begin(), t.end()));
  }
  report.arcs = static_cast<int>(arcs.size());
  report.strong_stable_triples = static_cast<int>(triples.size());
  report.vertex_orbits = static_cast<int>(automorphism_orbits(g, vertices).size());
  report.arc_orbits = static_cast<int>(automorphism_orbits(g, arcs).size());
  report.strong_stable_triple_orbits = static_cast<int>(automorphism_orbits(g, triples).size());
  return report;
}

std::vector<Graph> planar_filter(const std::vector<Graph>& graphs) {
  std::vector<Graph> out;
  std::copy_if(graphs.begin(), graphs.end(), std::back_inserter(out), [](const Graph& g) { return is_planar(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Three-cop-win lists

std::vector<Graph> derive_three_cop_win(int n, int max_degree, const std::vector<Graph>& previous,
                                        const GenOptions& options, DeriveStats* stats) {
  if (n < 1 || n > kMaxGeneratedOrder) throw std::invalid_argument("order out of generator range");
  DeriveStats local;
  std::map<std::string, Graph> found;  // canonical graph6 -> canonical graph
  for (const Graph& g : previous) {
    if (g.order() != n - 1) throw std::invalid_argument("previous list must have order n - 1");
    for (const Graph& h : corner_extensions(g, max_degree)) {
      ++local.extensions;
      Graph c = canonical_graph(h);
      found.emplace(write_graph6(c), c);
    }
  }
  if (n >= 3 && max_degree >= 2) {
    const GenSpec spec{n, 2, std::min(max_degree, n - 1), true};
    generate(
        spec,
        [&](const Graph& g) {
          ++local.scanned;
          if (has_corner(g)) return;
          ++local.cornerless;
          if (classify(g, 3).cop_number == 3) {
            ++local.found_cornerless;
            Graph c = canonical_graph(g);
            found.emplace(write_graph6(c), c);
          }
        },
        options);
  }
  if (stats) *stats = local;
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Routing

std::string to_string(Route r) {
  switch (r) {
    case Route::kSubcubic: return "subcubic-census";
    case Route::kDegreeCorollary: return "degree-corollary";
    case Route::kNeighbourhoodCase1: return "neighbourhood-structure(1)";
    case Route::kNeighbourhoodCase2: return "neighbourhood-structure(2)";
    case Route::kMerging: return "merging-campaign";
    case Route::kLargeDegreeCase1: return "order-19-large-degree(1)";
    case Route::kLargeDegreeCase2: return "order-19-large-degree(2)";
    case Route::kNotCovered: return "not-covered";
  }
  return "unknown";
}

Route route(int n, int delta) {
  if (n < 1 || n > 19 || delta < 0) return Route::kNotCovered;
  if (delta <= 3) return Route::kSubcubic;
  if (delta > n - 11) return Route::kDegreeCorollary;
  if (n <= 18 && delta == n - 11) return Route::kNeighbourhoodCase1;
  if (n <= 18 && delta == n - 12) return Route::kNeighbourhoodCase2;
  if (n == 19 && delta == 8) return Route::kLargeDegreeCase1;
  if (n == 19 && delta == 7) return Route::kLargeDegreeCase2;
  if ((delta == 4 && n >= 17) || (delta == 5 && n == 18)) return Route::kMerging;
  return Route::kNotCovered;
}

// ---------------------------------------------------------------------------
// Presets

bool PresetResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const PresetCheck& c) { return c.ok; });
}

std::string three_cop_win_list_path(const std::string& data_dir, int n, int max_degree) {
  return (std::filesystem::path(data_dir) /
          ("three_cop_win_n" + std::to_string(n) + "_d" + std::to_string(max_degree) + ".g6"))
      .string();
}

std::vector<PresetCheck> compare_merge_rows(const MergeReport& report, const std::vector<ExpectedMergeRow>& expected) {
  std::vector<PresetCheck> checks;
  auto check = [&](const std::string& label, std::uint64_t want, std::uint64_t got) {
    checks.push_back({label, std::to_string(want), std::to_string(got), want == got});
  };
  for (const ExpectedMergeRow& e : expected) {
    const MergeRow* row = nullptr;
    for (const MergeRow& r : report.rows) {
      if (r.delta1 == e.delta1 && r.d1 == e.d1) row = &r;
    }
    const MergeRow empty{};
    const MergeRow& r = row ? *row : empty;
    const std::string key = "delta1=" + std::to_string(e.delta1) + " d1=" + std::to_string(e.d1) + " ";
    check(key + "bases", e.bases, r.bases);
    check(key + "finals", e.finals, r.finals);
    static const char* names[] = {"cop1", "cop2", "cop3", "cop4plus"};
    for (std::size_t b = 0; b < 4; ++b) check(key + names[b], e.by_cop_number[b], r.by_cop_number[b]);
  }
  return checks;
}

namespace {

struct ClassifyExpectation {
  std::uint64_t total = 0;
  std::array<std::uint64_t, 3> low{};  // cop number 1, 2 and 3 (or ">= 3" when `at_least_three`)
  std::uint64_t above = 0;             // cop number >= 4
  bool at_least_three = false;
};

struct PresetDef {
  enum class Kind { kClassify, kDerive, kMerge };
  std::string name;
  std::string description;
  Kind kind = Kind::kClassify;
  GenSpec spec;
  std::optional<ClassifyExpectation> classify_expected;
  // Derive: order and degree bound; expected list size and split by maximum degree.
  std::optional<std::uint64_t> derive_expected;
  std::map<int, std::uint64_t> derive_split;
  // Merge.
  int n = 0, D1 = 0, D2 = 0, l1_order = 0, l2_order = 0, l1_degree = 0, l2_degree = 0;
  bool petersen_lists = false;
  std::vector<ExpectedMergeRow> merge_expected;
  bool finals_all_robertson = false;
  bool finals_at_most_three = false;
};

ExpectedMergeRow mrow(int delta1, int d1, std::uint64_t bases, std::uint64_t finals,
                      std::array<std::uint64_t, 4> cops = {}) {
  return {delta1, d1, bases, finals, cops};
}

const std::vector<PresetDef>& preset_table() {
  static const std::vector<PresetDef> table = [] {
    std::vector<PresetDef> t;
    // Subcubic census: n, total, c1, c2, c3, c4+.
    const std::array<std::array<std::uint64_t, 6>, 7> subcubic{{
        {10, 458, 7, 450, 1, 0},
        {11, 1353, 12, 1341, 0, 0},
        {12, 4566, 21, 4543, 2, 0},
        {13, 15530, 35, 15495, 0, 0},
        {14, 56973, 63, 56901, 9, 0},
        {15, 214763, 114, 214642, 7, 0},
        {16, 848895, 211, 848622, 62, 0},
    }};
    for (const auto& r : subcubic) {
      PresetDef p;
      const int n = static_cast<int>(r[0]);
      p.name = "table3-n" + std::to_string(n);
      p.description = "classify connected graphs of order " + std::to_string(n) + " with min degree >= 2, max degree <= 3";
      p.kind = PresetDef::Kind::kClassify;
      p.spec = {n, 2, 3, true};
      p.classify_expected = ClassifyExpectation{r[1], {r[2], r[3], r[4]}, r[5], false};
      t.push_back(p);
    }
    // Degree-bounded census: only the rows with complete counts.
    struct Row {
      int n, delta;
      std::uint64_t total, c1, c2, c3;
    };
    for (const Row& r : {Row{11, 5, 21503340, 69310, 21434024, 6}, Row{12, 5, 471142472, 295377, 470846922, 173},
                         Row{13, 4, 68531618, 73876, 68456637, 1105}, Row{14, 4, 748592936, 247022, 748329391, 16523}}) {
      PresetDef p;
      p.name = "table2-n" + std::to_string(r.n) + "-d" + std::to_string(r.delta);
      p.description = "classify all connected graphs of order " + std::to_string(r.n) + " with max degree <= " +
                      std::to_string(r.delta) + " (long run)";
      p.kind = PresetDef::Kind::kClassify;
      p.spec = {r.n, 1, r.delta, true};
      p.classify_expected = ClassifyExpectation{r.total, {r.c1, r.c2, r.c3}, 0, true};
      t.push_back(p);
    }
    // Three-cop-win lists with maximum degree at most 4.
    for (int d : {4, 5}) {
      PresetDef p;
      p.name = "three-cop-win-n11-d" + std::to_string(d);
      p.description = "derive the 3-cop-win graphs of order 11, max degree <= " + std::to_string(d) +
                      ", from the Petersen graph";
      p.kind = PresetDef::Kind::kDerive;
      p.spec = {11, 2, d, true};
      if (d == 5) p.derive_expected = 6;
      t.push_back(p);
    }
    for (auto [n, total] : {std::pair{12, std::uint64_t{80}}, {13, 1105}, {14, 16523}}) {
      PresetDef p;
      p.name = "three-cop-win-n" + std::to_string(n) + "-d4";
      p.description = "derive the 3-cop-win graphs of order " + std::to_string(n) +
                      ", max degree <= 4, from the order-" + std::to_string(n - 1) + " list";
      p.kind = PresetDef::Kind::kDerive;
      p.spec = {n, 2, 4, true};
      p.derive_expected = total;
      if (n == 12) p.derive_split = {{4, 78}, {3, 2}};
      if (n == 13) p.derive_split = {{4, 1105}};
      if (n == 14) p.derive_split = {{4, 16514}, {3, 9}};
      t.push_back(p);
    }
    // Merges.
    {
      PresetDef p;
      p.name = "petersen-merge-n15";
      p.description = "merge two Petersen graphs into order 15, D1 = D2 = 4; audit finals and check c <= 3";
      p.kind = PresetDef::Kind::kMerge;
      p.n = 15;
      p.D1 = p.D2 = 4;
      p.petersen_lists = true;
      p.finals_at_most_three = true;
      t.push_back(p);
    }
    auto merge = [&](std::string name, std::string description, int n, int D1, int D2, int l1_order, int l1_degree,
                     int l2_order, int l2_degree, std::vector<ExpectedMergeRow> rows) {
      PresetDef p;
      p.name = std::move(name);
      p.description = std::move(description);
      p.kind = PresetDef::Kind::kMerge;
      p.n = n;
      p.D1 = D1;
      p.D2 = D2;
      p.l1_order = l1_order;
      p.l1_degree = l1_degree;
      p.l2_order = l2_order;
      p.l2_degree = l2_degree;
      p.merge_expected = std::move(rows);
      t.push_back(std::move(p));
      return &t.back();
    };
    merge("merge-n17-d4", "order 17, D1 = D2 = 4, lists of order 12", 17, 4, 4, 12, 4, 12, 4,
          {mrow(4, 4, 123, 0), mrow(3, 3, 10, 0)});
    merge("merge-n18-d4", "order 18, D1 = D2 = 4, lists of order 13", 18, 4, 4, 13, 4, 13, 4, {mrow(4, 4, 1668, 0)});
    merge("merge-n19-d4", "order 19, D1 = D2 = 4, lists of order 14", 19, 4, 4, 14, 4, 14, 4,
          {mrow(4, 4, 33785, 3, {0, 0, 0, 3}), mrow(3, 3, 911, 0)})
        ->finals_all_robertson = true;
    merge("merge-n18-d5", "order 18, D1 = D2 = 5, lists of order 12 with max degree <= 5 (long run)", 18, 5, 5, 12, 5,
          12, 5,
          {mrow(5, 5, 14232, 24416, {0, 5484, 18932, 0}), mrow(4, 4, 10062, 39318, {0, 7410, 31908, 0}),
           mrow(4, 3, 534, 18645, {0, 3455, 15190, 0}), mrow(4, 2, 111, 24238, {0, 1494, 22744, 0}),
           mrow(4, 1, 88, 698809, {0, 82882, 615927, 0}), mrow(3, 3, 22, 12778, {0, 4960, 7818, 0})});
    merge("merge-n18-d5-D1-4", "order 18, D1 = 4 < D2 = 5, G1 of order 12, G2 of order 13 (long run)", 18, 4, 5, 12,
          4, 13, 4,
          {mrow(4, 3, 993, 41872, {0, 9299, 32573, 0}), mrow(4, 2, 504, 70224, {0, 4278, 65946, 0}),
           mrow(4, 1, 1138, 3350712, {0, 417144, 2933568, 0}), mrow(3, 3, 153, 41006, {0, 15440, 25566, 0})});
    merge("merge-n18-d5-D1-3", "order 18, D1 = 3 < D2 = 5, G1 of order 12, G2 of order 14 (long run)", 18, 3, 5, 12,
          4, 14, 4,
          {mrow(4, 2, 2419, 83509, {0, 4187, 79322, 0}), mrow(4, 1, 10582, 6293171, {0, 786173, 5506998, 0})});
    return t;
  }();
  return table;
}

std::vector<Graph> load_list(const PresetContext& ctx, int n, int max_degree) {
  const std::string path = three_cop_win_list_path(ctx.data_dir, n, max_degree);
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("missing list file " + path + "; create it with `copwin derive --n " + std::to_string(n) +
                             " --max-deg " + std::to_string(max_degree) + "` or the three-cop-win presets");
  }
  return read_graph6_file(path);
}

PresetResult run_classify_preset(const PresetDef& p, const PresetContext& ctx) {
  PresetResult result;
  result.name = p.name;
  ClassifyOptions options;
  options.threads = ctx.threads;
  const std::string spec = "n=" + std::to_string(p.spec.n) + ",min=" + std::to_string(p.spec.min_degree) +
                           ",max=" + std::to_string(p.spec.max_degree);
  const ClassReport r = classify_stream(generated_source(p.spec), spec, options);
  result.report = r.to_json(true) + "\n";
  if (p.classify_expected) {
    const ClassifyExpectation& e = *p.classify_expected;
    auto check = [&](const std::string& label, std::uint64_t want, std::uint64_t got) {
      result.checks.push_back({label, std::to_string(want), std::to_string(got), want == got});
    };
    check("graphs", e.total, r.total);
    check("cop1", e.low[0], r.bucket(1));
    check("cop2", e.low[1], r.bucket(2));
    if (e.at_least_three) {
      check("cop3plus", e.low[2], r.bucket(3) + r.bucket(4));
    } else {
      check("cop3", e.low[2], r.bucket(3));
      check("cop4plus", e.above, r.bucket(4));
    }
  }
  if (p.spec.n == 11 && p.spec.max_degree == 5) {
    // The 3-cop-win graphs must be exactly the corner extensions of the Petersen graph.
    std::vector<std::string> expected;
    for (const Graph& h : corner_extensions(named_graph(NamedGraph::kPetersen), 5)) {
      expected.push_back(canonical_graph6(h));
    }
    std::sort(expected.begin(), expected.end());
    result.checks.push_back({"cop3 graphs are the cornered Petersen graphs", "true",
                             r.witnesses == expected ? "true" : "false", r.witnesses == expected});
  }
  return result;
}

PresetResult run_derive_preset(const PresetDef& p, const PresetContext& ctx) {
  PresetResult result;
  result.name = p.name;
  const int n = p.spec.n;
  const int d = p.spec.max_degree;
  std::vector<Graph> previous;
  if (n == 11) {
    previous = {named_graph(NamedGraph::kPetersen)};
  } else {
    previous = load_list(ctx, n - 1, d);
  }
  DeriveStats stats;
  const std::vector<Graph> list = derive_three_cop_win(n, d, previous, {}, &stats);
  json j;
  j["n"] = n;
  j["max_degree"] = d;
  j["extensions"] = stats.extensions;
  j["scanned"] = stats.scanned;
  j["cornerless"] = stats.cornerless;
  j["found_cornerless"] = stats.found_cornerless;
  j["graphs"] = list.size();
  result.report = j.dump() + "\n";
  if (p.derive_expected) {
    result.checks.push_back({"graphs", std::to_string(*p.derive_expected), std::to_string(list.size()),
                             *p.derive_expected == list.size()});
  }
  for (const auto& [delta1, want] : p.derive_split) {
    const auto got = static_cast<std::uint64_t>(
        std::count_if(list.begin(), list.end(), [&](const Graph& g) { return g.max_degree() == delta1; }));
    result.checks.push_back(
        {"graphs with max degree " + std::to_string(delta1), std::to_string(want), std::to_string(got), want == got});
  }
  if (ctx.log) *ctx.log << "derived " << list.size() << " graphs\n";
  // Persist next to the other lists so later presets can use it.
  std::filesystem::create_directories(ctx.data_dir);
  write_graph6_file(three_cop_win_list_path(ctx.data_dir, n, d), list);
  return result;
}

PresetResult run_merge_preset(const PresetDef& p, const PresetContext& ctx) {
  PresetResult result;
  result.name = p.name;
  MergeConfig cfg;
  cfg.n = p.n;
  cfg.D1 = p.D1;
  cfg.D2 = p.D2;
  cfg.delta = p.D2;
  if (p.petersen_lists) {
    cfg.L1 = cfg.L2 = {named_graph(NamedGraph::kPetersen)};
  } else {
    cfg.L1 = load_list(ctx, p.l1_order, p.l1_degree);
    cfg.L2 = p.l2_order == p.l1_order && p.l2_degree == p.l1_degree ? cfg.L1 : load_list(ctx, p.l2_order, p.l2_degree);
  }
  const Merger merger(cfg);
  MergeOptions options;
  options.threads = ctx.threads;
  std::uint64_t audit_failures = 0;
  std::uint64_t non_robertson = 0;
  const CanonicalForm robertson = canonical_form(named_graph(NamedGraph::kRobertson));
  options.on_final = [&](const MergeFinal& f) {
    if (!audit_final(merger, f.graph, f.v1, f.v2).empty()) ++audit_failures;
    if (canonical_form(f.graph) != robertson) ++non_robertson;
  };
  const MergeReport report = merger.run(options);
  result.report = report.to_jsonl();
  result.checks = compare_merge_rows(report, p.merge_expected);
  result.checks.push_back({"finals failing the output audit", "0", std::to_string(audit_failures), audit_failures == 0});
  if (p.finals_at_most_three) {
    result.checks.push_back({"finals with cop number >= 4", "0", std::to_string(report.by_cop_number[3]),
                             report.by_cop_number[3] == 0});
  }
  if (p.finals_all_robertson) {
    result.checks.push_back({"finals not isomorphic to the Robertson graph", "0", std::to_string(non_robertson),
                             non_robertson == 0});
  }
  return result;
}

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  for (const PresetDef& p : preset_table()) {
    const bool expected = p.classify_expected || p.derive_expected || !p.merge_expected.empty();
    out.push_back({p.name, p.description, expected});
  }
  return out;
}

PresetResult run_preset(const std::string& name, const PresetContext& context) {
  for (const PresetDef& p : preset_table()) {
    if (p.name != name) continue;
    switch (p.kind) {
      case PresetDef::Kind::kClassify: return run_classify_preset(p, context);
      case PresetDef::Kind::kDerive: return run_derive_preset(p, context);
      case PresetDef::Kind::kMerge: return run_merge_preset(p, context);
    }
  }
  throw std::invalid_argument("unknown preset " + name);
}

}  // namespace copwin
