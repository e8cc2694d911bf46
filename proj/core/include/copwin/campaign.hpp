#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "copwin/game.hpp"
#include "copwin/generate.hpp"
#include "copwin/graph.hpp"
#include "copwin/merge.hpp"

namespace copwin {

// ---------------------------------------------------------------------------
// Stream classification

/// Feeds graphs, in a fixed order, to the sink it is given.
using GraphSource = std::function<void(const GraphSink&)>;

/// Graphs of a generated family.
GraphSource generated_source(const GenSpec& spec, const GenOptions& options = {});
/// Records of a graph6 file ("-" reads standard input). A malformed record
/// raises Graph6Error naming the offending line.
GraphSource graph6_file_source(const std::string& path);
/// Graphs held in memory.
GraphSource vector_source(std::vector<Graph> graphs);

struct ClassifyOptions {
  int k_max = 3;
  bool use_reductions = true;
  /// Bucket whose members are listed in the report (cop number, or k_max + 1
  /// for "greater than k_max"); 0 lists nothing.
  int witness_bucket = 3;
  int threads = 1;
  /// Graphs per checkpointed shard.
  std::size_t shard_size = 100'000;
  /// Append-only JSON-lines ledger; empty disables checkpointing.
  std::string checkpoint;
  /// Continue from the shards already recorded in `checkpoint`.
  bool resume = false;
  /// Stop after this many newly processed shards (0 = run to the end); the
  /// report is then marked incomplete. Used to simulate interrupted runs.
  std::size_t max_new_shards = 0;
};

/// Tally of a classified stream.
struct ClassReport {
  std::string spec;
  int k_max = 3;
  std::uint64_t total = 0;
  /// buckets[b - 1] counts graphs of cop number b; buckets[k_max] counts "greater".
  std::vector<std::uint64_t> buckets;
  int witness_bucket = 0;
  /// graph6 of the canonically labelled members of witness_bucket, sorted.
  std::vector<std::string> witnesses;
  bool complete = true;
  // Run metadata, excluded from the deterministic part of the report.
  std::uint64_t shards = 0;
  std::uint64_t resumed_shards = 0;
  double wall_seconds = 0.0;

  std::uint64_t bucket(int b) const { return buckets.at(static_cast<std::size_t>(b - 1)); }
  /// JSON object. Without `include_run` the text depends only on the input
  /// stream and the classification settings.
  std::string to_json(bool include_run = false) const;
  bool operator==(const ClassReport& o) const {
    return spec == o.spec && k_max == o.k_max && total == o.total && buckets == o.buckets &&
           witness_bucket == o.witness_bucket && witnesses == o.witnesses && complete == o.complete;
  }
};

/// Classifies every graph of `source` (each must be connected) and tallies
/// cop numbers. Results do not depend on thread count or shard size. With a
/// checkpoint, each finished shard is appended to the ledger before the next
/// starts; a failing source leaves the finished shards resumable.
ClassReport classify_stream(const GraphSource& source, const std::string& spec, const ClassifyOptions& options = {});

// ---------------------------------------------------------------------------
// Chasing lemmas and symmetry checks on the (cornered) Petersen graphs

enum class ChasingLemma {
  /// Robber on x, cops on {y, z}, cops to move; {x, y, z} strong stable in P_i - m.
  kStrongStable,
  /// Robber on x, cops on {y, z}, robber to move; any distinct x, y, z of P_i - m.
  kAnyTriple,
};

struct ChasingInstance {
  int i = 0;
  int x = 0;
  int y = 0;
  int z = 0;
  /// Robber vertices accepted at the end ({x}, or {m, m'} when x = m' and i is 5 or 6).
  std::vector<int> robber_targets;
  bool forced = false;
};

/// One instance per strong stable set (read as each choice of x) or per
/// ordered triple; `forced` tells whether two cops can force the situation.
std::vector<ChasingInstance> verify_chasing(ChasingLemma lemma, int i);

struct TransitivityReport {
  int vertex_orbits = 0;
  int arc_orbits = 0;
  int strong_stable_triple_orbits = 0;
  int arcs = 0;
  int strong_stable_triples = 0;
  bool ok() const { return vertex_orbits == 1 && arc_orbits == 1 && strong_stable_triple_orbits == 1; }
};

/// Automorphism orbits of the Petersen graph on vertices, arcs and ordered strong stable triples.
TransitivityReport verify_transitivity();

/// The planar members of `graphs`, in input order.
std::vector<Graph> planar_filter(const std::vector<Graph>& graphs);

// ---------------------------------------------------------------------------
// Three-cop-win lists

struct DeriveStats {
  std::uint64_t extensions = 0;
  std::uint64_t scanned = 0;
  std::uint64_t cornerless = 0;
  std::uint64_t found_cornerless = 0;
};

/// All connected 3-cop-win graphs of order n with maximum degree at most
/// max_degree, pairwise non-isomorphic, given the same list for order n - 1.
/// A 3-cop-win graph with a corner x has G - x 3-cop-win, so those are the
/// corner extensions of `previous`; the cornerless ones (minimum degree >= 2)
/// are found by generating and classifying. Sorted by canonical graph6.
std::vector<Graph> derive_three_cop_win(int n, int max_degree, const std::vector<Graph>& previous,
                                        const GenOptions& options = {}, DeriveStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Table routing

/// Which argument settles "c(G) <= 3" for connected G of order n and maximum degree delta.
enum class Route {
  kSubcubic,            // maximum degree at most 3, exhaustive subcubic census
  kDegreeCorollary,     // delta > n - 11
  kNeighbourhoodCase1,  // delta = n - 11, n <= 18
  kNeighbourhoodCase2,  // delta = n - 12, n <= 18
  kMerging,             // delta = 4, n in 17..19 and delta = 5, n = 18
  kLargeDegreeCase1,    // n = 19, delta = 8
  kLargeDegreeCase2,    // n = 19, delta = 7
  kNotCovered,
};

std::string to_string(Route route);
Route route(int n, int delta);

// ---------------------------------------------------------------------------
// Presets

struct PresetCheck {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct PresetResult {
  std::string name;
  std::vector<PresetCheck> checks;
  /// JSON-lines output of the underlying run.
  std::string report;
  bool ok() const;
};

struct PresetContext {
  /// Directory holding three_cop_win_n<N>_d<D>.g6 list files.
  std::string data_dir = "data";
  int threads = 1;
  /// Optional progress / diagnostics stream.
  std::ostream* log = nullptr;
};

struct PresetInfo {
  std::string name;
  std::string description;
  /// Whether the preset carries expected numbers from the published tables.
  bool has_expected = false;
};

std::vector<PresetInfo> list_presets();
/// Throws std::invalid_argument for an unknown name and std::runtime_error when a
/// required list file is missing.
PresetResult run_preset(const std::string& name, const PresetContext& context = {});

/// Path of the list file for order n and maximum degree d inside data_dir.
std::string three_cop_win_list_path(const std::string& data_dir, int n, int max_degree);

/// Checks a merge report against the expected (delta1, d1) -> (bases, finals) rows.
struct ExpectedMergeRow {
  int delta1 = 0;
  int d1 = 0;
  std::uint64_t bases = 0;
  std::uint64_t finals = 0;
  std::array<std::uint64_t, 4> by_cop_number{};
};
std::vector<PresetCheck> compare_merge_rows(const MergeReport& report, const std::vector<ExpectedMergeRow>& expected);

}  // namespace copwin
