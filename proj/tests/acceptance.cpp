// Acceptance runner: one PASS / FAIL / SKIP line per criterion.
//
//   acceptance [--extended] [--data DIR] [--threads N]
//
// Criterion 10 belongs to the extended tier (merge campaigns over the derived
// lists); without --extended it is reported as SKIP.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "copwin/campaign.hpp"
#include "copwin/canon.hpp"
#include "copwin/game.hpp"
#include "copwin/generate.hpp"
#include "copwin/merge.hpp"
#include "copwin/named_graphs.hpp"
#include "copwin/predicates.hpp"
#include "copwin/reductions.hpp"
#include "merge_oracle.hpp"

using namespace copwin;

namespace {

enum class Verdict { kPass, kFail, kSkip };

struct Outcome {
  Verdict verdict = Verdict::kPass;
  std::string detail;
};

struct Settings {
  bool extended = false;
  std::string data_dir = COPWIN_DATA_DIR;
  int threads = 1;
};

Outcome pass(std::string detail) { return {Verdict::kPass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Verdict::kFail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Verdict::kSkip, std::move(detail)}; }

std::string failed_checks(const PresetResult& r) {
  std::ostringstream out;
  for (const PresetCheck& c : r.checks) {
    if (!c.ok) out << "; " << c.label << " expected " << c.expected << " got " << c.actual;
  }
  return out.str();
}

Outcome named_cop_numbers(const Settings&) {
  std::ostringstream out;
  bool ok = true;
  auto check = [&](const std::string& name, const Graph& g, int expected) {
    const auto c = cop_number(g, 4);
    const bool good = c == expected;
    ok = ok && good;
    out << name << "=" << (c ? std::to_string(*c) : std::string(">4")) << (good ? "" : "(!)") << " ";
  };
  check("petersen", named_graph(NamedGraph::kPetersen), 3);
  check("robertson", named_graph(NamedGraph::kRobertson), 4);
  check("dodecahedral", named_graph(NamedGraph::kDodecahedral), 3);
  for (int i = 1; i <= 6; ++i) check("P" + std::to_string(i), cornered_petersen(i).graph, 3);
  return ok ? pass(out.str()) : fail(out.str());
}

Outcome subcubic_census(const Settings& s) {
  std::ostringstream out;
  bool ok = true;
  PresetContext ctx;
  ctx.data_dir = s.data_dir;
  ctx.threads = s.threads;
  for (int n = 10; n <= 15; ++n) {
    const PresetResult r = run_preset("table3-n" + std::to_string(n), ctx);
    ok = ok && r.ok();
    out << "n=" << n << (r.ok() ? " ok" : " MISMATCH" + failed_checks(r)) << "  ";
  }
  return ok ? pass(out.str()) : fail(out.str());
}

Outcome eleven_vertex_classification(const Settings& s) {
  PresetContext ctx;
  ctx.data_dir = s.data_dir;
  ctx.threads = s.threads;
  const PresetResult r = run_preset("table2-n11-d5", ctx);
  return r.ok() ? pass("69310/21434024/6/0, witnesses are the cornered Petersen graphs")
                : fail("mismatch" + failed_checks(r));
}

Outcome cornered_petersen_count(const Settings&) {
  const Graph p = named_graph(NamedGraph::kPetersen);
  const auto ext = corner_extensions(p, p.order());
  std::set<CanonicalForm> forms;
  for (const Graph& g : ext) forms.insert(canonical_form(g));
  std::set<CanonicalForm> named;
  for (int i = 1; i <= 6; ++i) named.insert(canonical_form(cornered_petersen(i).graph));
  const std::string detail = std::to_string(ext.size()) + " extensions, " + std::to_string(forms.size()) + " classes";
  return ext.size() == 6 && forms == named ? pass(detail) : fail(detail);
}

Outcome chasing(const Settings&) {
  std::size_t total = 0, forced = 0;
  for (int i = 0; i <= 6; ++i) {
    for (ChasingLemma lemma : {ChasingLemma::kStrongStable, ChasingLemma::kAnyTriple}) {
      for (const ChasingInstance& c : verify_chasing(lemma, i)) {
        ++total;
        forced += c.forced;
      }
    }
  }
  const std::string detail = std::to_string(forced) + "/" + std::to_string(total) + " instances forced";
  return forced == total && total > 0 ? pass(detail) : fail(detail);
}

Outcome transitivity(const Settings&) {
  const TransitivityReport t = verify_transitivity();
  const std::string detail = "vertex orbits " + std::to_string(t.vertex_orbits) + ", arc orbits " +
                             std::to_string(t.arc_orbits) + ", strong stable triple orbits " +
                             std::to_string(t.strong_stable_triple_orbits);
  return t.ok() ? pass(detail) : fail(detail);
}

Outcome oracle_equivalence(const Settings&) {
  std::uint64_t graphs = 0, classify_mismatch = 0, dismantle_mismatch = 0;
  for (int n = 1; n <= 7; ++n) {
    generate({n, n > 1 ? 1 : 0, n - 1, true}, [&](const Graph& g) {
      ++graphs;
      classify_mismatch += !(classify(g, 3) == classify_by_engine(g, 3));
      dismantle_mismatch += cops_can_win(g, 1) != is_dismantlable(g);
    });
  }
  const std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(classify_mismatch) +
                             " classifier mismatches, " + std::to_string(dismantle_mismatch) + " dismantling mismatches";
  return classify_mismatch == 0 && dismantle_mismatch == 0 ? pass(detail) : fail(detail);
}

Outcome petersen_merge(const Settings& s) {
  MergeConfig cfg;
  cfg.n = 15;
  cfg.D1 = cfg.D2 = cfg.delta = 4;
  cfg.L1 = {named_graph(NamedGraph::kPetersen)};
  cfg.L2 = cfg.L1;
  const Merger merger(cfg);
  std::uint64_t audited = 0, bad = 0;
  MergeOptions o;
  o.threads = s.threads;
  o.on_final = [&](const MergeFinal& f) {
    ++audited;
    if (!audit_final(merger, f.graph, f.v1, f.v2).empty() || !cops_can_win(f.graph, 3)) ++bad;
  };
  const MergeReport r = merger.run(o);
  std::string detail = std::to_string(r.base_count) + " bases, " + std::to_string(r.final_count) + " finals, " +
                       std::to_string(bad) + " violations";
  if (r.final_count == 0) detail += " (no finals: the audit holds vacuously)";
  return bad == 0 && audited == r.final_count ? pass(detail) : fail(detail);
}

Outcome toy_completeness(const Settings&) {
  std::size_t instances = 0, differing = 0, classes = 0;
  for (const MergeConfig& cfg : merge_oracle::toy_instances()) {
    ++instances;
    const auto expected = merge_oracle::brute_force_finals(cfg);
    classes += expected.size();
    differing += merge_oracle::merged_finals(cfg) != expected;
  }
  const std::string detail = std::to_string(instances) + " instances (" + std::to_string(classes) +
                             " contract graphs), " + std::to_string(differing) + " with a symmetric difference";
  return differing == 0 ? pass(detail) : fail(detail);
}

Outcome four_regular_merges(const Settings& s) {
  if (!s.extended) return skip("extended tier: merges over the derived lists of orders 12 and 14; run with --extended "
                "(base counts are known to differ from the expected ones)");
  PresetContext ctx;
  ctx.data_dir = s.data_dir;
  ctx.threads = s.threads;
  std::ostringstream out;
  bool ok = true;
  bool missing = false;
  for (const char* name : {"merge-n17-d4", "merge-n19-d4"}) {
    try {
      const PresetResult r = run_preset(name, ctx);
      ok = ok && r.ok();
      out << name << (r.ok() ? " ok" : " MISMATCH" + failed_checks(r)) << "  ";
    } catch (const std::runtime_error& e) {
      missing = true;
      out << name << " not run (" << e.what() << ")  ";
    }
  }
  if (!ok) return fail(out.str());
  return missing ? skip(out.str()) : pass(out.str());
}

}  // namespace

int main(int argc, char** argv) {
  Settings settings;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--extended") {
      settings.extended = true;
    } else if (arg == "--data" && i + 1 < argc) {
      settings.data_dir = argv[++i];
    } else if (arg == "--threads" && i + 1 < argc) {
      settings.threads = std::max(1, std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--extended] [--data DIR] [--threads N]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome(const Settings&)>>> criteria = {
      {"named-graph cop numbers", named_cop_numbers},
      {"subcubic census n=10..15", subcubic_census},
      {"order-11 classification, max degree 5", eleven_vertex_classification},
      {"cornered Petersen enumeration", cornered_petersen_count},
      {"chasing lemmas", chasing},
      {"Petersen transitivity", transitivity},
      {"oracle equivalence n<=7", oracle_equivalence},
      {"Petersen merge output contract", petersen_merge},
      {"toy merge completeness", toy_completeness},
      {"max-degree-4 merge tables", four_regular_merges},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(settings);
    } catch (const std::exception& e) {
      o = fail(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* word = o.verdict == Verdict::kPass ? "PASS" : o.verdict == Verdict::kFail ? "FAIL" : "SKIP";
    failures += o.verdict == Verdict::kFail;
    std::cout << "criterion " << (i + 1) << ": " << word << "  " << criteria[i].first << " -- " << o.detail << " ["
              << std::fixed << std::setprecision(1) << secs << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
