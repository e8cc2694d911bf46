// Command-line front end: cop numbers, generation, classification campaigns,
// merging, verification commands and presets.
//
// Exit codes: 0 success / expectations met, 1 expectation mismatch, 2 input error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copwin/campaign.hpp"
#include "copwin/generate.hpp"
#include "copwin/graph6.hpp"
#include "copwin/merge.hpp"
#include "copwin/reductions.hpp"
#include "json.hpp"

namespace {

using namespace copwin;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

// Errors in what the user supplied.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    open_out(path) << text;
  }
}

// "n=14,min=2,max=3" -> GenSpec.
GenSpec parse_spec(const std::string& text) {
  GenSpec spec;
  bool has_n = false, has_max = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad spec item '" + item + "'");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("bad spec value in '" + item + "'");
    }
    if (key == "n") {
      spec.n = value;
      has_n = true;
    } else if (key == "min") {
      spec.min_degree = value;
    } else if (key == "max") {
      spec.max_degree = value;
      has_max = true;
    } else {
      throw InputError("unknown spec key '" + key + "' (use n, min, max)");
    }
  }
  if (!has_n) throw InputError("spec needs n=");
  if (!has_max) spec.max_degree = spec.n - 1;
  if (spec.n > 1 && spec.min_degree == 0) spec.min_degree = 1;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return spec;
}

std::vector<Graph> read_graphs(const std::string& path) {
  std::vector<Graph> out;
  graph6_file_source(path)([&](const Graph& g) { out.push_back(g); });
  return out;
}

void print_checks(const PresetResult& r) {
  for (const PresetCheck& c : r.checks) {
    std::cout << (c.ok ? "  ok    " : "  DIFF  ") << c.label << ": expected " << c.expected << ", got " << c.actual
              << '\n';
  }
  std::cout << r.name << ": " << (r.ok() ? "match" : "MISMATCH") << '\n';
}

// ---------------------------------------------------------------------------

int cmd_copnum(const std::string& input, int k_max, bool no_reductions) {
  graph6_file_source(input)([&](const Graph& g) {
    const Classification c = classify(g, k_max, !no_reductions);
    std::cout << write_graph6(g) << ' '
              << (c.cop_number ? std::to_string(*c.cop_number) : ">" + std::to_string(k_max)) << ' ' << c.evidence
              << '\n';
  });
  return kExitOk;
}

int cmd_generate(const GenSpec& spec, const std::string& out_path, std::uint64_t chunk, const GenOptions& options) {
  if (chunk > 0 && (out_path.empty() || out_path == "-")) throw InputError("--chunk needs --out");
  std::uint64_t count = 0;
  if (chunk == 0) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
      file = open_out(out_path);
      out = &file;
    }
    count = generate(spec, [&](const Graph& g) { *out << write_graph6(g) << '\n'; }, options);
  } else {
    // Chunk files FILE.000000, FILE.000001, ...; finished chunks are kept on reruns.
    std::vector<std::string> buffer;
    std::uint64_t index = 0;
    std::uint64_t written = 0;
    auto flush = [&]() {
      std::ostringstream name;
      name << out_path << '.' << std::setw(6) << std::setfill('0') << index++;
      if (!fs::exists(name.str())) {
        const std::string tmp = name.str() + ".tmp";
        {
          std::ofstream f = open_out(tmp);
          for (const std::string& line : buffer) f << line << '\n';
        }
        fs::rename(tmp, name.str());
        ++written;
      }
      buffer.clear();
    };
    count = generate(
        spec,
        [&](const Graph& g) {
          buffer.push_back(write_graph6(g));
          if (buffer.size() == chunk) flush();
        },
        options);
    if (!buffer.empty()) flush();
    std::cerr << index << " chunks (" << written << " newly written)\n";
  }
  std::cerr << count << " graphs\n";
  return kExitOk;
}

int cmd_classify(const std::string& spec_text, const std::string& input, const std::string& report_path,
                 const std::string& witnesses_path, const ClassifyOptions& options) {
  if (spec_text.empty() == input.empty()) throw InputError("give exactly one of --spec and --input");
  GraphSource source;
  std::string spec_echo;
  if (!spec_text.empty()) {
    const GenSpec spec = parse_spec(spec_text);
    source = generated_source(spec);
    spec_echo = "n=" + std::to_string(spec.n) + ",min=" + std::to_string(spec.min_degree) +
                ",max=" + std::to_string(spec.max_degree);
  } else {
    source = graph6_file_source(input);
    spec_echo = "file=" + input;
  }
  const ClassReport report = classify_stream(source, spec_echo, options);
  emit(report_path, report.to_json(true) + "\n");
  if (!witnesses_path.empty()) {
    std::string text;
    for (const std::string& w : report.witnesses) text += w + "\n";
    emit(witnesses_path, text);
  }
  if (!report.complete) std::cerr << "stopped early; resume with --checkpoint and --resume\n";
  return kExitOk;
}

int cmd_merge(const std::string& config_path, const std::string& bases_dir, const std::string& finals_dir,
              const std::string& report_path, int threads) {
  std::ifstream in(config_path);
  if (!in) throw InputError("cannot open " + config_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad merge config: ") + e.what());
  }
  const fs::path base_dir = fs::path(config_path).parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (base_dir / p).string(); };
  MergeConfig cfg;
  try {
    cfg.n = j.at("n").get<int>();
    cfg.D1 = j.at("D1").get<int>();
    cfg.D2 = j.at("D2").get<int>();
    cfg.delta = j.value("delta", cfg.D2);
    cfg.L1 = read_graphs(resolve(j.at("L1").get<std::string>()));
    cfg.L2 = j.contains("L2") ? read_graphs(resolve(j.at("L2").get<std::string>())) : cfg.L1;
    cfg.require_three_cop_win = j.value("require_three_cop_win", true);
    cfg.dedup_threshold = j.value("dedup_threshold", std::size_t{1000});
    cfg.dedup = j.value("dedup", true);
    if (j.contains("only_d1")) cfg.only_d1 = j.at("only_d1").get<std::vector<int>>();
    if (j.contains("only_delta1")) cfg.only_delta1 = j.at("only_delta1").get<std::vector<int>>();
    cfg.validate();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad merge config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad merge config: ") + e.what());
  }

  std::ofstream bases_g6, bases_meta, finals_g6, finals_meta;
  if (!bases_dir.empty()) {
    fs::create_directories(bases_dir);
    bases_g6 = open_out((fs::path(bases_dir) / "bases.g6").string());
    bases_meta = open_out((fs::path(bases_dir) / "bases.meta").string());
  }
  if (!finals_dir.empty()) {
    fs::create_directories(finals_dir);
    finals_g6 = open_out((fs::path(finals_dir) / "finals.g6").string());
    finals_meta = open_out((fs::path(finals_dir) / "finals.meta").string());
  }
  MergeOptions options;
  options.threads = threads;
  options.on_base = [&](const PartialGraph& b) {
    if (!bases_g6.is_open()) return;
    bases_g6 << write_graph6(b.graph) << '\n';
    bases_meta << sidecar_line(b) << '\n';
  };
  options.on_final = [&](const MergeFinal& f) {
    if (!finals_g6.is_open()) return;
    finals_g6 << write_graph6(f.graph) << '\n';
    finals_meta << sidecar_line(f) << '\n';
  };
  const MergeReport report = run_merge(cfg, options);
  emit(report_path, report.to_jsonl());
  std::cerr << report.base_count << " bases, " << report.final_count << " finals\n";
  return kExitOk;
}

int cmd_verify_lemmas() {
  bool all = true;
  for (ChasingLemma lemma : {ChasingLemma::kStrongStable, ChasingLemma::kAnyTriple}) {
    for (int i = 0; i <= 6; ++i) {
      const auto instances = verify_chasing(lemma, i);
      std::size_t forced = 0;
      for (const ChasingInstance& inst : instances) {
        if (inst.forced) {
          ++forced;
        } else {
          std::cout << "  not forced: i=" << i << " x=" << inst.x << " cops={" << inst.y << "," << inst.z << "}\n";
        }
      }
      all = all && forced == instances.size();
      std::cout << (lemma == ChasingLemma::kStrongStable ? "strong-stable (cops to move)" : "any-triple (robber to move)")
                << " i=" << i << ": " << forced << "/" << instances.size() << " forced\n";
    }
  }
  return all ? kExitOk : kExitMismatch;
}

int cmd_verify_transitivity() {
  const TransitivityReport r = verify_transitivity();
  std::cout << "vertex orbits: " << r.vertex_orbits << '\n'
            << "arc orbits: " << r.arc_orbits << " (" << r.arcs << " arcs)\n"
            << "ordered strong stable triple orbits: " << r.strong_stable_triple_orbits << " ("
            << r.strong_stable_triples << " triples)\n";
  return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_preset(const std::string& name, const PresetContext& ctx, const std::string& report_path) {
  PresetResult r;
  try {
    r = run_preset(name, ctx);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  emit(report_path, r.report);
  print_checks(r);
  return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_derive(int n, int max_degree, const std::string& prev, const std::string& out, const GenOptions& options) {
  std::vector<Graph> previous = prev.empty() ? std::vector<Graph>{} : read_graphs(prev);
  DeriveStats stats;
  const std::vector<Graph> list = derive_three_cop_win(n, max_degree, previous, options, &stats);
  std::string text;
  for (const Graph& g : list) text += write_graph6(g) + "\n";
  emit(out, text);
  std::cerr << list.size() << " graphs (" << stats.extensions << " corner extensions, " << stats.scanned
            << " generated, " << stats.cornerless << " cornerless, " << stats.found_cornerless
            << " cornerless 3-cop-win)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robbers verification engine"};
  app.require_subcommand(1);

  // copnum
  std::string copnum_input = "-";
  int k_max = 3;
  bool no_reductions = false;
  auto* copnum = app.add_subcommand("copnum", "Cop number of every graph6 record");
  copnum->add_option("input", copnum_input, "graph6 file or - for stdin");
  copnum->add_option("--kmax", k_max, "Largest cop count tried (1..4)")->check(CLI::Range(1, 4));
  copnum->add_flag("--no-reductions", no_reductions, "Game engine only");

  // generate
  GenSpec gen_spec;
  std::string gen_out;
  std::uint64_t chunk = 0;
  GenOptions gen_options;
  auto* gen = app.add_subcommand("generate", "Enumerate connected graphs up to isomorphism");
  gen->add_option("--n", gen_spec.n, "Order")->required();
  gen->add_option("--min-deg", gen_spec.min_degree, "Minimum degree");
  gen->add_option("--max-deg", gen_spec.max_degree, "Maximum degree")->required();
  gen->add_option("--out", gen_out, "Output graph6 file (default stdout)");
  gen->add_option("--chunk", chunk, "Graphs per chunk file FILE.NNNNNN");
  gen->add_option("--threads", gen_options.threads, "Worker threads")->check(CLI::PositiveNumber);
  gen->add_option("--res", gen_options.res, "Shard residue");
  gen->add_option("--mod", gen_options.mod, "Shard modulus")->check(CLI::PositiveNumber);

  // classify
  std::string cls_spec, cls_input, cls_report, cls_witnesses;
  ClassifyOptions cls_options;
  bool cls_no_reductions = false;
  auto* cls = app.add_subcommand("classify", "Tally cop numbers over a generated family or a graph6 file");
  cls->add_option("--spec", cls_spec, "Family, e.g. n=14,min=2,max=3");
  cls->add_option("--input", cls_input, "graph6 file instead of a generated family");
  cls->add_option("--report", cls_report, "Report file (JSON, default stdout)");
  cls->add_option("--witnesses", cls_witnesses, "Sorted graph6 list of the witness bucket");
  cls->add_option("--witness-bucket", cls_options.witness_bucket, "Cop number listed (k_max+1 = greater)");
  cls->add_option("--kmax", cls_options.k_max, "Largest cop count tried")->check(CLI::Range(1, 4));
  cls->add_flag("--no-reductions", cls_no_reductions, "Game engine only");
  cls->add_option("--threads", cls_options.threads, "Worker threads")->check(CLI::PositiveNumber);
  cls->add_option("--checkpoint", cls_options.checkpoint, "JSON-lines shard ledger");
  cls->add_flag("--resume", cls_options.resume, "Continue from the checkpoint ledger");
  cls->add_option("--shard-size", cls_options.shard_size, "Graphs per checkpointed shard")->check(CLI::PositiveNumber);
  cls->add_option("--max-shards", cls_options.max_new_shards, "Stop after this many new shards");

  // merge
  std::string merge_config, merge_bases, merge_finals, merge_report;
  int threads = 1;
  auto* merge = app.add_subcommand("merge", "Run the merging procedure from a JSON config");
  merge->add_option("--config", merge_config, "JSON: n, D1, D2, delta, L1, L2 (graph6 paths)")->required();
  merge->add_option("--bases", merge_bases, "Directory for bases.g6 and bases.meta");
  merge->add_option("--finals", merge_finals, "Directory for finals.g6 and finals.meta");
  merge->add_option("--report", merge_report, "JSON-lines report (default stdout)");
  merge->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  // verify
  std::string table_name;
  PresetContext ctx;
  std::string preset_report;
  auto* verify = app.add_subcommand("verify", "Verification commands");
  verify->require_subcommand(1);
  auto* lemmas = verify->add_subcommand("lemmas", "Two-cop chasing positions on the cornered Petersen graphs");
  auto* transitivity = verify->add_subcommand("transitivity", "Petersen vertex, arc and strong-stable-triple orbits");
  auto* table = verify->add_subcommand("table", "Run a preset with an expected block");
  table->add_option("name", table_name, "Preset name")->required();
  table->add_option("--data", ctx.data_dir, "Directory of list files");
  table->add_option("--threads", ctx.threads, "Worker threads")->check(CLI::PositiveNumber);

  // planar
  std::string planar_input;
  auto* planar = app.add_subcommand("planar", "Print the planar records of a graph6 file");
  planar->add_option("input", planar_input, "graph6 file or -")->required();

  // preset
  std::string preset_name;
  bool list = false;
  auto* preset = app.add_subcommand("preset", "Run a named campaign and compare with its expected numbers");
  preset->add_option("name", preset_name, "Preset name");
  preset->add_flag("--list", list, "List presets");
  preset->add_option("--data", ctx.data_dir, "Directory of list files");
  preset->add_option("--threads", ctx.threads, "Worker threads")->check(CLI::PositiveNumber);
  preset->add_option("--report", preset_report, "Report output (default stdout)");

  // derive
  int derive_n = 0, derive_d = 0;
  std::string derive_prev, derive_out;
  GenOptions derive_options;
  auto* derive = app.add_subcommand("derive", "3-cop-win graphs of order n from those of order n - 1");
  derive->add_option("--n", derive_n, "Order")->required();
  derive->add_option("--max-deg", derive_d, "Maximum degree bound")->required();
  derive->add_option("--prev", derive_prev, "graph6 list of order n - 1");
  derive->add_option("--out", derive_out, "Output graph6 file (default stdout)");

  // route
  int route_n = 0, route_delta = 0;
  auto* route_cmd = app.add_subcommand("route", "Which argument covers order n and maximum degree delta");
  route_cmd->add_option("--n", route_n, "Order")->required();
  route_cmd->add_option("--delta", route_delta, "Maximum degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*copnum) return cmd_copnum(copnum_input, k_max, no_reductions);
    if (*gen) {
      if (gen_spec.n > 1 && gen_spec.min_degree == 0) gen_spec.min_degree = 1;
      try {
        gen_spec.validate();
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      return cmd_generate(gen_spec, gen_out, chunk, gen_options);
    }
    if (*cls) {
      cls_options.use_reductions = !cls_no_reductions;
      return cmd_classify(cls_spec, cls_input, cls_report, cls_witnesses, cls_options);
    }
    if (*merge) return cmd_merge(merge_config, merge_bases, merge_finals, merge_report, threads);
    if (*verify) {
      if (*lemmas) return cmd_verify_lemmas();
      if (*transitivity) return cmd_verify_transitivity();
      if (*table) return cmd_preset(table_name, ctx, "");
    }
    if (*planar) {
      for (const Graph& g : planar_filter(read_graphs(planar_input))) std::cout << write_graph6(g) << '\n';
      return kExitOk;
    }
    if (*preset) {
      if (list || preset_name.empty()) {
        for (const PresetInfo& p : list_presets()) {
          std::cout << std::left << std::setw(22) << p.name << (p.has_expected ? " [expected] " : "            ")
                    << p.description << '\n';
        }
        return kExitOk;
      }
      return cmd_preset(preset_name, ctx, preset_report);
    }
    if (*derive) return cmd_derive(derive_n, derive_d, derive_prev, derive_out, derive_options);
    if (*route_cmd) {
      std::cout << to_string(route(route_n, route_delta)) << '\n';
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
