// Copyright 2026 The qlb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qlb/errors.hpp"
#include "qlb/heatmap.hpp"
#include "qlb/landscape.hpp"
#include "qlb/metrics.hpp"
#include "qlb/parallel.hpp"
#include "qlb/util.hpp"

namespace {

using namespace qlb;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw data_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw data_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) throw data_error("cannot open " + path + " for writing");
  out << content;
}

WeightedGraph load_graph(const std::string& graph_file) {
  if (graph_file.empty()) return builtin_instance();
  return graph_from_json(read_json_file(graph_file));
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw usage_error(what + " must be an unsigned integer, got \"" + text + "\"");
  }
  if (used != text.size() || text[0] == '-')
    throw usage_error(what + " must be an unsigned integer, got \"" + text + "\"");
  return value;
}

/// Optional config file: {"backends": [...], "defaults": {"shots": n,
/// "seed": s, "workers": w}}. Command-line flags override every default.
struct CliConfig {
  std::vector<BackendDescriptor> backends;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
};

CliConfig load_config(const std::string& path) {
  CliConfig config;
  if (path.empty()) return config;
  nlohmann::json j = read_json_file(path);
  config.backends = descriptors_from_json(j);
  if (!j.contains("defaults")) return config;
  const nlohmann::json& d = j["defaults"];
  if (!d.is_object()) throw data_error(path + ": \"defaults\" must be an object");
  try {
    if (d.contains("shots")) config.shots = d["shots"].get<std::uint64_t>();
    if (d.contains("seed")) config.seed = d["seed"].get<std::uint64_t>();
    if (d.contains("workers")) config.workers = d["workers"].get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    throw data_error(path + ": " + e.what());
  }
  return config;
}

/// Flag beats config beats the QLB_SEED environment variable beats 42.
std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value, const CliConfig& config) {
  if (flag_given) return flag_value;
  if (config.seed) return *config.seed;
  if (const char* env = std::getenv("QLB_SEED")) return parse_u64(env, "QLB_SEED");
  return 42;
}

std::string describe_minimum(int depth, const MinPoint& m) {
  return "depth " + std::to_string(depth) + " minimum: energy " + format_double(m.energy) +
         " at gamma " + format_double(m.gamma) + ", beta " + format_double(m.beta) +
         " (grid indices " + std::to_string(m.gamma_index) + ", " +
         std::to_string(m.beta_index) + ")";
}

void write_landscape_files(const std::filesystem::path& out_dir, const Landscape& l) {
  std::string base = "landscape_depth" + std::to_string(l.meta.depth);
  write_text_file((out_dir / (base + ".json")).string(), landscape_to_json(l).dump(2) + "\n");
  write_text_file((out_dir / (base + ".csv")).string(), landscape_to_csv(l));
  std::cout << "wrote " << (out_dir / base).string() << ".json and .csv\n";
  std::cout << describe_minimum(l.meta.depth, find_minimum(l)) << "\n";
}

struct InstanceShowArgs {
  std::string graph_file;
  bool as_json = false;
};

void cmd_instance_show(const InstanceShowArgs& args) {
  WeightedGraph g = load_graph(args.graph_file);
  if (args.as_json) {
    std::cout << graph_to_json(g).dump(2) << "\n";
    return;
  }
  std::cout << "nodes: " << g.node_count << "\n";
  std::cout << "edges (u v w):\n";
  for (const Edge& e : g.edges)
    std::cout << "  " << e.u << " " << e.v << " " << format_double(e.w) << "\n";
  std::cout << "total weight: " << format_double(total_weight(g)) << "\n";
  MaxCutResult best = brute_force_max_cut(g);
  std::cout << "max cut: " << format_double(best.max_cut) << "\n";
  std::cout << "maximizers:";
  for (const Assignment& a : best.argmax) std::cout << " " << a;
  std::cout << "\n";
}

void cmd_instance_validate(const std::string& path) {
  WeightedGraph g = load_graph(path);
  std::cout << "ok: " << g.node_count << " nodes, " << g.edges.size()
            << " edges, total weight " << format_double(total_weight(g)) << "\n";
}

struct LandscapeRunArgs {
  std::string backend;
  std::string graph_file;
  int depth = 1;
  bool warm_start = false;
  std::vector<double> fixed_layer1;
  std::uint64_t shots = 0;
  bool shots_given = false;
  bool exact = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string grid_file;
  unsigned workers = 0;
  bool workers_given = false;
  std::string config_file;
  std::string out_dir = ".";
};

void cmd_landscape_run(const LandscapeRunArgs& args) {
  CliConfig config = load_config(args.config_file);
  WeightedGraph g = load_graph(args.graph_file);
  GridSpec grid =
      args.grid_file.empty() ? GridSpec::default_grid() : grid_from_json(read_json_file(args.grid_file));

  if (args.warm_start && args.depth != 2)
    throw usage_error("--warm-start explores both depths; pass --depth 2 with it");
  if (!args.fixed_layer1.empty() && args.depth != 2)
    throw usage_error("--fixed-layer1 only applies to --depth 2");
  if (args.depth == 2 && !args.warm_start && args.fixed_layer1.empty())
    throw usage_error("depth 2 needs layer-1 angles: pass --warm-start or --fixed-layer1 G B");

  LandscapeRunOptions opts;
  if (args.exact) {
    opts.shots = ShotSpec::exact_mode();
  } else if (args.shots_given) {
    opts.shots = ShotSpec::sampled(args.shots);
  } else {
    opts.shots = ShotSpec::sampled(config.shots.value_or(kDefaultShots));
  }
  opts.seed = resolve_seed(args.seed_given, args.seed, config);
  opts.workers = args.workers_given ? args.workers : config.workers.value_or(default_workers());

  std::filesystem::path out_dir(args.out_dir);
  std::filesystem::create_directories(out_dir);
  auto store = std::make_shared<JobStore>((out_dir / "jobs.jsonl").string());
  Backend backend(find_descriptor(args.backend, config.backends), store);

  if (args.warm_start) {
    opts.checkpoint_path = (out_dir / "landscape_checkpoint").string();
    auto [depth1, depth2] = warm_start_chain(backend, g, grid, opts);
    write_landscape_files(out_dir, depth1);
    write_landscape_files(out_dir, depth2);
    return;
  }

  std::optional<std::array<double, 2>> fixed;
  if (args.depth == 2) fixed = std::array<double, 2>{args.fixed_layer1[0], args.fixed_layer1[1]};
  opts.checkpoint_path =
      (out_dir / ("landscape_checkpoint_depth" + std::to_string(args.depth) + ".jsonl")).string();
  Landscape l = sample_landscape(backend, g, args.depth, fixed, grid, opts);
  write_landscape_files(out_dir, l);
}

struct MetricsMadArgs {
  std::string a_file;
  std::string b_file;
};

void cmd_metrics_mad(const MetricsMadArgs& args) {
  Landscape a = landscape_from_json(read_json_file(args.a_file));
  Landscape b = landscape_from_json(read_json_file(args.b_file));
  std::cout << format_double(mad(a, b)) << "\n";
}

struct MetricsReportArgs {
  std::vector<std::string> landscape_files;
  std::string reference = "exact";
  std::string graph_file;
  std::string out_file;
};

bool reference_matches(const Landscape& l, const Landscape& ref) {
  bool fixed_equal =
      l.meta.fixed_layer1.has_value() == ref.meta.fixed_layer1.has_value() &&
      (!l.meta.fixed_layer1 || (*l.meta.fixed_layer1 == *ref.meta.fixed_layer1));
  return ref.meta.depth == l.meta.depth && fixed_equal &&
         ref.grid.gamma_values == l.grid.gamma_values &&
         ref.grid.beta_values == l.grid.beta_values;
}

void cmd_metrics_report(const MetricsReportArgs& args) {
  WeightedGraph g = load_graph(args.graph_file);
  std::vector<Landscape> landscapes;
  for (const std::string& file : args.landscape_files)
    landscapes.push_back(landscape_from_json(read_json_file(file)));

  std::vector<Landscape> references;
  if (args.reference == "exact") {
    auto store = std::make_shared<JobStore>();
    Backend backend(find_descriptor("local-exact"), store);
    LandscapeRunOptions opts;
    opts.shots = ShotSpec::exact_mode();
    opts.workers = default_workers();
    for (const Landscape& l : landscapes) {
      bool covered = false;
      for (const Landscape& ref : references) covered = covered || reference_matches(l, ref);
      if (!covered)
        references.push_back(
            sample_landscape(backend, g, l.meta.depth, l.meta.fixed_layer1, l.grid, opts));
    }
  } else {
    references.push_back(landscape_from_json(read_json_file(args.reference)));
  }

  for (std::size_t i = 0; i < landscapes.size(); ++i) {
    bool covered = false;
    for (const Landscape& ref : references)
      covered = covered || reference_matches(landscapes[i], ref);
    if (!covered)
      throw data_error("no matching reference for " + args.landscape_files[i] +
                       " (depth, grid and fixed layer-1 angles must all match)");
  }

  MadReport rows = report(landscapes, references, g);
  write_text_file(args.out_file, report_to_csv(rows));
  std::cout << report_to_text(rows);
  std::cout << "wrote " << args.out_file << "\n";
}

struct ExportHeatmapArgs {
  std::string landscape_file;
  std::string out_file;
};

void cmd_export_heatmap(const ExportHeatmapArgs& args) {
  Landscape l = landscape_from_json(read_json_file(args.landscape_file));
  write_pgm(l, args.out_file);
  std::cout << "wrote " << args.out_file << " (" << l.grid.gamma_values.size() << "x"
            << l.grid.beta_values.size() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA MaxCut landscape benchmarking harness"};
  app.require_subcommand(1);

  CLI::App* instance = app.add_subcommand("instance", "Inspect and validate problem graphs");
  instance->require_subcommand(1);

  InstanceShowArgs show_args;
  CLI::App* show = instance->add_subcommand("show", "Print a graph and its brute-force max cut");
  bool show_builtin = false;
  CLI::Option* show_builtin_opt =
      show->add_flag("--builtin", show_builtin, "Use the bundled 5-node instance (default)");
  show->add_option("--graph", show_args.graph_file, "Graph JSON file")
      ->excludes(show_builtin_opt);
  show->add_flag("--json", show_args.as_json, "Print the graph as JSON");
  show->callback([&] { cmd_instance_show(show_args); });

  std::string validate_file;
  CLI::App* validate = instance->add_subcommand("validate", "Check a graph file's invariants");
  validate->add_option("file", validate_file, "Graph JSON file")->required();
  validate->callback([&] { cmd_instance_validate(validate_file); });

  CLI::App* landscape = app.add_subcommand("landscape", "Sample energy landscapes");
  landscape->require_subcommand(1);

  LandscapeRunArgs run_args;
  CLI::App* run = landscape->add_subcommand("run", "Sweep the angle grid on one backend");
  run->add_option("--backend", run_args.backend, "Backend name from the registry or config")
      ->required();
  bool run_builtin = false;
  CLI::Option* run_builtin_opt =
      run->add_flag("--builtin", run_builtin, "Use the bundled 5-node instance (default)");
  run->add_option("--graph", run_args.graph_file, "Graph JSON file")->excludes(run_builtin_opt);
  run->add_option("--depth", run_args.depth, "Layer count (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  CLI::Option* warm = run->add_flag("--warm-start", run_args.warm_start,
                                    "Sweep depth 1, pin its minimum, then sweep depth 2");
  run->add_option("--fixed-layer1", run_args.fixed_layer1,
                  "Layer-1 gamma and beta for a depth-2 sweep")
      ->expected(2)
      ->excludes(warm);
  CLI::Option* shots_opt =
      run->add_option("--shots", run_args.shots, "Shots per grid point (default 1000)");
  run->add_flag("--exact", run_args.exact, "Noise-free expectation values instead of sampling")
      ->excludes(shots_opt);
  CLI::Option* seed_opt = run->add_option("--seed", run_args.seed, "Master seed");
  run->add_option("--grid", run_args.grid_file, "Grid JSON file overriding the default grid");
  CLI::Option* workers_opt =
      run->add_option("--workers", run_args.workers, "Worker threads (default: hardware)");
  run->add_option("--config", run_args.config_file, "Config JSON with backends and defaults");
  run->add_option("--out", run_args.out_dir, "Output directory (default .)");
  run->callback([&] {
    run_args.shots_given = shots_opt->count() > 0;
    run_args.seed_given = seed_opt->count() > 0;
    run_args.workers_given = workers_opt->count() > 0;
    cmd_landscape_run(run_args);
  });

  CLI::App* metrics = app.add_subcommand("metrics", "Compare landscapes");
  metrics->require_subcommand(1);

  MetricsMadArgs mad_args;
  CLI::App* mad_cmd = metrics->add_subcommand("mad", "Mean absolute difference of two landscapes");
  mad_cmd->add_option("--a", mad_args.a_file, "First landscape JSON")->required();
  mad_cmd->add_option("--b", mad_args.b_file, "Second landscape JSON")->required();
  mad_cmd->callback([&] { cmd_metrics_mad(mad_args); });

  MetricsReportArgs report_args;
  CLI::App* report_cmd = metrics->add_subcommand("report", "mad_sim/mad_mms table for landscapes");
  report_cmd->add_option("--landscapes", report_args.landscape_files, "Landscape JSON files")
      ->required()
      ->expected(-1);
  report_cmd->add_option("--reference", report_args.reference,
                         "\"exact\" to compute references, or a landscape JSON file");
  bool report_builtin = false;
  CLI::Option* report_builtin_opt = report_cmd->add_flag(
      "--builtin", report_builtin, "Use the bundled 5-node instance (default)");
  report_cmd->add_option("--graph", report_args.graph_file, "Graph JSON file")
      ->excludes(report_builtin_opt);
  report_cmd->add_option("--out", report_args.out_file, "Report CSV path")->required();
  report_cmd->callback([&] { cmd_metrics_report(report_args); });

  CLI::App* exporter = app.add_subcommand("export", "Render landscape artifacts");
  exporter->require_subcommand(1);

  ExportHeatmapArgs heatmap_args;
  CLI::App* heatmap_cmd = exporter->add_subcommand("heatmap", "Grayscale PGM of a landscape");
  heatmap_cmd->add_option("--landscape", heatmap_args.landscape_file, "Landscape JSON file")
      ->required();
  heatmap_cmd->add_option("--out", heatmap_args.out_file, "Output PGM path")->required();
  heatmap_cmd->callback([&] { cmd_export_heatmap(heatmap_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the parse diagnostic
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const data_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
