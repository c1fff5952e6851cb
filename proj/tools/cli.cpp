#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "netattack/experiment.hpp"
#include "netattack/generators.hpp"

namespace netattack::cli {
namespace fs = std::filesystem;

namespace {

struct GenerateArgs {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  std::string out;
};

struct AttackArgs {
  std::string config;
  std::size_t strategy_index = 0;
  std::size_t trial = 0;
  std::size_t ba_n = 0;
  std::size_t ba_m = 0;
  std::string edge_list;
  std::string strategy = "intentional";
  std::optional<int> threshold;
  std::string protect = "none";
  double top_frac = 0.01;
  double band_frac = 0.03;
  double miss_frac = 0.10;
  std::string initial = "random_live";
  std::optional<std::uint64_t> seed;
  std::optional<double> budget;
  std::optional<double> epsilon;
  bool early_stop = false;
  std::optional<std::size_t> s_every;
  std::optional<std::size_t> d_every;
  std::string out;
};

struct SweepArgs {
  std::string config;
  int threads = 1;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::string out;
  bool no_plots = false;
};

struct ReportArgs {
  std::string in;
  std::string out;
  std::string title = "netattack";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const BaParams params{a.n, a.m, a.seed};
  const auto edges = generate_ba_edges(params);
  std::ofstream file(a.out);
  if (!file) throw std::runtime_error("cannot write '" + a.out + "'");
  write_edge_list(file, a.n, edges);
  file.flush();
  if (!file) throw std::runtime_error("write failed for '" + a.out + "'");
  out << "wrote " << a.out << ": " << a.n << " nodes, " << edges.size() << " edges (seed " << a.seed << ")\n";
  return kExitOk;
}

InitialTarget parse_initial(const std::string& s) {
  if (s == "random_live") return {};
  if (s == "max_degree") return {InitialTarget::Kind::max_degree, -1};
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size() && v >= 0) return {InitialTarget::Kind::explicit_node, static_cast<NodeId>(v)};
  } catch (const std::exception&) {
  }
  throw ConfigError("--initial expects random_live, max_degree or a node id, got '" + s + "'");
}

int cmd_attack(const AttackArgs& a, std::ostream& out) {
  NetworkSource source;
  StrategySpec spec;
  RunOptions options;
  std::uint64_t seed = a.seed.value_or(1);
  double epsilon = 0.01;
  std::optional<SnapshotCadence> cadence;

  if (!a.config.empty()) {
    const ExperimentConfig cfg = load_config(a.config);
    if (a.strategy_index >= cfg.strategies.size()) {
      throw ConfigError("--strategy-index " + std::to_string(a.strategy_index) + " out of range (config has " +
                        std::to_string(cfg.strategies.size()) + " strategies)");
    }
    source = cfg.network;
    spec = cfg.strategies[a.strategy_index];
    seed = a.seed.value_or(cfg.base_seed) + a.trial;
    epsilon = cfg.crash_epsilon;
    options.budget = cfg.budget;
    options.early_stop = cfg.early_stop;
    cadence = cfg.cadence;
  } else {
    if ((a.ba_n > 0) == !a.edge_list.empty()) {
      throw ConfigError("attack needs exactly one of --config, --ba-n/--ba-m or --edge-list");
    }
    if (a.ba_n > 0) source.ba = BaShape{a.ba_n, a.ba_m};
    else source.edge_list = a.edge_list;
    try {
      spec.kind = parse_strategy_kind(a.strategy);
      spec.degree_threshold = a.threshold;
      spec.protected_rule.kind = parse_protected_kind(a.protect);
      spec.protected_rule.top_frac = a.top_frac;
      spec.protected_rule.band_frac = a.band_frac;
      spec.protected_rule.miss_frac = a.miss_frac;
      spec.initial_target = parse_initial(a.initial);
      validate(spec);
    } catch (const InvalidSpec& e) {
      throw ConfigError(e.what());
    }
    if (source.ba && !(source.ba->m >= 1 && source.ba->n > source.ba->m)) {
      throw ConfigError("--ba-n/--ba-m need n > m >= 1");
    }
  }
  if (a.budget) options.budget = *a.budget;
  if (a.epsilon) epsilon = *a.epsilon;
  if (a.early_stop) options.early_stop = true;
  spec.seed = seed;
  try {
    options.criterion = CrashCriterion(epsilon);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  std::vector<std::string> labels;
  Graph g;
  if (source.edge_list) {
    auto loaded = load_edge_list_file(source.edge_list->string());
    g = std::move(loaded.graph);
    labels = std::move(loaded.labels);
  } else {
    g = materialize_network(source, seed);
  }
  options.cadence = cadence.value_or(SnapshotCadence::defaults(g.node_count()));
  if (a.s_every) options.cadence.s_every = *a.s_every;
  if (a.d_every) options.cadence.d_every = *a.d_every;
  if (options.cadence.s_every == 0) throw ConfigError("--s-every must be >= 1");

  AttackTrace trace;
  try {
    trace = run_attack(g, spec, options);
  } catch (const InvalidSpec& e) {
    throw ConfigError(e.what());
  }
  const auto threshold = crash_threshold(trace, options.criterion);

  fs::create_directories(a.out);
  const fs::path trace_path = fs::path(a.out) / "trace.csv";
  {
    std::ofstream file(trace_path);
    if (!file) throw std::runtime_error("cannot write '" + trace_path.string() + "'");
    write_trace_csv(file, trace);
    if (!file.flush()) throw std::runtime_error("write failed for '" + trace_path.string() + "'");
  }
  if (!labels.empty()) {
    const fs::path label_path = fs::path(a.out) / "labels.csv";
    std::ofstream file(label_path);
    if (!file) throw std::runtime_error("cannot write '" + label_path.string() + "'");
    write_label_table(file, labels);
  }

  out << "strategy: " << spec.label() << '\n'
      << "nodes: " << g.node_count() << " edges: " << g.edge_count() << '\n'
      << "seed: " << seed << '\n'
      << "stop_reason: " << to_string(trace.stop_reason) << '\n'
      << "steps: " << trace.removals.size() << " removed: " << trace.removed_count() << '\n'
      << "crash_threshold: " << (threshold ? format_real(*threshold) : std::string("none")) << '\n'
      << "trace: " << trace_path.string() << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  ExperimentConfig cfg = load_config(a.config);
  if (a.seed) cfg.base_seed = *a.seed;
  if (a.epsilon) cfg.crash_epsilon = *a.epsilon;
  if (!a.out.empty()) cfg.output_dir = a.out;
  if (a.no_plots) cfg.plots = false;
  validate(cfg);

  const ExperimentResult result = run_experiment(cfg, a.threads);
  write_outputs(result, cfg.output_dir);

  out << "network: " << result.node_count << " nodes, " << result.edge_count << " edges\n";
  for (const auto& t : result.thresholds) {
    out << t.strategy << ": ";
    if (t.stats.n == 0) out << "no crash";
    else out << "threshold " << format_real(t.stats.mean) << " +- " << format_real(t.stats.std);
    out << " (" << t.stats.n << "/" << cfg.trials << " trials crashed)\n";
  }
  out << "outputs: " << cfg.output_dir.string() << '\n';
  return kExitOk;
}

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const fs::path in_dir(a.in);
  if (!fs::is_directory(in_dir)) throw std::runtime_error("'" + a.in + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("curve_") && name.ends_with(".csv")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no curve_*.csv files in '" + a.in + "'");
  std::vector<CurveTable> curves;
  for (const auto& f : files) {
    std::ifstream in(f);
    curves.push_back(read_curve_csv(in));
    if (curves.back().label.empty()) curves.back().label = f.stem().string().substr(6);
  }
  const fs::path out_dir = a.out.empty() ? in_dir : fs::path(a.out);
  fs::create_directories(out_dir);
  for (const auto& p : write_plots(curves, out_dir, a.title)) out << "wrote " << p.string() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"netattack: robustness of scale-free networks under intentional, incomplete-information "
               "and distributed attacks"};
  app.name(args.empty() ? "netattack" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a Barabasi-Albert graph as an edge list");
  generate->add_option("--n", gen.n, "Number of nodes")->required();
  generate->add_option("--m", gen.m, "Edges added per new node")->required();
  generate->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output edge-list file")->required();

  AttackArgs atk;
  auto* attack = app.add_subcommand("attack", "Run one attack and write its trace CSV");
  attack->add_option("--config", atk.config, "Experiment JSON; takes network, strategy and cadence from it");
  attack->add_option("--strategy-index", atk.strategy_index, "Strategy of the config to run")->capture_default_str();
  attack->add_option("--trial", atk.trial, "Trial index (seed = base seed + trial)")->capture_default_str();
  attack->add_option("--ba-n", atk.ba_n, "BA network: number of nodes");
  attack->add_option("--ba-m", atk.ba_m, "BA network: edges per new node");
  attack->add_option("--edge-list", atk.edge_list, "Network from an edge-list file");
  attack->add_option("--strategy", atk.strategy,
                     "random_failure | intentional | greedy_sequential | coordinated | lower_bounded_parallel")
      ->capture_default_str();
  attack->add_option("--threshold", atk.threshold, "Degree lower bound (lower_bounded_parallel)");
  attack->add_option("--protect", atk.protect, "none | miss_biggest_hub | miss_medium_band (intentional)")
      ->capture_default_str();
  attack->add_option("--top-frac", atk.top_frac, "miss_medium_band: top share always attacked")->capture_default_str();
  attack->add_option("--band-frac", atk.band_frac, "miss_medium_band: width of the medium band")->capture_default_str();
  attack->add_option("--miss-frac", atk.miss_frac, "miss_medium_band: share of the band missed")->capture_default_str();
  attack->add_option("--initial", atk.initial, "Distributed attacks: random_live | max_degree | <node id>")
      ->capture_default_str();
  attack->add_option("--seed", atk.seed, "Seed for graph generation and attack decisions (default 1)");
  attack->add_option("--budget", atk.budget, "Stop once this fraction of nodes is removed");
  attack->add_option("--epsilon", atk.epsilon, "Crash criterion: giant fraction <= epsilon (default 0.01)");
  attack->add_flag("--early-stop", atk.early_stop, "Stop as soon as the network is crashed");
  attack->add_option("--s-every", atk.s_every, "Snapshot every k removals (default ceil(N/200))");
  attack->add_option("--d-every", atk.d_every, "Cluster diameter every k removals, 0 = never (default ceil(N/50))");
  attack->add_option("--out", atk.out, "Output directory")->required();

  SweepArgs swp;
  auto* sweep = app.add_subcommand("sweep", "Run a full experiment config (strategies x trials)");
  sweep->add_option("--config", swp.config, "Experiment JSON")->required();
  sweep->add_option("--threads", swp.threads, "Worker threads for independent trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", swp.seed, "Override base_seed");
  sweep->add_option("--epsilon", swp.epsilon, "Override crash_epsilon");
  sweep->add_option("--out", swp.out, "Override output_dir");
  sweep->add_flag("--no-plots", swp.no_plots, "Skip SVG plots");

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Render curve CSVs of a sweep as SVG line charts");
  report->add_option("--in", rep.in, "Directory holding curve_*.csv")->required();
  report->add_option("--out", rep.out, "Output directory (default: --in)");
  report->add_option("--title", rep.title, "Chart title")->capture_default_str();

  // CLI11 consumes a reversed argument list without the program name.
  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*attack) return cmd_attack(atk, out);
    if (*sweep) return cmd_sweep(swp, out);
    if (*report) return cmd_report(rep, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace netattack::cli
