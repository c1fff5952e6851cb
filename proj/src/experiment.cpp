#include "netattack/experiment.hpp"

#include <chrono>
#include <exception>
#include <fstream>

#include "netattack/generators.hpp"
#include "netattack/svg.hpp"

namespace netattack {

std::vector<const TrialResult*> ExperimentResult::of_strategy(std::size_t s) const {
  std::vector<const TrialResult*> out;
  for (const auto& t : trials) {
    if (t.strategy_index == s) out.push_back(&t);
  }
  return out;
}

Graph materialize_network(const NetworkSource& source, std::uint64_t seed) {
  if (source.ba) return generate_ba({source.ba->n, source.ba->m, seed});
  if (source.edge_list) return load_edge_list_file(source.edge_list->string()).graph;
  throw ConfigError("network source is empty");
}

ExperimentResult run_experiment(const ExperimentConfig& config, int threads) {
  validate(config);
  if (threads < 1) throw ConfigError("thread count must be >= 1");

  ExperimentResult result;
  result.config = config;

  // A file-backed network is read once and copied per trial.
  std::optional<Graph> fixed;
  if (config.network.edge_list) fixed = materialize_network(config.network, 0);
  {
    const Graph probe = fixed ? *fixed : materialize_network(config.network, config.base_seed);
    result.node_count = probe.node_count();
    result.edge_count = probe.edge_count();
  }

  const std::size_t n_strategies = config.strategies.size();
  const std::size_t n_pairs = n_strategies * config.trials;
  result.trials.resize(n_pairs);
  std::vector<std::exception_ptr> errors(n_pairs);
  const CrashCriterion criterion(config.crash_epsilon);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(n_pairs); ++p) {
    const auto idx = static_cast<std::size_t>(p);
    TrialResult& out = result.trials[idx];
    out.strategy_index = idx / config.trials;
    out.trial = idx % config.trials;
    out.seed = config.base_seed + out.trial;
    try {
      const auto start = std::chrono::steady_clock::now();
      Graph g = fixed ? *fixed : materialize_network(config.network, out.seed);
      StrategySpec spec = config.strategies[out.strategy_index];
      spec.seed = out.seed;
      RunOptions options;
      options.budget = config.budget;
      options.cadence = config.cadence.value_or(SnapshotCadence::defaults(g.node_count()));
      options.early_stop = config.early_stop;
      options.criterion = criterion;
      out.trace = run_attack(g, spec, options);
      out.threshold = crash_threshold(out.trace, criterion);
      out.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t s = 0; s < n_strategies; ++s) {
    std::vector<AttackTrace> traces;
    std::vector<double> thresholds;
    for (const TrialResult* t : result.of_strategy(s)) {
      traces.push_back(t->trace);
      if (t->threshold) thresholds.push_back(*t->threshold);
    }
    result.curves.push_back(curve_export(traces));
    result.thresholds.push_back({config.strategies[s].label(), sample_stats(thresholds)});
  }
  return result;
}

void write_thresholds_csv(std::ostream& out, const std::vector<ThresholdRow>& rows) {
  out << "strategy,mean,std,n\n";
  for (const auto& r : rows) {
    out << '"' << r.strategy << "\",";
    if (r.stats.n > 0) out << format_real(r.stats.mean) << ',' << format_real(r.stats.std);
    else out << ',';
    out << ',' << r.stats.n << '\n';
  }
}

void write_trace_csv(std::ostream& out, const AttackTrace& trace) {
  out << "step,removed_node_ids,f,S,d\n";
  const double n = static_cast<double>(trace.node_count);
  std::size_t snap = 0;
  std::size_t removed = 0;
  auto emit = [&](std::size_t step, const std::vector<NodeId>* ids) {
    out << step << ',';
    if (ids != nullptr) {
      for (std::size_t i = 0; i < ids->size(); ++i) out << (i ? ";" : "") << (*ids)[i];
    }
    out << ',' << format_real(n > 0 ? static_cast<double>(removed) / n : 0.0) << ',';
    const MetricsRow* row = nullptr;
    while (snap < trace.snapshots.size() && trace.snapshots[snap].step == step) row = &trace.snapshots[snap++];
    if (row != nullptr) {
      out << format_real(row->giant_fraction);
      out << ',';
      if (row->cluster_diameter) out << format_real(*row->cluster_diameter);
    } else {
      out << ',';
    }
    out << '\n';
  };
  emit(0, nullptr);
  for (const auto& r : trace.removals) {
    removed += r.nodes.size();
    emit(r.step, &r.nodes);
  }
}

std::vector<std::filesystem::path> write_plots(const std::vector<CurveTable>& curves,
                                               const std::filesystem::path& dir, const std::string& title) {
  std::vector<svg::Series> giant, diameter;
  for (const auto& c : curves) {
    svg::Series s{c.label, {}}, d{c.label, {}};
    for (const auto& r : c.rows) {
      s.points.emplace_back(r.f, r.s_mean);
      if (r.d_mean) d.points.emplace_back(r.f, *r.d_mean);
    }
    giant.push_back(std::move(s));
    diameter.push_back(std::move(d));
  }
  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* file, const char* y_label, const std::vector<svg::Series>& series) {
    const auto path = dir / file;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    written.push_back(path);
    svg::line_chart(out, {title, "fraction of nodes removed f", y_label}, series);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
  };
  try {
    emit("giant_fraction.svg", "biggest cluster size S", giant);
    emit("cluster_diameter.svg", "cluster diameter d", diameter);
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) std::filesystem::remove(p, ec);
    throw;
  }
  return written;
}

void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  auto open = [&](const std::string& name) {
    const auto path = dir / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    written.push_back(path);
    return out;
  };
  auto check = [](std::ofstream& out, const std::string& name) {
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + name + "'");
  };
  try {
    std::filesystem::create_directories(dir);
    const auto& cfg = result.config;
    for (std::size_t s = 0; s < result.curves.size(); ++s) {
      const std::string name = "curve_" + file_stem(cfg.strategies[s].label()) + ".csv";
      auto out = open(name);
      write_curve_csv(out, result.curves[s]);
      check(out, name);
    }
    {
      auto out = open("thresholds.csv");
      write_thresholds_csv(out, result.thresholds);
      check(out, "thresholds.csv");
    }
    {
      nlohmann::json m;
      m["engine"] = "netattack";
      m["engine_version"] = kEngineVersion;
      m["config"] = to_json(cfg);
      m["network"] = {{"nodes", result.node_count}, {"edges", result.edge_count}};
      m["crash_epsilon"] = cfg.crash_epsilon;
      m["trials"] = nlohmann::json::array();
      for (const auto& t : result.trials) {
        nlohmann::json tj;
        tj["strategy"] = cfg.strategies[t.strategy_index].label();
        tj["trial"] = t.trial;
        tj["seed"] = t.seed;
        tj["stop_reason"] = to_string(t.trace.stop_reason);
        tj["removed"] = t.trace.removed_count();
        tj["steps"] = t.trace.removals.size();
        tj["threshold"] = t.threshold ? nlohmann::json(*t.threshold) : nlohmann::json(nullptr);
        tj["wall_ms"] = t.wall_ms;
        m["trials"].push_back(tj);
      }
      auto out = open("manifest.json");
      out << m.dump(2) << '\n';
      check(out, "manifest.json");
    }
    if (cfg.plots) {
      const auto plots = write_plots(result.curves, dir, cfg.description.empty() ? "netattack" : cfg.description);
      written.insert(written.end(), plots.begin(), plots.end());
    }
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) std::filesystem::remove(p, ec);
    throw;
  }
}

}  // namespace netattack
