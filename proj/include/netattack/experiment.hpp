#ifndef NETATTACK_EXPERIMENT_HPP
#define NETATTACK_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "netattack/attacks.hpp"
#include "netattack/config.hpp"
#include "netattack/metrics.hpp"

namespace netattack {

inline constexpr const char* kEngineVersion = NETATTACK_VERSION;

struct TrialResult {
  std::size_t strategy_index = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  AttackTrace trace;
  std::optional<double> threshold;
  double wall_ms = 0.0;
};

struct ThresholdRow {
  std::string strategy;
  SampleStats stats;  // over the trials that crossed epsilon
};

struct ExperimentResult {
  ExperimentConfig config;
  std::size_t node_count = 0;  // of the trial-0 graph
  std::size_t edge_count = 0;
  std::vector<TrialResult> trials;  // (strategy, trial) order
  std::vector<CurveTable> curves;   // one per strategy
  std::vector<ThresholdRow> thresholds;

  /// Results of strategy `s`, in trial order.
  std::vector<const TrialResult*> of_strategy(std::size_t s) const;
};

/// Runs every (strategy, trial) pair on up to `threads` OpenMP threads. Each
/// pair builds its own graph copy; results are merged in (strategy, trial)
/// order, so the outcome does not depend on `threads`.
ExperimentResult run_experiment(const ExperimentConfig& config, int threads = 1);

/// Graph for one trial: the BA model seeded with the trial seed, or the
/// edge-list file. Throws std::runtime_error when the file cannot be read.
Graph materialize_network(const NetworkSource& source, std::uint64_t seed);

/// thresholds.csv: strategy,mean,std,n (mean/std empty when no trial crossed).
void write_thresholds_csv(std::ostream& out, const std::vector<ThresholdRow>& rows);

/// step,removed_node_ids,f,S,d with one row per step; ids separated by ';'.
/// S and d are blank on steps without a snapshot.
void write_trace_csv(std::ostream& out, const AttackTrace& trace);

/// Writes curve_<strategy>.csv files, thresholds.csv, manifest.json and (if
/// enabled) SVG plots into `dir`. Files written before a failure are removed
/// and the exception is rethrown.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

/// Renders giant_fraction.svg and cluster_diameter.svg from curve tables.
std::vector<std::filesystem::path> write_plots(const std::vector<CurveTable>& curves,
                                               const std::filesystem::path& dir,
                                               const std::string& title);

}  // namespace netattack

#endif  // NETATTACK_EXPERIMENT_HPP
