#ifndef NETATTACK_CONFIG_HPP
#define NETATTACK_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "netattack/attacks.hpp"

namespace netattack {

/// Bad or inconsistent experiment configuration (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BaShape {
  std::size_t n = 0;
  std::size_t m = 0;
};

/// Either a BA model (re-generated per trial from the trial seed) or a fixed
/// edge-list file.
struct NetworkSource {
  std::optional<BaShape> ba;
  std::optional<std::filesystem::path> edge_list;
};

struct ExperimentConfig {
  std::string description;
  NetworkSource network;
  std::vector<StrategySpec> strategies;
  std::size_t trials = 1;
  std::uint64_t base_seed = 1;  // trial t uses base_seed + t
  double crash_epsilon = 0.01;
  double budget = 1.0;
  std::optional<SnapshotCadence> cadence;  // defaults depend on N
  bool early_stop = false;
  std::filesystem::path output_dir = "out";
  bool plots = true;
};

nlohmann::json to_json(const StrategySpec& spec);
StrategySpec strategy_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExperimentConfig& config);

/// Relative edge-list paths are resolved against `base_dir`.
ExperimentConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError describing the first violated constraint.
void validate(const ExperimentConfig& config);

/// Label made safe for file names.
std::string file_stem(const std::string& label);

}  // namespace netattack

#endif  // NETATTACK_CONFIG_HPP
