#include "netattack/config.hpp"

#include <fstream>
#include <set>

namespace netattack {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown key '" + key + "' in " + std::string(where));
  }
}

template <typename T>
T get_as(const json& j, const char* key, std::string_view where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string(where) + "." + key + ": " + e.what());
  }
}

}  // namespace

json to_json(const StrategySpec& spec) {
  json j;
  j["kind"] = to_string(spec.kind);
  if (!spec.name.empty()) j["name"] = spec.name;
  if (spec.degree_threshold) j["degree_threshold"] = *spec.degree_threshold;
  const auto& r = spec.protected_rule;
  if (r.kind == ProtectedRule::Kind::miss_biggest_hub) {
    j["protected"] = "miss_biggest_hub";
  } else if (r.kind == ProtectedRule::Kind::miss_medium_band) {
    j["protected"] = {{"rule", "miss_medium_band"},
                      {"top_frac", r.top_frac},
                      {"band_frac", r.band_frac},
                      {"miss_frac", r.miss_frac}};
  }
  switch (spec.initial_target.kind) {
    case InitialTarget::Kind::random_live: break;
    case InitialTarget::Kind::max_degree: j["initial_target"] = "max_degree"; break;
    case InitialTarget::Kind::explicit_node: j["initial_target"] = {{"explicit", spec.initial_target.node}}; break;
  }
  j["seed"] = spec.seed;
  return j;
}

StrategySpec strategy_from_json(const json& j) {
  constexpr std::string_view where = "strategy";
  if (!j.is_object()) throw ConfigError("strategy entries must be objects");
  reject_unknown_keys(j, {"kind", "name", "degree_threshold", "protected", "initial_target", "seed"}, where);
  StrategySpec spec;
  try {
    spec.kind = parse_strategy_kind(get_as<std::string>(j, "kind", where));
    if (j.contains("name")) spec.name = get_as<std::string>(j, "name", where);
    if (j.contains("degree_threshold")) spec.degree_threshold = get_as<int>(j, "degree_threshold", where);
    if (j.contains("seed")) spec.seed = get_as<std::uint64_t>(j, "seed", where);
    if (j.contains("protected")) {
      const json& p = j.at("protected");
      if (p.is_string()) {
        spec.protected_rule.kind = parse_protected_kind(p.get<std::string>());
      } else if (p.is_object()) {
        reject_unknown_keys(p, {"rule", "top_frac", "band_frac", "miss_frac"}, "strategy.protected");
        spec.protected_rule.kind = parse_protected_kind(get_as<std::string>(p, "rule", "strategy.protected"));
        if (p.contains("top_frac")) spec.protected_rule.top_frac = get_as<double>(p, "top_frac", "protected");
        if (p.contains("band_frac")) spec.protected_rule.band_frac = get_as<double>(p, "band_frac", "protected");
        if (p.contains("miss_frac")) spec.protected_rule.miss_frac = get_as<double>(p, "miss_frac", "protected");
      } else {
        throw ConfigError("strategy.protected must be a rule name or an object");
      }
    }
    if (j.contains("initial_target")) {
      const json& t = j.at("initial_target");
      if (t.is_string()) {
        const auto s = t.get<std::string>();
        if (s == "random_live") {
          spec.initial_target.kind = InitialTarget::Kind::random_live;
        } else if (s == "max_degree") {
          spec.initial_target.kind = InitialTarget::Kind::max_degree;
        } else {
          throw ConfigError("unknown initial_target '" + s + "'");
        }
      } else if (t.is_object() && t.contains("explicit")) {
        spec.initial_target.kind = InitialTarget::Kind::explicit_node;
        spec.initial_target.node = get_as<NodeId>(t, "explicit", "strategy.initial_target");
      } else {
        throw ConfigError("strategy.initial_target must be a name or {\"explicit\": id}");
      }
    }
    validate(spec);
  } catch (const InvalidSpec& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

json to_json(const ExperimentConfig& c) {
  json j;
  if (!c.description.empty()) j["description"] = c.description;
  if (c.network.ba) j["network"] = {{"ba", {{"n", c.network.ba->n}, {"m", c.network.ba->m}}}};
  if (c.network.edge_list) j["network"] = {{"edge_list", c.network.edge_list->string()}};
  j["strategies"] = json::array();
  for (const auto& s : c.strategies) {
    json sj = to_json(s);
    sj.erase("seed");
    j["strategies"].push_back(sj);
  }
  j["trials"] = c.trials;
  j["base_seed"] = c.base_seed;
  j["crash_epsilon"] = c.crash_epsilon;
  j["budget"] = c.budget;
  if (c.cadence) j["snapshot_cadence"] = {{"s_every", c.cadence->s_every}, {"d_every", c.cadence->d_every}};
  j["early_stop"] = c.early_stop;
  j["output_dir"] = c.output_dir.string();
  j["plots"] = c.plots;
  return j;
}

ExperimentConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  constexpr std::string_view where = "config";
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(j,
                      {"description", "requires_dataset", "network", "strategies", "trials", "base_seed",
                       "crash_epsilon", "budget", "snapshot_cadence", "early_stop", "output_dir", "plots"},
                      where);
  ExperimentConfig c;
  if (j.contains("description")) c.description = get_as<std::string>(j, "description", where);

  if (!j.contains("network")) throw ConfigError("config.network is required");
  const json& net = j.at("network");
  if (!net.is_object()) throw ConfigError("config.network must be an object");
  reject_unknown_keys(net, {"ba", "edge_list"}, "config.network");
  if (net.contains("ba") == net.contains("edge_list")) {
    throw ConfigError("config.network needs exactly one of 'ba' or 'edge_list'");
  }
  if (net.contains("ba")) {
    const json& ba = net.at("ba");
    if (!ba.is_object()) throw ConfigError("config.network.ba must be an object");
    reject_unknown_keys(ba, {"n", "m"}, "config.network.ba");
    c.network.ba = BaShape{get_as<std::size_t>(ba, "n", "network.ba"), get_as<std::size_t>(ba, "m", "network.ba")};
  } else {
    std::filesystem::path p = get_as<std::string>(net, "edge_list", "network");
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    c.network.edge_list = p;
  }

  if (!j.contains("strategies") || !j.at("strategies").is_array()) {
    throw ConfigError("config.strategies must be an array");
  }
  for (const auto& s : j.at("strategies")) c.strategies.push_back(strategy_from_json(s));

  if (j.contains("trials")) c.trials = get_as<std::size_t>(j, "trials", where);
  if (j.contains("base_seed")) c.base_seed = get_as<std::uint64_t>(j, "base_seed", where);
  if (j.contains("crash_epsilon")) c.crash_epsilon = get_as<double>(j, "crash_epsilon", where);
  if (j.contains("budget")) c.budget = get_as<double>(j, "budget", where);
  if (j.contains("snapshot_cadence")) {
    const json& sc = j.at("snapshot_cadence");
    if (!sc.is_object()) throw ConfigError("config.snapshot_cadence must be an object");
    reject_unknown_keys(sc, {"s_every", "d_every"}, "config.snapshot_cadence");
    SnapshotCadence cad;
    cad.s_every = get_as<std::size_t>(sc, "s_every", "snapshot_cadence");
    cad.d_every = sc.contains("d_every") ? get_as<std::size_t>(sc, "d_every", "snapshot_cadence") : 0;
    c.cadence = cad;
  }
  if (j.contains("early_stop")) c.early_stop = get_as<bool>(j, "early_stop", where);
  if (j.contains("output_dir")) c.output_dir = get_as<std::string>(j, "output_dir", where);
  if (j.contains("plots")) c.plots = get_as<bool>(j, "plots", where);
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j, path.parent_path());
}

void validate(const ExperimentConfig& c) {
  if (c.network.ba.has_value() == c.network.edge_list.has_value()) {
    throw ConfigError("network needs exactly one of 'ba' or 'edge_list'");
  }
  if (c.network.ba && !(c.network.ba->m >= 1 && c.network.ba->n > c.network.ba->m)) {
    throw ConfigError("network.ba needs n > m >= 1");
  }
  if (c.strategies.empty()) throw ConfigError("at least one strategy is required");
  if (c.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(c.budget > 0.0 && c.budget <= 1.0)) throw ConfigError("budget must lie in (0, 1]");
  if (!(c.crash_epsilon > 0.0 && c.crash_epsilon < 1.0)) throw ConfigError("crash_epsilon must lie in (0, 1)");
  if (c.cadence && c.cadence->s_every < 1) throw ConfigError("snapshot_cadence.s_every must be >= 1");
  std::set<std::string> stems;
  for (const auto& s : c.strategies) {
    try {
      validate(s);
    } catch (const InvalidSpec& e) {
      throw ConfigError(e.what());
    }
    if (!stems.insert(file_stem(s.label())).second) {
      throw ConfigError("duplicate strategy label '" + s.label() + "'; set distinct 'name' fields");
    }
  }
}

std::string file_stem(const std::string& label) {
  std::string out;
  for (char ch : label) {
    const bool keep = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                      ch == '_' || ch == '-' || ch == '.';
    out.push_back(keep ? ch : '_');
  }
  while (!out.empty() && (out.back() == '_' || out.back() == '.')) out.pop_back();
  return out;
}

}  // namespace netattack
