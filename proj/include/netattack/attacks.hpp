#ifndef NETATTACK_ATTACKS_HPP
#define NETATTACK_ATTACKS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netattack/degree_buckets.hpp"
#include "netattack/graph.hpp"
#include "netattack/metrics.hpp"
#include "netattack/rng.hpp"
#include "netattack/trace.hpp"

namespace netattack {

enum class StrategyKind { random_failure, intentional, greedy_sequential, coordinated, lower_bounded_parallel };

std::string_view to_string(StrategyKind k);
StrategyKind parse_strategy_kind(std::string_view name);

/// Distributed attacks only ever see neighbourhoods of crashed nodes.
inline bool is_distributed(StrategyKind k) {
  return k == StrategyKind::greedy_sequential || k == StrategyKind::coordinated ||
         k == StrategyKind::lower_bounded_parallel;
}

/// Nodes the intentional attacker fails to identify. Ranks use the degrees of
/// the intact graph; the sets are frozen before the first removal.
struct ProtectedRule {
  enum class Kind { none, miss_biggest_hub, miss_medium_band };
  Kind kind = Kind::none;
  double top_frac = 0.01;   // hubs above the band, always attacked
  double band_frac = 0.03;  // width of the medium band that follows
  double miss_frac = 0.10;  // share of the band that is missed

  bool operator==(const ProtectedRule&) const = default;
};

std::string_view to_string(ProtectedRule::Kind k);
ProtectedRule::Kind parse_protected_kind(std::string_view name);

struct InitialTarget {
  enum class Kind { random_live, max_degree, explicit_node };
  Kind kind = Kind::random_live;
  NodeId node = -1;  // explicit_node only

  bool operator==(const InitialTarget&) const = default;
};

std::string_view to_string(InitialTarget::Kind k);

struct StrategySpec {
  StrategyKind kind = StrategyKind::intentional;
  ProtectedRule protected_rule;
  std::optional<int> degree_threshold;  // lower_bounded_parallel only
  InitialTarget initial_target;         // distributed kinds only
  std::uint64_t seed = 0;
  /// Free-form name for output files; defaults to describe().
  std::string name;

  /// Canonical description, e.g. "intentional+miss_medium_band(0.5)" or
  /// "lower_bounded_parallel(4)".
  std::string describe() const;
  std::string label() const { return name.empty() ? describe() : name; }

  bool operator==(const StrategySpec&) const = default;
};

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidSpec unless the field combination is coherent.
void validate(const StrategySpec& spec);

/// Protected set for `rule`, computed from the intact graph.
/// miss_biggest_hub protects the single max-degree node. miss_medium_band
/// ranks nodes by degree (desc, id asc), skips the top round(top_frac*N), and
/// protects a uniform sample of round(miss_frac*B) nodes from the next
/// B = round(band_frac*N).
NodeMask build_protected_set(const Graph& g, const ProtectedRule& rule, Rng& rng);

/// Live nodes adjacent to at least one crashed node, bucketed by live degree.
class Frontier {
 public:
  explicit Frontier(std::size_t node_count) : index_(node_count) {}

  /// Call right after g.crash_node(v).
  void on_crash(const Graph& g, NodeId v);

  bool empty() const { return index_.empty(); }
  std::size_t size() const { return index_.size(); }
  bool contains(NodeId v) const { return index_.contains(v); }
  std::optional<NodeId> best() const { return index_.max_node(); }
  std::vector<NodeId> above(int threshold) const { return index_.members_above(threshold); }

 private:
  DegreeBuckets index_;
};

std::optional<NodeId> select_intentional(const Graph& g, const NodeMask& protected_set);

/// Uniform over live nodes.
std::optional<NodeId> select_random_failure(const Graph& g, Rng& rng);

/// Best live neighbour of `last_crashed`; a uniform live node if there is none.
std::optional<NodeId> select_greedy_sequential(const Graph& g, std::optional<NodeId> last_crashed,
                                               Rng& rng);

/// Best node of the whole frontier; a uniform live node if the frontier is empty.
std::optional<NodeId> select_coordinated(const Graph& g, const Frontier& frontier, Rng& rng);

/// Frontier nodes whose live degree, read before any removal in this step,
/// exceeds `threshold`. Empty means the attack has stalled.
std::vector<NodeId> step_lower_bounded(const Frontier& frontier, int threshold);

/// Snapshot policy in removals. `d_every == 0` disables the diameter.
struct SnapshotCadence {
  std::size_t s_every = 1;
  std::size_t d_every = 0;

  /// ceil(N/200) for S, ceil(N/50) for d.
  static SnapshotCadence defaults(std::size_t node_count);
};

struct RunOptions {
  double budget = 1.0;  // stop once removed/N >= budget
  SnapshotCadence cadence;
  bool early_stop = false;  // stop as soon as S <= epsilon
  CrashCriterion criterion{};
};

/// Executes `spec` on `g` (which is left in its post-attack state).
///
/// Step 0 is the intact-graph snapshot. Every later step removes one node,
/// except lower_bounded_parallel where the first step crashes the seed node
/// and each following step removes a whole frontier set. Snapshots are taken
/// once removed_count has advanced by at least s_every since the last one,
/// after every lower_bounded_parallel step, and always at the final state.
AttackTrace run_attack(Graph& g, const StrategySpec& spec, const RunOptions& options);

/// Re-applies a trace's removals to a fresh graph and re-measures every
/// snapshot. Used to audit traces.
std::vector<MetricsRow> replay_snapshots(Graph g, const AttackTrace& trace);

}  // namespace netattack

#endif  // NETATTACK_ATTACKS_HPP
