#ifndef NETATTACK_TRACE_HPP
#define NETATTACK_TRACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netattack/node_set.hpp"

namespace netattack {

/// One observation of the network during an attack.
struct MetricsRow {
  std::size_t step = 0;
  std::size_t removed_count = 0;
  double fraction_removed = 0.0;  // f
  double giant_fraction = 0.0;    // S
  /// Mean pairwise hop distance inside the giant cluster (d). Absent when the
  /// cluster has fewer than two nodes or when the diameter was not evaluated.
  std::optional<double> cluster_diameter;
  bool diameter_evaluated = false;
  std::size_t component_count = 0;

  bool operator==(const MetricsRow&) const = default;
};

enum class StopReason { network_crashed, strategy_stalled, budget_exhausted, graph_exhausted };

std::string_view to_string(StopReason r);

/// Nodes crashed during one step. Single-target strategies remove one node
/// per step; the lower-bounded parallel attack removes a set.
struct Removal {
  std::size_t step = 0;
  std::vector<NodeId> nodes;

  bool operator==(const Removal&) const = default;
};

struct AttackTrace {
  std::string label;           // strategy label, used to reject mixed averaging
  std::size_t node_count = 0;  // N of the attacked graph
  std::vector<Removal> removals;
  std::vector<MetricsRow> snapshots;
  StopReason stop_reason = StopReason::graph_exhausted;

  std::size_t removed_count() const {
    std::size_t total = 0;
    for (const auto& r : removals) total += r.nodes.size();
    return total;
  }

  bool operator==(const AttackTrace&) const = default;
};

}  // namespace netattack

#endif  // NETATTACK_TRACE_HPP
