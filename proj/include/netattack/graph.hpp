#ifndef NETATTACK_GRAPH_HPP
#define NETATTACK_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netattack/degree_buckets.hpp"
#include "netattack/node_set.hpp"

namespace netattack {

using Edge = std::pair<NodeId, NodeId>;

/// Raised when a caller breaks an operation's precondition (crashing a node
/// twice, querying an id outside [0, N), passing a disconnected cluster...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Counts of raw input edges that were discarded while building a graph.
struct BuildWarnings {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Undirected simple graph with crash semantics.
///
/// Adjacency is immutable after construction and stored in CSR form with
/// sorted neighbour lists. Crashing a node is a soft delete: its adjacency
/// stays readable (distributed attacks walk the neighbourhoods of crashed
/// nodes), but it leaves the degree index and every live neighbour loses one
/// unit of live degree.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph from raw pairs. Self-loops and repeated pairs
  /// (in either orientation) are dropped and counted in `warnings`.
  /// Throws std::invalid_argument naming the first out-of-range pair.
  static Graph build(std::size_t node_count, std::span<const Edge> edges,
                     BuildWarnings* warnings = nullptr);

  std::size_t node_count() const { return alive_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::size_t live_count() const { return live_count_; }

  bool alive(NodeId v) const {
    check_range(v);
    return alive_[static_cast<std::size_t>(v)] != 0;
  }

  /// Live degree of a live node. Zero for crashed nodes.
  int live_degree(NodeId v) const {
    check_range(v);
    return live_degree_[static_cast<std::size_t>(v)];
  }

  /// Degree in the original (uncrashed) graph.
  int initial_degree(NodeId v) const {
    check_range(v);
    const auto i = static_cast<std::size_t>(v);
    return static_cast<int>(offsets_[i + 1] - offsets_[i]);
  }

  /// Full adjacency of `v`, crashed neighbours included.
  std::span<const NodeId> neighbors(NodeId v) const {
    check_range(v);
    const auto i = static_cast<std::size_t>(v);
    return {neighbors_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// Live members of the adjacency of `v`, ascending. `v` itself may be crashed.
  std::vector<NodeId> live_neighbors(NodeId v) const;

  void crash_node(NodeId v);

  /// Live node outside `excluded` with the largest live degree; ties go to
  /// the smallest id.
  std::optional<NodeId> max_live_degree_node(const NodeMask* excluded = nullptr) const {
    return index_.max_node(excluded);
  }

  int max_live_degree() const { return index_.max_key(); }

  const DegreeBuckets& degree_index() const { return index_; }

  /// Live node ids in ascending order.
  std::vector<NodeId> live_nodes() const;

  /// Edges (u < v) of the original graph, in ascending order.
  std::vector<Edge> edges() const;

 private:
  void check_range(NodeId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= alive_.size()) {
      throw ContractViolation("node id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(alive_.size()) + ")");
    }
  }

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<std::uint8_t> alive_;
  std::vector<int> live_degree_;
  std::size_t live_count_ = 0;
  DegreeBuckets index_;
};

/// Biggest connected set of live nodes.
struct ClusterReport {
  std::size_t size = 0;
  std::vector<NodeId> members;  // ascending
  double fraction = 0.0;        // size / N
};

/// Component structure over live nodes and live-live edges.
struct ComponentSummary {
  std::size_t count = 0;
  std::size_t largest_size = 0;
  NodeId largest_root = -1;  // smallest id inside the largest component
};

ComponentSummary component_summary(const Graph& g);

/// Largest live component. Among equal-sized components, the one containing
/// the smallest node id wins.
ClusterReport largest_cluster(const Graph& g);

/// Sizes of every live component, ordered by their smallest member id.
std::vector<std::size_t> component_sizes(const Graph& g);

}  // namespace netattack

#endif  // NETATTACK_GRAPH_HPP
