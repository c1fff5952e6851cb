#include "netattack/paths.hpp"

#include <string>
#include <vector>

namespace netattack {
namespace {

void validate_members(const Graph& g, std::span<const NodeId> members) {
  for (NodeId v : members) {
    if (!g.alive(v)) {
      throw ContractViolation("cluster member " + std::to_string(v) + " is crashed");
    }
  }
}

// BFS from `src` over live nodes. Accumulates distances to members and
// returns how many members were reached (src included).
struct BfsScratch {
  explicit BfsScratch(std::size_t n) : dist(n, -1) { queue.reserve(n); }
  std::vector<int> dist;
  std::vector<NodeId> queue;
};

std::size_t bfs_from(const Graph& g, NodeId src, const NodeMask& member, BfsScratch& s,
                     std::uint64_t& sum) {
  s.queue.clear();
  s.queue.push_back(src);
  s.dist[static_cast<std::size_t>(src)] = 0;
  std::size_t reached = 1;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const NodeId x = s.queue[head];
    const int next = s.dist[static_cast<std::size_t>(x)] + 1;
    for (NodeId u : g.neighbors(x)) {
      auto& d = s.dist[static_cast<std::size_t>(u)];
      if (d != -1 || !g.alive(u)) continue;
      d = next;
      s.queue.push_back(u);
      if (member.contains(u)) {
        sum += static_cast<std::uint64_t>(next);
        ++reached;
      }
    }
  }
  for (NodeId x : s.queue) s.dist[static_cast<std::size_t>(x)] = -1;
  return reached;
}

[[noreturn]] void throw_disconnected(NodeId src) {
  throw ContractViolation("cluster is not connected: member " + std::to_string(src) +
                          " does not reach every other member");
}

std::optional<double> mean_from(const PathSums& s) {
  if (s.ordered_pairs == 0) return std::nullopt;
  return static_cast<double>(s.distance_sum) / static_cast<double>(s.ordered_pairs);
}

}  // namespace

namespace kernels {

PathSums pair_distance_sums_serial(const Graph& g, std::span<const NodeId> members) {
  validate_members(g, members);
  const NodeMask member(g.node_count(), members);
  const std::size_t k = member.size();
  if (k != members.size()) throw ContractViolation("cluster member list has duplicates");
  PathSums out;
  if (k < 2) return out;
  BfsScratch scratch(g.node_count());
  for (NodeId src : members) {
    if (bfs_from(g, src, member, scratch, out.distance_sum) != k) throw_disconnected(src);
  }
  out.ordered_pairs = static_cast<std::uint64_t>(k) * (k - 1);
  return out;
}

PathSums pair_distance_sums_parallel(const Graph& g, std::span<const NodeId> members) {
  validate_members(g, members);
  const NodeMask member(g.node_count(), members);
  const std::size_t k = member.size();
  if (k != members.size()) throw ContractViolation("cluster member list has duplicates");
  PathSums out;
  if (k < 2) return out;

  const auto count = static_cast<std::ptrdiff_t>(members.size());
  std::uint64_t total = 0;
  NodeId bad_source = -1;
#pragma omp parallel reduction(+ : total)
  {
    BfsScratch scratch(g.node_count());
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const NodeId src = members[static_cast<std::size_t>(i)];
      if (bfs_from(g, src, member, scratch, total) != k) {
#pragma omp critical(netattack_paths_error)
        bad_source = src;
      }
    }
  }
  if (bad_source != -1) throw_disconnected(bad_source);
  out.distance_sum = total;
  out.ordered_pairs = static_cast<std::uint64_t>(k) * (k - 1);
  return out;
}

}  // namespace kernels

std::optional<double> avg_shortest_path(const Graph& g, std::span<const NodeId> members) {
  return mean_from(kernels::pair_distance_sums_parallel(g, members));
}

std::optional<double> avg_shortest_path_serial(const Graph& g, std::span<const NodeId> members) {
  return mean_from(kernels::pair_distance_sums_serial(g, members));
}

}  // namespace netattack
