#ifndef NETATTACK_PATHS_HPP
#define NETATTACK_PATHS_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "netattack/graph.hpp"

namespace netattack {

/// Sum of hop distances over ordered member pairs, plus the pair count.
struct PathSums {
  std::uint64_t distance_sum = 0;
  std::uint64_t ordered_pairs = 0;
};

namespace kernels {

/// Reference all-sources BFS, one source at a time.
PathSums pair_distance_sums_serial(const Graph& g, std::span<const NodeId> members);

/// Same sums with sources split across OpenMP threads. Integer reduction, so
/// the result is bit-identical to the serial kernel for any thread count.
PathSums pair_distance_sums_parallel(const Graph& g, std::span<const NodeId> members);

}  // namespace kernels

/// Mean hop distance over unordered member pairs, walking live nodes only.
/// Empty when fewer than two members. Throws ContractViolation if a member is
/// crashed or the members are not mutually reachable.
std::optional<double> avg_shortest_path(const Graph& g, std::span<const NodeId> members);

/// Serial variant, kept for cross-checking the parallel path.
std::optional<double> avg_shortest_path_serial(const Graph& g, std::span<const NodeId> members);

}  // namespace netattack

#endif  // NETATTACK_PATHS_HPP
