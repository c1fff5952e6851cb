#include "netattack/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace netattack {

Graph Graph::build(std::size_t node_count, std::span<const Edge> edges,
                   BuildWarnings* warnings) {
  if (node_count > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
    throw std::invalid_argument("node count exceeds id range");
  }
  BuildWarnings local;
  std::vector<Edge> clean;
  clean.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= node_count ||
        static_cast<std::size_t>(v) >= node_count) {
      throw std::invalid_argument("edge #" + std::to_string(i) + " (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range for " +
                                  std::to_string(node_count) + " nodes");
    }
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    if (u > v) std::swap(u, v);
    clean.emplace_back(u, v);
  }
  std::sort(clean.begin(), clean.end());
  const auto last = std::unique(clean.begin(), clean.end());
  local.duplicate_edges = static_cast<std::size_t>(clean.end() - last);
  clean.erase(last, clean.end());

  Graph g;
  std::vector<std::size_t> degree(node_count, 0);
  for (const auto& [u, v] : clean) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.neighbors_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v) with u < v, so filling in this order leaves
  // every neighbour list sorted: lower ids arrive via the v-side first.
  for (const auto& [u, v] : clean) g.neighbors_[cursor[static_cast<std::size_t>(v)]++] = u;
  for (const auto& [u, v] : clean) g.neighbors_[cursor[static_cast<std::size_t>(u)]++] = v;

  g.alive_.assign(node_count, 1);
  g.live_degree_.resize(node_count);
  g.live_count_ = node_count;
  g.index_ = DegreeBuckets(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    g.live_degree_[i] = static_cast<int>(degree[i]);
    g.index_.insert(static_cast<NodeId>(i), g.live_degree_[i]);
  }
  if (warnings != nullptr) *warnings = local;
  return g;
}

std::vector<NodeId> Graph::live_neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (NodeId u : neighbors(v)) {
    if (alive_[static_cast<std::size_t>(u)] != 0) out.push_back(u);
  }
  return out;
}

void Graph::crash_node(NodeId v) {
  check_range(v);
  auto& state = alive_[static_cast<std::size_t>(v)];
  if (state == 0) throw ContractViolation("node " + std::to_string(v) + " is already crashed");
  state = 0;
  --live_count_;
  index_.erase(v);
  live_degree_[static_cast<std::size_t>(v)] = 0;
  for (NodeId u : neighbors(v)) {
    const auto ui = static_cast<std::size_t>(u);
    if (alive_[ui] == 0) continue;
    index_.upsert(u, --live_degree_[ui]);
  }
}

std::vector<NodeId> Graph::live_nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_count_);
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (alive_[i] != 0) out.push_back(static_cast<NodeId>(i));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < alive_.size(); ++u) {
    for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
      if (static_cast<std::size_t>(neighbors_[k]) > u) out.emplace_back(static_cast<NodeId>(u), neighbors_[k]);
    }
  }
  return out;
}

namespace {

// Labels every live node with the index of its component, components being
// numbered in order of their smallest member. Returns per-component sizes.
std::vector<std::size_t> label_components(const Graph& g, std::vector<int>& label) {
  const std::size_t n = g.node_count();
  label.assign(n, -1);
  std::vector<std::size_t> sizes;
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto src = static_cast<NodeId>(s);
    if (label[s] != -1 || !g.alive(src)) continue;
    const int id = static_cast<int>(sizes.size());
    queue.clear();
    queue.push_back(src);
    label[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId u : g.neighbors(queue[head])) {
        const auto ui = static_cast<std::size_t>(u);
        if (label[ui] == -1 && g.alive(u)) {
          label[ui] = id;
          queue.push_back(u);
        }
      }
    }
    sizes.push_back(queue.size());
  }
  return sizes;
}

}  // namespace

std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<int> label;
  return label_components(g, label);
}

ComponentSummary component_summary(const Graph& g) {
  std::vector<int> label;
  const auto sizes = label_components(g, label);
  ComponentSummary out;
  out.count = sizes.size();
  std::size_t best = sizes.size();
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > out.largest_size) {
      out.largest_size = sizes[c];
      best = c;
    }
  }
  if (best != sizes.size()) {
    const auto it = std::find(label.begin(), label.end(), static_cast<int>(best));
    out.largest_root = static_cast<NodeId>(it - label.begin());
  }
  return out;
}

ClusterReport largest_cluster(const Graph& g) {
  std::vector<int> label;
  const auto sizes = label_components(g, label);
  ClusterReport report;
  if (sizes.empty()) return report;
  // Strict '>' keeps the first (smallest-id) component among equals.
  std::size_t best = 0;
  for (std::size_t c = 1; c < sizes.size(); ++c) {
    if (sizes[c] > sizes[best]) best = c;
  }
  report.size = sizes[best];
  report.members.reserve(report.size);
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == static_cast<int>(best)) report.members.push_back(static_cast<NodeId>(i));
  }
  report.fraction = static_cast<double>(report.size) / static_cast<double>(g.node_count());
  return report;
}

}  // namespace netattack
