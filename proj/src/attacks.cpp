#include "netattack/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace netattack {

std::string_view to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::random_failure: return "random_failure";
    case StrategyKind::intentional: return "intentional";
    case StrategyKind::greedy_sequential: return "greedy_sequential";
    case StrategyKind::coordinated: return "coordinated";
    case StrategyKind::lower_bounded_parallel: return "lower_bounded_parallel";
  }
  return "unknown";
}

StrategyKind parse_strategy_kind(std::string_view name) {
  for (auto k : {StrategyKind::random_failure, StrategyKind::intentional, StrategyKind::greedy_sequential,
                 StrategyKind::coordinated, StrategyKind::lower_bounded_parallel}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidSpec("unknown strategy kind '" + std::string(name) + "'");
}

std::string_view to_string(ProtectedRule::Kind k) {
  switch (k) {
    case ProtectedRule::Kind::none: return "none";
    case ProtectedRule::Kind::miss_biggest_hub: return "miss_biggest_hub";
    case ProtectedRule::Kind::miss_medium_band: return "miss_medium_band";
  }
  return "unknown";
}

ProtectedRule::Kind parse_protected_kind(std::string_view name) {
  for (auto k : {ProtectedRule::Kind::none, ProtectedRule::Kind::miss_biggest_hub,
                 ProtectedRule::Kind::miss_medium_band}) {
    if (to_string(k) == name) return k;
  }
  throw InvalidSpec("unknown protected rule '" + std::string(name) + "'");
}

std::string_view to_string(InitialTarget::Kind k) {
  switch (k) {
    case InitialTarget::Kind::random_live: return "random_live";
    case InitialTarget::Kind::max_degree: return "max_degree";
    case InitialTarget::Kind::explicit_node: return "explicit";
  }
  return "unknown";
}

std::string StrategySpec::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (degree_threshold) out << '(' << *degree_threshold << ')';
  switch (protected_rule.kind) {
    case ProtectedRule::Kind::none: break;
    case ProtectedRule::Kind::miss_biggest_hub: out << "+miss_biggest_hub"; break;
    case ProtectedRule::Kind::miss_medium_band:
      out << "+miss_medium_band(" << format_real(protected_rule.top_frac) << ','
          << format_real(protected_rule.band_frac) << ',' << format_real(protected_rule.miss_frac) << ')';
      break;
  }
  switch (initial_target.kind) {
    case InitialTarget::Kind::random_live: break;
    case InitialTarget::Kind::max_degree: out << "@max_degree"; break;
    case InitialTarget::Kind::explicit_node: out << '@' << initial_target.node; break;
  }
  return out.str();
}

void validate(const StrategySpec& spec) {
  const bool lbp = spec.kind == StrategyKind::lower_bounded_parallel;
  if (lbp != spec.degree_threshold.has_value()) {
    throw InvalidSpec("degree_threshold is required for lower_bounded_parallel and only allowed there");
  }
  if (spec.degree_threshold && *spec.degree_threshold < 0) {
    throw InvalidSpec("degree_threshold must be non-negative");
  }
  if (spec.protected_rule.kind != ProtectedRule::Kind::none && spec.kind != StrategyKind::intentional) {
    throw InvalidSpec("protected rules apply to the intentional attack only");
  }
  const auto& r = spec.protected_rule;
  for (double frac : {r.top_frac, r.band_frac, r.miss_frac}) {
    if (!(frac >= 0.0 && frac <= 1.0)) throw InvalidSpec("protected rule fractions must lie in [0, 1]");
  }
  if (spec.initial_target.kind != InitialTarget::Kind::random_live && !is_distributed(spec.kind)) {
    throw InvalidSpec("initial_target applies to distributed attacks only");
  }
  if (spec.initial_target.kind == InitialTarget::Kind::explicit_node && spec.initial_target.node < 0) {
    throw InvalidSpec("explicit initial target needs a node id");
  }
}

namespace {

std::size_t scaled_count(double frac, std::size_t n) {
  return static_cast<std::size_t>(std::llround(frac * static_cast<double>(n)));
}

}  // namespace

NodeMask build_protected_set(const Graph& g, const ProtectedRule& rule, Rng& rng) {
  const std::size_t n = g.node_count();
  NodeMask out(n);
  for (double frac : {rule.top_frac, rule.band_frac, rule.miss_frac}) {
    if (!(frac >= 0.0 && frac <= 1.0)) throw InvalidSpec("protected rule fractions must lie in [0, 1]");
  }
  if (rule.kind == ProtectedRule::Kind::none) return out;
  if (g.live_count() != n) throw ContractViolation("protected sets are built on the intact graph");

  if (rule.kind == ProtectedRule::Kind::miss_biggest_hub) {
    if (auto hub = g.max_live_degree_node()) out.insert(*hub);
    return out;
  }

  std::vector<NodeId> ranked(n);
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
    return g.initial_degree(a) > g.initial_degree(b);
  });
  const std::size_t top = std::min(scaled_count(rule.top_frac, n), n);
  const std::size_t band = std::min(scaled_count(rule.band_frac, n), n - top);
  const std::size_t missed = std::min(scaled_count(rule.miss_frac, band), band);
  std::vector<NodeId> pool(ranked.begin() + static_cast<std::ptrdiff_t>(top),
                           ranked.begin() + static_cast<std::ptrdiff_t>(top + band));
  // Partial Fisher-Yates: the first `missed` slots become the sample.
  for (std::size_t i = 0; i < missed; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

void Frontier::on_crash(const Graph& g, NodeId v) {
  if (index_.contains(v)) index_.erase(v);
  for (NodeId u : g.neighbors(v)) {
    if (g.alive(u)) index_.upsert(u, g.live_degree(u));
  }
}

std::optional<NodeId> select_intentional(const Graph& g, const NodeMask& protected_set) {
  return g.max_live_degree_node(protected_set.empty() ? nullptr : &protected_set);
}

std::optional<NodeId> select_random_failure(const Graph& g, Rng& rng) {
  const std::size_t n = g.node_count();
  const std::size_t live = g.live_count();
  if (live == 0) return std::nullopt;
  if (live * 8 >= n) {
    for (;;) {
      const auto v = static_cast<NodeId>(uniform_below(rng, n));
      if (g.alive(v)) return v;
    }
  }
  std::size_t k = uniform_below(rng, live);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<NodeId>(i);
    if (g.alive(v) && k-- == 0) return v;
  }
  return std::nullopt;
}

std::optional<NodeId> select_greedy_sequential(const Graph& g, std::optional<NodeId> last_crashed,
                                               Rng& rng) {
  if (last_crashed) {
    std::optional<NodeId> best;
    int best_degree = -1;
    for (NodeId u : g.neighbors(*last_crashed)) {
      if (g.alive(u) && g.live_degree(u) > best_degree) {
        best = u;
        best_degree = g.live_degree(u);
      }
    }
    if (best) return best;
  }
  return select_random_failure(g, rng);
}

std::optional<NodeId> select_coordinated(const Graph& g, const Frontier& frontier, Rng& rng) {
  if (auto v = frontier.best()) return v;
  return select_random_failure(g, rng);
}

std::vector<NodeId> step_lower_bounded(const Frontier& frontier, int threshold) {
  return frontier.above(threshold);
}

SnapshotCadence SnapshotCadence::defaults(std::size_t node_count) {
  SnapshotCadence c;
  c.s_every = std::max<std::size_t>(1, (node_count + 199) / 200);
  c.d_every = std::max<std::size_t>(1, (node_count + 49) / 50);
  return c;
}

namespace {

std::optional<NodeId> initial_node(const Graph& g, const InitialTarget& target, Rng& rng) {
  switch (target.kind) {
    case InitialTarget::Kind::random_live: return select_random_failure(g, rng);
    case InitialTarget::Kind::max_degree: return g.max_live_degree_node();
    case InitialTarget::Kind::explicit_node: return target.node;
  }
  return std::nullopt;
}

}  // namespace

AttackTrace run_attack(Graph& g, const StrategySpec& spec, const RunOptions& options) {
  validate(spec);
  if (!(options.budget > 0.0 && options.budget <= 1.0)) throw InvalidSpec("budget must lie in (0, 1]");
  if (options.cadence.s_every == 0) throw InvalidSpec("snapshot cadence must be >= 1");
  if (spec.initial_target.kind == InitialTarget::Kind::explicit_node) {
    const NodeId v = spec.initial_target.node;
    if (static_cast<std::size_t>(v) >= g.node_count() || !g.alive(v)) {
      throw InvalidSpec("explicit initial target " + std::to_string(v) + " is not a live node");
    }
  }

  const std::size_t n = g.node_count();
  Rng rng = make_rng(spec.seed, Stream::attack);
  const NodeMask protected_set = build_protected_set(g, spec.protected_rule, rng);
  Frontier frontier(n);
  const bool track_frontier =
      spec.kind == StrategyKind::coordinated || spec.kind == StrategyKind::lower_bounded_parallel;
  const bool with_d = options.cadence.d_every > 0;

  AttackTrace trace;
  trace.label = spec.label();
  trace.node_count = n;
  trace.snapshots.push_back(snapshot(g, 0, 0, with_d));

  std::size_t removed = 0;
  std::size_t step = 0;
  std::size_t last_s = 0;
  std::size_t last_d = 0;
  std::optional<NodeId> last_crashed;
  std::vector<NodeId> batch;

  auto crash = [&](NodeId v) {
    g.crash_node(v);
    if (track_frontier) frontier.on_crash(g, v);
    last_crashed = v;
    ++removed;
  };

  if (options.early_stop && options.criterion.crashed(trace.snapshots.back().giant_fraction)) {
    trace.stop_reason = StopReason::network_crashed;
    return trace;
  }

  for (;;) {
    if (g.live_count() == 0) {
      trace.stop_reason = StopReason::graph_exhausted;
      break;
    }
    if (static_cast<double>(removed) >= options.budget * static_cast<double>(n)) {
      trace.stop_reason = StopReason::budget_exhausted;
      break;
    }

    batch.clear();
    if (step == 0 && is_distributed(spec.kind)) {
      if (auto v = initial_node(g, spec.initial_target, rng)) batch.push_back(*v);
    } else {
      switch (spec.kind) {
        case StrategyKind::random_failure:
          if (auto v = select_random_failure(g, rng)) batch.push_back(*v);
          break;
        case StrategyKind::intentional:
          if (auto v = select_intentional(g, protected_set)) batch.push_back(*v);
          break;
        case StrategyKind::greedy_sequential:
          if (auto v = select_greedy_sequential(g, last_crashed, rng)) batch.push_back(*v);
          break;
        case StrategyKind::coordinated:
          if (auto v = select_coordinated(g, frontier, rng)) batch.push_back(*v);
          break;
        case StrategyKind::lower_bounded_parallel:
          batch = step_lower_bounded(frontier, *spec.degree_threshold);
          break;
      }
    }
    if (batch.empty()) {
      trace.stop_reason = StopReason::strategy_stalled;
      break;
    }

    ++step;
    for (NodeId v : batch) crash(v);
    trace.removals.push_back({step, batch});

    const bool take_d = with_d && removed - last_d >= options.cadence.d_every;
    const bool take_s = take_d || removed - last_s >= options.cadence.s_every ||
                        spec.kind == StrategyKind::lower_bounded_parallel;
    if (take_s || options.early_stop) {
      MetricsRow row = snapshot(g, step, removed, take_d);
      const bool crashed = options.early_stop && options.criterion.crashed(row.giant_fraction);
      if (crashed && with_d && !row.diameter_evaluated) row = snapshot(g, step, removed, true);
      if (take_s || crashed) {
        trace.snapshots.push_back(row);
        last_s = removed;
        if (row.diameter_evaluated) last_d = removed;
      }
      if (crashed) {
        trace.stop_reason = StopReason::network_crashed;
        return trace;
      }
    }
  }

  if (trace.snapshots.back().removed_count != removed) {
    trace.snapshots.push_back(snapshot(g, step, removed, with_d));
  }
  return trace;
}

std::vector<MetricsRow> replay_snapshots(Graph g, const AttackTrace& trace) {
  std::vector<MetricsRow> rows;
  std::size_t next = 0;
  std::size_t removed = 0;
  auto emit_until = [&](std::size_t step) {
    while (next < trace.snapshots.size() && trace.snapshots[next].step == step) {
      rows.push_back(snapshot(g, step, removed, trace.snapshots[next].diameter_evaluated));
      ++next;
    }
  };
  emit_until(0);
  for (const auto& r : trace.removals) {
    for (NodeId v : r.nodes) {
      g.crash_node(v);
      ++removed;
    }
    emit_until(r.step);
  }
  return rows;
}

}  // namespace netattack
