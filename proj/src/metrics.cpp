#include "netattack/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "netattack/paths.hpp"

namespace netattack {

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::network_crashed: return "network_crashed";
    case StopReason::strategy_stalled: return "strategy_stalled";
    case StopReason::budget_exhausted: return "budget_exhausted";
    case StopReason::graph_exhausted: return "graph_exhausted";
  }
  return "unknown";
}

CrashCriterion::CrashCriterion(double eps) : epsilon(eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("crash epsilon must lie in (0, 1), got " + format_real(eps));
  }
}

MetricsRow snapshot(const Graph& g, std::size_t step, std::size_t removed_count, bool with_diameter) {
  MetricsRow row;
  row.step = step;
  row.removed_count = removed_count;
  const auto n = static_cast<double>(g.node_count());
  row.fraction_removed = g.node_count() == 0 ? 0.0 : static_cast<double>(removed_count) / n;
  if (with_diameter) {
    const ClusterReport giant = largest_cluster(g);
    row.giant_fraction = giant.fraction;
    row.component_count = component_sizes(g).size();
    row.cluster_diameter = avg_shortest_path(g, giant.members);
    row.diameter_evaluated = true;
  } else {
    const ComponentSummary c = component_summary(g);
    row.giant_fraction = g.node_count() == 0 ? 0.0 : static_cast<double>(c.largest_size) / n;
    row.component_count = c.count;
  }
  return row;
}

std::optional<double> crash_threshold(const AttackTrace& trace, const CrashCriterion& criterion) {
  const auto& rows = trace.snapshots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!criterion.crashed(rows[i].giant_fraction)) continue;
    if (i == 0) return rows[0].fraction_removed;
    const MetricsRow& above = rows[i - 1];
    const MetricsRow& below = rows[i];
    if (below.step <= above.step + 1) return below.fraction_removed;
    const double t = (above.giant_fraction - criterion.epsilon) /
                     (above.giant_fraction - below.giant_fraction);
    return above.fraction_removed + t * (below.fraction_removed - above.fraction_removed);
  }
  return std::nullopt;
}

SampleStats sample_stats(std::span<const double> values) {
  SampleStats s;
  s.n = values.size();
  if (s.n == 0) return s;
  // Welford: identical inputs give their exact value and a zero spread.
  double m2 = 0.0;
  std::size_t k = 0;
  for (double v : values) {
    ++k;
    const double delta = v - s.mean;
    s.mean += delta / static_cast<double>(k);
    m2 += delta * (v - s.mean);
  }
  s.std = std::sqrt(m2 / static_cast<double>(s.n));
  return s;
}

namespace {

// Index of the row nearest to f, restricted to rows accepted by `keep`.
// Earlier row wins on an exact tie. Returns rows.size() if nothing is kept.
template <typename Keep>
std::size_t nearest_row(const std::vector<MetricsRow>& rows, double f, Keep keep) {
  std::size_t best = rows.size();
  double best_gap = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!keep(rows[i])) continue;
    const double gap = std::abs(rows[i].fraction_removed - f);
    if (best == rows.size() || gap < best_gap) {
      best = i;
      best_gap = gap;
    }
  }
  return best;
}

// Nearest row over all rows, by binary search on the non-decreasing f column.
std::size_t nearest_row(const std::vector<MetricsRow>& rows, double f) {
  auto it = std::lower_bound(rows.begin(), rows.end(), f,
                             [](const MetricsRow& r, double x) { return r.fraction_removed < x; });
  if (it == rows.end()) return rows.size() - 1;
  const auto hi = static_cast<std::size_t>(it - rows.begin());
  if (hi == 0) return 0;
  // Several rows may share one f; step back to the first of the lower group.
  std::size_t lo = hi - 1;
  const double lo_gap = f - rows[lo].fraction_removed;
  const double hi_gap = rows[hi].fraction_removed - f;
  if (hi_gap < lo_gap) return hi;
  while (lo > 0 && rows[lo - 1].fraction_removed == rows[lo].fraction_removed) --lo;
  return lo;
}

}  // namespace

CurveTable curve_export(std::span<const AttackTrace> traces) {
  if (traces.empty()) throw std::invalid_argument("curve_export: no traces");
  const auto& first = traces.front();
  for (const auto& t : traces) {
    if (t.label != first.label || t.node_count != first.node_count) {
      throw std::invalid_argument("curve_export: traces come from different configurations ('" +
                                  first.label + "' vs '" + t.label + "')");
    }
    if (t.snapshots.empty()) throw std::invalid_argument("curve_export: trace without snapshots");
  }

  std::vector<double> grid;
  for (const auto& t : traces) {
    for (const auto& r : t.snapshots) grid.push_back(r.fraction_removed);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  CurveTable table;
  table.label = first.label;
  table.rows.reserve(grid.size());
  std::vector<double> s_vals, d_vals;
  for (double f : grid) {
    s_vals.clear();
    d_vals.clear();
    for (const auto& t : traces) {
      s_vals.push_back(t.snapshots[nearest_row(t.snapshots, f)].giant_fraction);
      const std::size_t di =
          nearest_row(t.snapshots, f, [](const MetricsRow& r) { return r.diameter_evaluated; });
      if (di < t.snapshots.size() && t.snapshots[di].cluster_diameter) {
        d_vals.push_back(*t.snapshots[di].cluster_diameter);
      }
    }
    CurveRow row;
    row.f = f;
    const auto s = sample_stats(s_vals);
    row.s_mean = s.mean;
    row.s_std = s.std;
    if (!d_vals.empty()) {
      const auto d = sample_stats(d_vals);
      row.d_mean = d.mean;
      row.d_std = d.std;
    }
    row.n_samples = traces.size();
    table.rows.push_back(row);
  }
  return table;
}

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_curve_csv(std::ostream& out, const CurveTable& table) {
  out << "# label: " << table.label << '\n';
  out << "# rows: " << table.rows.size() << '\n';
  out << "# alignment: grid = union of snapshot fractions over all traces; each trace contributes "
         "its nearest snapshot in f (earlier on ties); d uses the nearest snapshot where d was "
         "evaluated; std is the population standard deviation\n";
  out << "f,S_mean,S_std,d_mean,d_std,n_samples\n";
  for (const auto& r : table.rows) {
    out << format_real(r.f) << ',' << format_real(r.s_mean) << ',' << format_real(r.s_std) << ',';
    if (r.d_mean) out << format_real(*r.d_mean);
    out << ',';
    if (r.d_std) out << format_real(*r.d_std);
    out << ',' << r.n_samples << '\n';
  }
}

CurveTable read_curve_csv(std::istream& in) {
  CurveTable table;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  auto parse_real = [&](const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kLabel = "# label: ";
      if (line.starts_with(kLabel)) table.label = line.substr(kLabel.size());
      continue;
    }
    if (!header_seen) {
      if (line != "f,S_mean,S_std,d_mean,d_std,n_samples") {
        throw std::runtime_error("curve csv: unexpected header '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 6) {
      throw std::runtime_error("curve csv line " + std::to_string(line_no) + ": expected 6 columns");
    }
    CurveRow r;
    r.f = parse_real(cells[0]);
    r.s_mean = parse_real(cells[1]);
    r.s_std = parse_real(cells[2]);
    if (!cells[3].empty()) r.d_mean = parse_real(cells[3]);
    if (!cells[4].empty()) r.d_std = parse_real(cells[4]);
    r.n_samples = static_cast<std::size_t>(parse_real(cells[5]));
    table.rows.push_back(r);
  }
  if (!header_seen) throw std::runtime_error("curve csv: missing header");
  return table;
}

}  // namespace netattack
