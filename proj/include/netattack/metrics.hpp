#ifndef NETATTACK_METRICS_HPP
#define NETATTACK_METRICS_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "netattack/graph.hpp"
#include "netattack/trace.hpp"

namespace netattack {

/// The network counts as crashed once S <= epsilon.
struct CrashCriterion {
  double epsilon = 0.01;

  explicit CrashCriterion(double eps = 0.01);
  bool crashed(double giant_fraction) const { return giant_fraction <= epsilon; }
};

/// Measures the current graph state. The cluster diameter (mean shortest
/// path of the giant cluster) is the expensive part and only runs when asked.
MetricsRow snapshot(const Graph& g, std::size_t step, std::size_t removed_count, bool with_diameter);

/// Fraction removed at which the trace first reaches S <= epsilon. When the
/// crossing falls between two snapshots, f is interpolated linearly on S
/// between the last row above epsilon and the first row at or below it.
std::optional<double> crash_threshold(const AttackTrace& trace, const CrashCriterion& criterion);

struct CurveRow {
  double f = 0.0;
  double s_mean = 0.0;
  double s_std = 0.0;
  std::optional<double> d_mean;
  std::optional<double> d_std;
  std::size_t n_samples = 0;
};

struct CurveTable {
  std::string label;
  std::vector<CurveRow> rows;
};

/// Averages traces of one configuration over the union of their snapshot
/// fractions. At each grid point every trace contributes its snapshot nearest
/// in f (the earlier one on an exact tie). Diameters come from the nearest
/// snapshot at which the diameter was evaluated. Population std deviation.
/// Throws std::invalid_argument for an empty list or mixed labels / sizes.
CurveTable curve_export(std::span<const AttackTrace> traces);

/// CSV with '#' header lines, then columns f,S_mean,S_std,d_mean,d_std,n_samples.
void write_curve_csv(std::ostream& out, const CurveTable& table);

/// Reads a curve CSV produced by write_curve_csv (comment lines skipped).
CurveTable read_curve_csv(std::istream& in);

/// Mean and population standard deviation.
struct SampleStats {
  std::size_t n = 0;
  double mean = 0.0;
  double std = 0.0;
};
SampleStats sample_stats(std::span<const double> values);

/// Deterministic shortest round-trip formatting for CSV output.
std::string format_real(double v);

}  // namespace netattack

#endif  // NETATTACK_METRICS_HPP
