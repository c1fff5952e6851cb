#ifndef NETATTACK_SVG_HPP
#define NETATTACK_SVG_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace netattack::svg {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 480;
};

/// Minimal line chart: axes with ticks, one polyline per series and a legend.
/// The y range starts at zero and the x range is [0, max x].
void line_chart(std::ostream& out, const ChartSpec& spec, const std::vector<Series>& series);

}  // namespace netattack::svg

#endif  // NETATTACK_SVG_HPP
