#include "netattack/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace netattack::svg {
namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Round the axis maximum up to a 1/2/5 x 10^k step with 5 ticks.
double nice_step(double max_value) {
  if (max_value <= 0.0) return 0.2;
  const double raw = max_value / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

void line_chart(std::ostream& out, const ChartSpec& spec, const std::vector<Series>& series) {
  const double left = 70, right = 190, top = 40, bottom = 55;
  const double pw = spec.width - left - right;
  const double ph = spec.height - top - bottom;

  double x_max = 0.0, y_max = 0.0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_max = std::max(x_max, x);
      y_max = std::max(y_max, y);
    }
  }
  const double x_step = nice_step(x_max);
  const double y_step = nice_step(y_max);
  const double x_hi = x_step * std::max(1.0, std::ceil(x_max / x_step));
  const double y_hi = y_step * std::max(1.0, std::ceil(y_max / y_step));
  auto sx = [&](double x) { return left + pw * x / x_hi; };
  auto sy = [&](double y) { return top + ph * (1.0 - y / y_hi); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(spec.title) << "</text>\n";

  for (double x = 0.0; x <= x_hi + 1e-12; x += x_step) {
    out << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << num(top) << "\" x2=\"" << num(sx(x)) << "\" y2=\""
        << num(top + ph) << "\" stroke=\"#e0e0e0\"/>\n";
    out << "<text x=\"" << num(sx(x)) << "\" y=\"" << num(top + ph + 16) << "\" text-anchor=\"middle\">"
        << tick_label(x) << "</text>\n";
  }
  for (double y = 0.0; y <= y_hi + 1e-12; y += y_step) {
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << num(left + pw) << "\" y2=\""
        << num(sy(y)) << "\" stroke=\"#e0e0e0\"/>\n";
    out << "<text x=\"" << num(left - 6) << "\" y=\"" << num(sy(y) + 4) << "\" text-anchor=\"end\">"
        << tick_label(y) << "</text>\n";
  }
  out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\""
      << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(spec.height - 14.0)
      << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
  out << "<text transform=\"translate(18," << num(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(spec.y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % kPalette.size()];
    if (!s.points.empty()) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : s.points) out << num(sx(x)) << ',' << num(sy(y)) << ' ';
      out << "\"/>\n";
    }
    const double ly = top + 14 + 18 * static_cast<double>(i);
    out << "<line x1=\"" << num(left + pw + 12) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(left + pw + 34)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(left + pw + 40) << "\" y=\"" << num(ly + 4) << "\" font-size=\"10\">"
        << escape(s.name) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace netattack::svg
