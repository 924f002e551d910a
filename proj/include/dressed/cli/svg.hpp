#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dressed::cli {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
  bool markers = false;  ///< draw points instead of a polyline
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  /// Fixed y-range; points outside are clipped and break the polyline.
  std::optional<std::pair<double, double>> y_range;
  int width = 720;
  int height = 480;
};

/// Minimal line plot: frame, five ticks per axis, labels, legend.
std::string render_svg(const PlotSpec& spec);

}  // namespace dressed::cli
