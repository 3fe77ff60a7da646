#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wq/spline.hpp"

namespace wq {

struct KnotMarkers {
  std::vector<CurvePoint> points;
};

struct PlotLayer {
  std::variant<CurveSamples, KnotMarkers> data;
  std::string color = "black";
  std::string label;
};

struct PlotSpec {
  int width = 800;
  int height = 500;
  std::vector<PlotLayer> layers;
  std::string x_label;
  std::string y_label;
  std::string title;
};

/// SVG 1.1 document: one polyline per curve layer, one circle per marker, data
/// bounds padded by 5% mapped linearly onto the full viewport. Coordinates are
/// printed with 4 decimals so identical specs render byte-identical text.
/// Throws EmptyPlot with no layers or no points, InvalidSpec for a non-positive size.
std::string render_svg(const PlotSpec& spec);

}  // namespace wq
