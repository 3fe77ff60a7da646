#include "wq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "wq/error.hpp"

namespace wq {
namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const std::vector<CurvePoint>& points_of(const PlotLayer& layer) {
  if (const auto* curve = std::get_if<CurveSamples>(&layer.data)) return curve->points;
  return std::get<KnotMarkers>(layer.data).points;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void pad() {
    double width = hi - lo;
    if (width == 0.0) width = std::max(1.0, std::abs(lo));
    lo -= 0.05 * width;
    hi += 0.05 * width;
  }
};

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) {
    throw Error(ErrorCode::InvalidSpec, fmt::format("plot size {}x{}", spec.width, spec.height));
  }
  if (spec.layers.empty()) throw Error(ErrorCode::EmptyPlot, "plot has no layers");

  Range xr;
  Range yr;
  for (const auto& layer : spec.layers) {
    for (const auto& p : points_of(layer)) {
      xr.include(p.t);
      yr.include(p.y);
    }
  }
  if (!(xr.lo <= xr.hi)) throw Error(ErrorCode::EmptyPlot, "plot layers contain no points");
  xr.pad();
  yr.pad();

  const double w = spec.width;
  const double h = spec.height;
  auto px = [&](double t) { return (t - xr.lo) / (xr.hi - xr.lo) * w; };
  auto py = [&](double y) { return h - (y - yr.lo) / (yr.hi - yr.lo) * h; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      spec.width, spec.height, spec.width, spec.height);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", spec.width,
                     spec.height);
  if (!spec.title.empty()) {
    out += fmt::format("<text x=\"{:.4f}\" y=\"16\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       w / 2.0, escape_xml(spec.title));
  }
  if (!spec.x_label.empty()) {
    out += fmt::format("<text x=\"{:.4f}\" y=\"{:.4f}\" text-anchor=\"middle\" font-size=\"12\">{}</text>\n",
                       w / 2.0, h - 4.0, escape_xml(spec.x_label));
  }
  if (!spec.y_label.empty()) {
    out += fmt::format(
        "<text x=\"12\" y=\"{:.4f}\" text-anchor=\"middle\" font-size=\"12\" "
        "transform=\"rotate(-90 12 {:.4f})\">{}</text>\n",
        h / 2.0, h / 2.0, escape_xml(spec.y_label));
  }

  for (std::size_t li = 0; li < spec.layers.size(); ++li) {
    const auto& layer = spec.layers[li];
    out += fmt::format("<g id=\"layer{}\">\n", li);
    if (!layer.label.empty()) out += fmt::format("<title>{}</title>\n", escape_xml(layer.label));
    if (const auto* curve = std::get_if<CurveSamples>(&layer.data)) {
      out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"",
                         escape_xml(layer.color));
      for (std::size_t i = 0; i < curve->points.size(); ++i) {
        if (i > 0) out += ' ';
        out += fmt::format("{:.4f},{:.4f}", px(curve->points[i].t), py(curve->points[i].y));
      }
      out += "\"/>\n";
    } else {
      for (const auto& p : std::get<KnotMarkers>(layer.data).points) {
        out += fmt::format("<circle cx=\"{:.4f}\" cy=\"{:.4f}\" r=\"3\" fill=\"{}\"/>\n", px(p.t), py(p.y),
                           escape_xml(layer.color));
      }
    }
    out += "</g>\n";
  }

  for (std::size_t li = 0; li < spec.layers.size(); ++li) {
    const auto& layer = spec.layers[li];
    if (layer.label.empty()) continue;
    out += fmt::format("<text x=\"{:.4f}\" y=\"{:.4f}\" font-size=\"11\" fill=\"{}\">{}</text>\n", w - 150.0,
                       32.0 + 14.0 * static_cast<double>(li), escape_xml(layer.color),
                       escape_xml(layer.label));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace wq
