#include "wq/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "wq/error.hpp"
#include "wq/harmonic.hpp"
#include "wq/ingest.hpp"
#include "wq/regression.hpp"
#include "wq/spline.hpp"
#include "wq/svg.hpp"

namespace wq::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string input;
  std::string fixture;

  void attach(CLI::App& cmd) {
    auto* in = cmd.add_option("--input", input, "CSV file (header Data,temp,pH,OD,...)");
    auto* fx = cmd.add_option("--fixture", fixture, "Bundled dataset name")->check(CLI::IsMember({"gropeni"}));
    in->excludes(fx);
    fx->excludes(in);
  }

  Dataset load() const {
    if (!fixture.empty()) return gropeni_fixture();
    if (input.empty()) throw UsageError("one of --input or --fixture is required");
    std::ifstream file(input, std::ios::binary);
    if (!file) throw Error(ErrorCode::MalformedRow, fmt::format("cannot read '{}'", input));
    std::ostringstream text;
    text << file.rdbuf();
    const auto stem = std::filesystem::path(input).stem().string();
    return parse_csv(text.str(), stem, input);
  }
};

struct Interpolation {
  std::string method = "spline";
  std::optional<double> lambda;
  std::size_t resolution = 1000;

  void attach(CLI::App& cmd) {
    cmd.add_option("--method", method, "spline | lagrange | smooth")
        ->check(CLI::IsMember({"spline", "lagrange", "smooth"}));
    cmd.add_option("--lambda", lambda, "Smoothing weight (required for --method smooth)");
    cmd.add_option("--resolution", resolution, "Dense grid points over the knot span");
  }

  CurveSamples curve(const TimeSeries& series) const {
    if (method == "lagrange") return dense_grid(fit_lagrange(series), resolution);
    if (method == "smooth") {
      if (!lambda) throw UsageError("--method smooth needs --lambda");
      return dense_grid(fit_smoothing_spline(series, *lambda), resolution);
    }
    return dense_grid(fit_natural_spline(series), resolution);
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::InvalidSpec, fmt::format("cannot write '{}'", path));
  file << content;
}

std::string date_at(const TimeSeries& series, double t) {
  const auto day = day_number(series.epoch()) + static_cast<long long>(std::floor(t));
  return format_date(date_from_day_number(day));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Water-quality time series: splines, trends, correlation and harmonic comparison"};
  app.require_subcommand(1);
  std::string epoch_format = "M/D/YYYY";
  app.add_option("--epoch-format", epoch_format, "Date format of the input (only M/D/YYYY)")
      ->check(CLI::IsMember({"M/D/YYYY"}));

  Source source;
  std::string param = "OD";
  std::string param_a;
  std::string param_b;
  std::string out_path;
  Interpolation interp;
  bool with_harmonic = false;
  HarmonicSpec harmonic_shape;

  auto* interp_cmd = app.add_subcommand("interp", "Export a dense-grid interpolant as CSV");
  source.attach(*interp_cmd);
  interp_cmd->add_option("--param", param)->required();
  interp.attach(*interp_cmd);
  interp_cmd->add_option("--out", out_path, "Output CSV (t_days,date,value)")->required();

  auto* extrema_cmd = app.add_subcommand("extrema", "Interior extrema of the natural spline");
  source.attach(*extrema_cmd);
  extrema_cmd->add_option("--param", param)->required();

  auto* trend_cmd = app.add_subcommand("trend", "Linear trend over the series span");
  source.attach(*trend_cmd);
  trend_cmd->add_option("--param", param)->required();

  auto* corr_cmd = app.add_subcommand("correlate", "Pearson correlation over shared dates");
  source.attach(*corr_cmd);
  corr_cmd->add_option("--param-a", param_a)->required();
  corr_cmd->add_option("--param-b", param_b)->required();

  auto* harm_cmd = app.add_subcommand("harmonic", "Compare the spline with the scaled harmonic reference");
  source.attach(*harm_cmd);
  harm_cmd->add_option("--param", param)->required();
  harm_cmd->add_option("--angular-coeff", harmonic_shape.angular_coeff, "Radians per index unit");
  harm_cmd->add_option("--exponent", harmonic_shape.exponent, "Signed power applied to sin + cos");

  auto* plot_cmd = app.add_subcommand("plot", "Render the interpolant as SVG");
  source.attach(*plot_cmd);
  plot_cmd->add_option("--param", param)->required();
  interp.attach(*plot_cmd);
  plot_cmd->add_flag("--harmonic", with_harmonic, "Overlay the fitted harmonic reference");
  plot_cmd->add_option("--out", out_path, "Output SVG")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Dataset data = source.load();

    if (interp_cmd->parsed()) {
      const auto series = data.series(param);
      const auto curve = interp.curve(series);
      write_file(out_path, curve_to_csv(curve, series.epoch()));
      out << fmt::format("{} {} points -> {}\n", to_string(curve.source), curve.points.size(), out_path);
    } else if (extrema_cmd->parsed()) {
      const auto series = data.series(param);
      for (const auto& e : spline_extrema(fit_natural_spline(series))) {
        out << fmt::format("{} {:.6f} {} {:.10g}\n", to_string(e.kind), e.t, date_at(series, e.t), e.y);
      }
    } else if (trend_cmd->parsed()) {
      const auto r = trend_report(data.series(param));
      out << fmt::format("{:.10g} {:.10g} {:.10g} {}\n", r.slope, r.total_change, r.span_days,
                         to_string(r.direction));
    } else if (corr_cmd->parsed()) {
      const auto c = pearson_pairs(data.series(param_a), data.series(param_b));
      out << fmt::format("{:.10g} {}\n", c.r, c.n_pairs);
    } else if (harm_cmd->parsed()) {
      const auto series = data.series(param);
      const auto curve = dense_grid(fit_natural_spline(series), 1000);
      const auto map = IndexMap::over_span(series.front_t(), series.back_t());
      const auto fitted = fit_harmonic_scale(curve, harmonic_shape, map);
      const auto stats = compare_to_harmonic(curve, fitted, map);
      out << fmt::format("{:.10g} {:.10g} {:.6f}\n", stats.rmse, stats.max_abs_dev, stats.argmax_t);
    } else if (plot_cmd->parsed()) {
      const auto series = data.series(param);
      PlotSpec spec;
      spec.title = fmt::format("{} {} ({})", data.station, param, interp.method);
      spec.x_label = fmt::format("days since {}", format_date(series.epoch()));
      spec.y_label = fmt::format("{} [{}]", param, parameter_unit(param));
      const auto curve = interp.curve(series);
      spec.layers.push_back({curve, "blue", interp.method});
      if (with_harmonic) {
        const auto map = IndexMap::over_span(series.front_t(), series.back_t());
        const auto fitted = fit_harmonic_scale(curve, harmonic_shape, map);
        spec.layers.push_back({sample_harmonic(fitted, map, series.front_t(), series.back_t(), interp.resolution),
                               "red", "harmonic"});
      }
      KnotMarkers markers;
      for (const auto& k : series.knots()) markers.points.push_back({k.t, k.y});
      spec.layers.push_back({markers, "black", "data"});
      write_file(out_path, render_svg(spec));
      out << fmt::format("{} layers -> {}\n", spec.layers.size(), out_path);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace wq::cli
