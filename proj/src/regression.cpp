#include "wq/regression.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "wq/error.hpp"
#include "wq/numerics.hpp"

namespace wq {

PolyModel fit_polynomial(const TimeSeries& series, std::size_t degree) {
  if (degree > kMaxPolynomialDegree) {
    throw Error(ErrorCode::DegreeTooHigh,
                fmt::format("degree {} exceeds {}", degree, kMaxPolynomialDegree));
  }
  const std::size_t n = series.size();
  if (n < degree + 1) {
    throw Error(ErrorCode::InsufficientData,
                fmt::format("degree {} needs {} knots, got {}", degree, degree + 1, n));
  }

  PolyModel model;
  model.degree = degree;
  model.n_obs = n;
  model.t_mid = 0.5 * (series.front_t() + series.back_t());
  const double half_span = 0.5 * series.span();
  model.t_scale = half_span > 0.0 ? half_span : 1.0;

  const auto& knots = series.knots();
  numerics::LeastSquaresProblem problem{numerics::Matrix(n, degree + 1), series.values()};
  for (std::size_t r = 0; r < n; ++r) {
    const double u = (knots[r].t - model.t_mid) / model.t_scale;
    double p = 1.0;
    for (std::size_t c = 0; c <= degree; ++c) {
      problem.design(r, c) = p;
      p *= u;
    }
  }
  model.coefficients = numerics::solve_least_squares(problem);

  double sse = 0.0;
  for (const auto& k : knots) {
    const double e = k.y - eval_poly(model, k.t);
    sse += e * e;
  }
  model.rmse = std::sqrt(sse / static_cast<double>(n));
  return model;
}

double eval_poly(const PolyModel& model, double t) {
  const double u = (t - model.t_mid) / model.t_scale;
  double acc = 0.0;
  for (auto it = model.coefficients.rbegin(); it != model.coefficients.rend(); ++it) {
    acc = acc * u + *it;
  }
  return acc;
}

CurveSamples dense_grid(const PolyModel& model, double t_first, double t_last, std::size_t resolution) {
  CurveSamples out{{}, CurveSource::Regression};
  for (double t : uniform_grid(t_first, t_last, resolution)) out.points.push_back({t, eval_poly(model, t)});
  return out;
}

std::string_view to_string(TrendDirection direction) {
  switch (direction) {
    case TrendDirection::Down: return "down";
    case TrendDirection::Up: return "up";
    case TrendDirection::Flat: return "flat";
  }
  return "flat";
}

TrendReport trend_report(const TimeSeries& series, double flat_threshold) {
  if (series.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "a trend needs at least 2 knots");
  }
  const auto model = fit_polynomial(series, 1);
  TrendReport report;
  report.slope = model.coefficients[1] / model.t_scale;
  report.span_days = series.span();
  report.total_change = report.slope * report.span_days;
  if (std::abs(report.total_change) < flat_threshold) {
    report.direction = TrendDirection::Flat;
  } else {
    report.direction = report.total_change < 0.0 ? TrendDirection::Down : TrendDirection::Up;
  }
  return report;
}

Correlation pearson_pairs(const TimeSeries& a, const TimeSeries& b) {
  if (a.station() != b.station()) {
    throw Error(ErrorCode::StationMismatch,
                fmt::format("cannot correlate '{}' with '{}'", a.station(), b.station()));
  }
  std::vector<double> xs;
  std::vector<double> ys;
  const auto& ka = a.knots();
  const auto& kb = b.knots();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ka.size() && j < kb.size()) {
    const double da = a.absolute_day(ka[i].t);
    const double db = b.absolute_day(kb[j].t);
    if (da < db) {
      ++i;
    } else if (db < da) {
      ++j;
    } else {
      xs.push_back(ka[i++].y);
      ys.push_back(kb[j++].y);
    }
  }
  const std::size_t n = xs.size();
  if (n < 3) {
    throw Error(ErrorCode::InsufficientPairs, fmt::format("{} matched pairs, need 3", n));
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = xs[k] - mx;
    const double dy = ys[k] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "one side of the correlation is constant");
  }
  const double r = sxy / std::sqrt(sxx * syy);
  return {std::clamp(r, -1.0, 1.0), n};
}

double rmse_between(const CurveSamples& a, const CurveSamples& b) {
  if (a.points.size() != b.points.size() || a.points.empty()) {
    throw Error(ErrorCode::GridMismatch,
                fmt::format("grids have {} and {} points", a.points.size(), b.points.size()));
  }
  double sse = 0.0;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].t != b.points[i].t) {
      throw Error(ErrorCode::GridMismatch, fmt::format("grids differ at point {}", i));
    }
    const double d = a.points[i].y - b.points[i].y;
    sse += d * d;
  }
  return std::sqrt(sse / static_cast<double>(a.points.size()));
}

}  // namespace wq
