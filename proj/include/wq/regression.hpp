#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wq/core_model.hpp"
#include "wq/spline.hpp"

namespace wq {

inline constexpr std::size_t kMaxPolynomialDegree = 10;
inline constexpr double kDefaultFlatThreshold = 0.01;

/// Least-squares polynomial in the normalized variable u = (t - t_mid) / t_scale.
struct PolyModel {
  std::size_t degree = 0;
  std::vector<double> coefficients;  // c_0 .. c_degree
  double t_mid = 0.0;
  double t_scale = 1.0;
  double rmse = 0.0;
  std::size_t n_obs = 0;
};

/// Fits over the centered and scaled axis (t_mid = span midpoint, t_scale = half-span,
/// or 1 for a zero span). Throws DegreeTooHigh (> 10) and InsufficientData (n <= degree).
PolyModel fit_polynomial(const TimeSeries& series, std::size_t degree);

/// Horner evaluation after mapping t to u.
double eval_poly(const PolyModel& model, double t);

CurveSamples dense_grid(const PolyModel& model, double t_first, double t_last, std::size_t resolution);

enum class TrendDirection { Down, Up, Flat };

std::string_view to_string(TrendDirection direction);

struct TrendReport {
  double slope = 0.0;         // y-units per day
  double total_change = 0.0;  // slope * span_days
  double span_days = 0.0;
  TrendDirection direction = TrendDirection::Flat;
};

/// Degree-1 trend over [t_1, t_n]. Throws InsufficientData for n < 2.
TrendReport trend_report(const TimeSeries& series, double flat_threshold = kDefaultFlatThreshold);

struct Correlation {
  double r = 0.0;
  std::size_t n_pairs = 0;
};

/// Pearson product-moment correlation over knots whose calendar day matches exactly.
/// Throws StationMismatch, InsufficientPairs (< 3 matched pairs) and ZeroVariance.
Correlation pearson_pairs(const TimeSeries& a, const TimeSeries& b);

inline double pearson(const TimeSeries& a, const TimeSeries& b) { return pearson_pairs(a, b).r; }

/// Root-mean-square pointwise difference. Throws GridMismatch unless both
/// curves share an identical grid.
double rmse_between(const CurveSamples& a, const CurveSamples& b);

}  // namespace wq
