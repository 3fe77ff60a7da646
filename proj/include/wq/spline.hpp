#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "wq/core_model.hpp"

namespace wq {

/// f(t) = a + b (t - t_i) + c (t - t_i)^2 + d (t - t_i)^3 on [t_i, t_{i+1}].
struct SplineSegment {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

enum class Boundary { Natural };

/// Piecewise cubic over the knot intervals of a series. Immutable once fitted.
class SplineModel {
 public:
  SplineModel(std::vector<Knot> knots, std::vector<SplineSegment> segments, double lambda,
              Boundary boundary = Boundary::Natural);

  const std::vector<Knot>& knots() const noexcept { return knots_; }
  const std::vector<SplineSegment>& segments() const noexcept { return segments_; }
  double lambda() const noexcept { return lambda_; }
  Boundary boundary() const noexcept { return boundary_; }

  double front_t() const { return knots_.front().t; }
  double back_t() const { return knots_.back().t; }

  /// Value of the curve at knot i; equals y_i when lambda == 0.
  double fitted_value(std::size_t i) const;

  /// Index of the segment owning t (clamped to the first/last segment).
  std::size_t segment_index(double t) const;

 private:
  std::vector<Knot> knots_;
  std::vector<SplineSegment> segments_;
  double lambda_;
  Boundary boundary_;
};

/// Interpolating cubic spline with f'' = 0 at both ends. Assembled in moment form:
/// the interior second derivatives solve a tridiagonal system. Throws TooFewKnots for n < 2.
SplineModel fit_natural_spline(const TimeSeries& series);

/// Natural cubic spline minimizing sum (y_i - f(t_i))^2 + lambda * integral f''^2.
/// lambda == 0 delegates to fit_natural_spline. Throws NegativeLambda and TooFewKnots.
SplineModel fit_smoothing_spline(const TimeSeries& series, double lambda);

/// Evaluates the owning segment inside [t_1, t_n]; extrapolates linearly with the
/// boundary slope outside.
double eval_spline(const SplineModel& model, double t);

/// First or second derivative. Outside the knot span the curve is linear, so the
/// second derivative there is 0. Throws UnsupportedOrder for other orders.
double eval_spline_derivative(const SplineModel& model, double t, int order);

/// Barycentric Lagrange interpolant. weights[i] = 1 / prod_{j != i} (t_i - t_j).
class LagrangeModel {
 public:
  LagrangeModel(std::vector<Knot> knots, std::vector<double> weights);

  const std::vector<Knot>& knots() const noexcept { return knots_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  double front_t() const { return knots_.front().t; }
  double back_t() const { return knots_.back().t; }

 private:
  std::vector<Knot> knots_;
  std::vector<double> weights_;
};

/// Throws DuplicateKnots if two knots share t, TooFewKnots if empty, and
/// InvalidSpec if a weight overflows or underflows double precision.
LagrangeModel fit_lagrange(std::span<const Knot> knots);
LagrangeModel fit_lagrange(const TimeSeries& series);

/// Second (true) barycentric form; returns y_i exactly within 1e-12 of knot t_i.
double eval_lagrange(const LagrangeModel& model, double t);

enum class CurveSource { Spline, Lagrange, Smoothing, Harmonic, Regression };

std::string_view to_string(CurveSource source);

struct CurvePoint {
  double t;
  double y;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// A curve evaluated on a uniform, strictly increasing grid.
struct CurveSamples {
  std::vector<CurvePoint> points;
  CurveSource source = CurveSource::Spline;
};

/// Uniform grid of `resolution` points from t_first to t_last inclusive.
/// Throws ResolutionTooSmall for resolution < 2 and DegenerateSpan when t_last <= t_first.
std::vector<double> uniform_grid(double t_first, double t_last, std::size_t resolution);

/// Dense evaluation of a model over its knot span ("fine norm").
CurveSamples dense_grid(const SplineModel& model, std::size_t resolution);
CurveSamples dense_grid(const LagrangeModel& model, std::size_t resolution);

enum class ExtremumKind { Max, Min };

std::string_view to_string(ExtremumKind kind);

struct Extremum {
  double t;
  double y;
  ExtremumKind kind;
};

inline constexpr double kFlatCurvatureTolerance = 1e-10;

/// Interior local extrema: roots of f' inside each half-open segment [t_i, t_{i+1}),
/// excluding t_1, classified by the sign of f''. Roots where |f''| <= 1e-10 are
/// flat inflections and are not reported. Sorted by t.
std::vector<Extremum> spline_extrema(const SplineModel& model);

}  // namespace wq
