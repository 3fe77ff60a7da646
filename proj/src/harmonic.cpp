#include "wq/harmonic.hpp"

#include <cmath>

#include <fmt/format.h>

#include "wq/error.hpp"
#include "wq/numerics.hpp"

namespace wq {

void validate(const HarmonicSpec& spec) {
  if (!(spec.angular_coeff > 0.0) || !(spec.exponent > 0.0) || !std::isfinite(spec.angular_coeff) ||
      !std::isfinite(spec.exponent)) {
    throw Error(ErrorCode::InvalidSpec,
                fmt::format("angular_coeff ({}) and exponent ({}) must be positive", spec.angular_coeff,
                            spec.exponent));
  }
}

double signed_pow(double u, double p) {
  if (u == 0.0) return 0.0;
  const double mag = std::pow(std::abs(u), p);
  return u < 0.0 ? -mag : mag;
}

double harmonic_reference(double k, const HarmonicSpec& spec) {
  validate(spec);
  const double arg = spec.angular_coeff * k;
  return spec.offset + spec.amplitude * signed_pow(std::sin(arg) + std::cos(arg), spec.exponent);
}

IndexMap IndexMap::over_span(double t_first, double t_last, double window) {
  const double span = t_last - t_first;
  if (!(span > 0.0)) {
    throw Error(ErrorCode::DegenerateSpan, fmt::format("empty span [{}, {}]", t_first, t_last));
  }
  const double scale = window / span;
  return {scale, -t_first * scale};
}

ResidualStats compare_to_harmonic(const CurveSamples& curve, const HarmonicSpec& spec,
                                  const IndexMap& index_map) {
  validate(spec);
  if (curve.points.empty()) throw Error(ErrorCode::EmptySeries, "cannot compare an empty curve");
  ResidualStats stats;
  stats.argmax_t = curve.points.front().t;
  double sse = 0.0;
  for (const auto& p : curve.points) {
    const double dev = p.y - harmonic_reference(index_map(p.t), spec);
    sse += dev * dev;
    if (std::abs(dev) > stats.max_abs_dev) {
      stats.max_abs_dev = std::abs(dev);
      stats.argmax_t = p.t;
    }
  }
  stats.rmse = std::sqrt(sse / static_cast<double>(curve.points.size()));
  return stats;
}

HarmonicSpec fit_harmonic_scale(const CurveSamples& curve, const HarmonicSpec& shape,
                                const IndexMap& index_map) {
  validate(shape);
  const std::size_t m = curve.points.size();
  HarmonicSpec unit = shape;
  unit.amplitude = 1.0;
  unit.offset = 0.0;
  numerics::LeastSquaresProblem problem{numerics::Matrix(m, 2), std::vector<double>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    problem.design(i, 0) = harmonic_reference(index_map(curve.points[i].t), unit);
    problem.design(i, 1) = 1.0;
    problem.targets[i] = curve.points[i].y;
  }
  const auto coeffs = numerics::solve_least_squares(problem);
  unit.amplitude = coeffs[0];
  unit.offset = coeffs[1];
  return unit;
}

CurveSamples sample_harmonic(const HarmonicSpec& spec, const IndexMap& index_map, double t_first,
                             double t_last, std::size_t resolution) {
  validate(spec);
  CurveSamples out{{}, CurveSource::Harmonic};
  for (double t : uniform_grid(t_first, t_last, resolution)) {
    out.points.push_back({t, harmonic_reference(index_map(t), spec)});
  }
  return out;
}

}  // namespace wq
