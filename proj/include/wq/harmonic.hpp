#pragma once

#include <numbers>

#include "wq/spline.hpp"

namespace wq {

/// offset + amplitude * spow(sin(w k) + cos(w k), exponent).
struct HarmonicSpec {
  double angular_coeff = 8.0 * std::numbers::pi / 192.0;
  double exponent = 4.0 / 3.0;
  double amplitude = 1.0;
  double offset = 0.0;
};

/// Throws InvalidSpec unless angular_coeff > 0 and exponent > 0.
void validate(const HarmonicSpec& spec);

/// Real-valued fractional power of a possibly negative base: sign(u) |u|^p.
double signed_pow(double u, double p);

double harmonic_reference(double k, const HarmonicSpec& spec);

/// k = scale * t + shift.
struct IndexMap {
  double scale = 1.0;
  double shift = 0.0;

  double operator()(double t) const { return scale * t + shift; }

  /// Maps [t_first, t_last] onto [0, window] (default window 192).
  static IndexMap over_span(double t_first, double t_last, double window = 192.0);
};

struct ResidualStats {
  double rmse = 0.0;
  double max_abs_dev = 0.0;
  double argmax_t = 0.0;
};

/// Residuals curve - harmonic on the curve's grid. Throws EmptySeries for an empty curve.
ResidualStats compare_to_harmonic(const CurveSamples& curve, const HarmonicSpec& spec,
                                  const IndexMap& index_map);

/// Least-squares amplitude and offset for the fixed sin + cos shape; the
/// returned spec keeps the frequency and exponent of `shape`.
HarmonicSpec fit_harmonic_scale(const CurveSamples& curve, const HarmonicSpec& shape,
                                const IndexMap& index_map);

CurveSamples sample_harmonic(const HarmonicSpec& spec, const IndexMap& index_map,
                             double t_first, double t_last, std::size_t resolution);

}  // namespace wq
