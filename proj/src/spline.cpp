#include "wq/spline.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "wq/error.hpp"
#include "wq/numerics.hpp"

namespace wq {
namespace {

std::vector<double> spacings(std::span<const Knot> knots) {
  std::vector<double> h(knots.size() - 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) h[i] = knots[i + 1].t - knots[i].t;
  return h;
}

// Segment coefficients from knot values g and knot second derivatives m.
std::vector<SplineSegment> segments_from_moments(std::span<const Knot> knots,
                                                 std::span<const double> g,
                                                 std::span<const double> m) {
  const auto h = spacings(knots);
  std::vector<SplineSegment> segs(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    segs[i].a = g[i];
    segs[i].b = (g[i + 1] - g[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
    segs[i].c = m[i] / 2.0;
    segs[i].d = (m[i + 1] - m[i]) / (6.0 * h[i]);
  }
  return segs;
}

double cubic(const SplineSegment& s, double x) { return s.a + x * (s.b + x * (s.c + x * s.d)); }
double cubic_d1(const SplineSegment& s, double x) { return s.b + x * (2.0 * s.c + x * 3.0 * s.d); }
double cubic_d2(const SplineSegment& s, double x) { return 2.0 * s.c + 6.0 * s.d * x; }

}  // namespace

SplineModel::SplineModel(std::vector<Knot> knots, std::vector<SplineSegment> segments,
                         double lambda, Boundary boundary)
    : knots_(std::move(knots)), segments_(std::move(segments)), lambda_(lambda), boundary_(boundary) {
  if (knots_.size() < 2 || segments_.size() + 1 != knots_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("{} knots need {} segments, got {}", knots_.size(),
                            knots_.empty() ? 0 : knots_.size() - 1, segments_.size()));
  }
}

double SplineModel::fitted_value(std::size_t i) const {
  if (i + 1 < knots_.size()) return segments_[i].a;
  const auto& last = segments_.back();
  return cubic(last, knots_.back().t - knots_[knots_.size() - 2].t);
}

std::size_t SplineModel::segment_index(double t) const {
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                   [](double v, const Knot& k) { return v < k.t; });
  const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - knots_.begin() - 1, 0));
  return std::min(idx, segments_.size() - 1);
}

SplineModel fit_natural_spline(const TimeSeries& series) {
  const auto& knots = series.knots();
  const std::size_t n = knots.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewKnots, fmt::format("natural spline needs 2 knots, got {}", n));
  }
  const auto h = spacings(knots);
  std::vector<double> m(n, 0.0);
  if (n > 2) {
    numerics::TridiagonalSystem sys;
    const std::size_t k = n - 2;
    sys.diag.resize(k);
    sys.rhs.resize(k);
    sys.lower.resize(k - 1);
    sys.upper.resize(k - 1);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t i = j + 1;
      sys.diag[j] = 2.0 * (h[i - 1] + h[i]);
      sys.rhs[j] = 6.0 * ((knots[i + 1].y - knots[i].y) / h[i] - (knots[i].y - knots[i - 1].y) / h[i - 1]);
      if (j + 1 < k) {
        sys.upper[j] = h[i];
        sys.lower[j] = h[i];
      }
    }
    const auto interior = numerics::solve_tridiagonal(sys);
    std::copy(interior.begin(), interior.end(), m.begin() + 1);
  }
  const auto g = series.values();
  return SplineModel(knots, segments_from_moments(knots, g, m), 0.0);
}

SplineModel fit_smoothing_spline(const TimeSeries& series, double lambda) {
  if (!(lambda >= 0.0)) {
    throw Error(ErrorCode::NegativeLambda, fmt::format("lambda must be >= 0, got {}", lambda));
  }
  if (lambda == 0.0) return fit_natural_spline(series);

  const auto& knots = series.knots();
  const std::size_t n = knots.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewKnots, fmt::format("smoothing spline needs 3 knots, got {}", n));
  }
  const auto h = spacings(knots);
  const std::size_t k = n - 2;

  // Q is n x (n-2) with three nonzeros per column j: rows j, j+1, j+2.
  auto q = [&](std::size_t row, std::size_t col) -> double {
    if (row == col) return 1.0 / h[col];
    if (row == col + 1) return -1.0 / h[col] - 1.0 / h[col + 1];
    if (row == col + 2) return 1.0 / h[col + 1];
    return 0.0;
  };

  // (R + lambda Q^T Q) gamma = Q^T y, pentadiagonal and positive definite.
  numerics::SymmetricBandedSystem sys;
  sys.bands.assign(3, std::vector<double>(k, 0.0));
  sys.rhs.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    double qtq0 = 0.0;
    for (std::size_t r = j; r <= j + 2; ++r) qtq0 += q(r, j) * q(r, j);
    sys.bands[0][j] = (h[j] + h[j + 1]) / 3.0 + lambda * qtq0;
    if (j + 1 < k) {
      const double qtq1 = q(j + 1, j) * q(j + 1, j + 1) + q(j + 2, j) * q(j + 2, j + 1);
      sys.bands[1][j] = h[j + 1] / 6.0 + lambda * qtq1;
    }
    if (j + 2 < k) sys.bands[2][j] = lambda * q(j + 2, j) * q(j + 2, j + 2);
    sys.rhs[j] = (knots[j + 2].y - knots[j + 1].y) / h[j + 1] - (knots[j + 1].y - knots[j].y) / h[j];
  }
  const auto gamma = numerics::solve_symmetric_banded(sys);

  std::vector<double> g(n);
  for (std::size_t r = 0; r < n; ++r) {
    double qg = 0.0;
    const std::size_t lo = r >= 2 ? r - 2 : 0;
    for (std::size_t c = lo; c <= std::min(r, k - 1); ++c) qg += q(r, c) * gamma[c];
    g[r] = knots[r].y - lambda * qg;
  }
  std::vector<double> m(n, 0.0);
  std::copy(gamma.begin(), gamma.end(), m.begin() + 1);
  return SplineModel(knots, segments_from_moments(knots, g, m), lambda);
}

double eval_spline(const SplineModel& model, double t) {
  const auto& segs = model.segments();
  if (t < model.front_t()) {
    return segs.front().a + segs.front().b * (t - model.front_t());
  }
  const auto& knots = model.knots();
  if (t > model.back_t()) {
    const auto& last = segs.back();
    const double h = model.back_t() - knots[knots.size() - 2].t;
    return cubic(last, h) + cubic_d1(last, h) * (t - model.back_t());
  }
  const std::size_t i = model.segment_index(t);
  return cubic(segs[i], t - knots[i].t);
}

double eval_spline_derivative(const SplineModel& model, double t, int order) {
  if (order != 1 && order != 2) {
    throw Error(ErrorCode::UnsupportedOrder, fmt::format("derivative order {} not in {{1, 2}}", order));
  }
  const auto& segs = model.segments();
  const auto& knots = model.knots();
  if (t < model.front_t()) return order == 1 ? segs.front().b : 0.0;
  if (t > model.back_t()) {
    if (order == 2) return 0.0;
    return cubic_d1(segs.back(), model.back_t() - knots[knots.size() - 2].t);
  }
  const std::size_t i = model.segment_index(t);
  const double x = t - knots[i].t;
  return order == 1 ? cubic_d1(segs[i], x) : cubic_d2(segs[i], x);
}

LagrangeModel::LagrangeModel(std::vector<Knot> knots, std::vector<double> weights)
    : knots_(std::move(knots)), weights_(std::move(weights)) {
  if (knots_.empty() || knots_.size() != weights_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one weight per knot required");
  }
}

LagrangeModel fit_lagrange(std::span<const Knot> knots) {
  if (knots.empty()) throw Error(ErrorCode::TooFewKnots, "Lagrange interpolation needs a knot");
  const std::size_t n = knots.size();
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double diff = knots[i].t - knots[j].t;
      if (diff == 0.0) {
        throw Error(ErrorCode::DuplicateKnots, fmt::format("knots {} and {} share t = {}", i, j, knots[i].t));
      }
      prod *= diff;
    }
    w[i] = 1.0 / prod;
    if (!std::isfinite(w[i]) || w[i] == 0.0) {
      throw Error(ErrorCode::InvalidSpec, fmt::format("barycentric weight {} is not representable", i));
    }
  }
  return LagrangeModel(std::vector<Knot>(knots.begin(), knots.end()), std::move(w));
}

LagrangeModel fit_lagrange(const TimeSeries& series) { return fit_lagrange(series.knots()); }

double eval_lagrange(const LagrangeModel& model, double t) {
  const auto& knots = model.knots();
  const auto& w = model.weights();
  for (const auto& k : knots) {
    if (std::abs(t - k.t) <= 1e-12) return k.y;
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double term = w[i] / (t - knots[i].t);
    num += term * knots[i].y;
    den += term;
  }
  return num / den;
}

std::string_view to_string(CurveSource source) {
  switch (source) {
    case CurveSource::Spline: return "spline";
    case CurveSource::Lagrange: return "lagrange";
    case CurveSource::Smoothing: return "smoothing";
    case CurveSource::Harmonic: return "harmonic";
    case CurveSource::Regression: return "regression";
  }
  return "unknown";
}

std::vector<double> uniform_grid(double t_first, double t_last, std::size_t resolution) {
  if (resolution < 2) {
    throw Error(ErrorCode::ResolutionTooSmall, fmt::format("resolution must be >= 2, got {}", resolution));
  }
  if (!(t_last > t_first)) {
    throw Error(ErrorCode::DegenerateSpan, fmt::format("empty span [{}, {}]", t_first, t_last));
  }
  const double span = t_last - t_first;
  const auto steps = static_cast<double>(resolution - 1);
  std::vector<double> grid(resolution);
  for (std::size_t k = 0; k + 1 < resolution; ++k) {
    grid[k] = t_first + span * static_cast<double>(k) / steps;
  }
  grid.back() = t_last;
  return grid;
}

namespace {

template <typename Eval>
CurveSamples sample(double t0, double t1, std::size_t resolution, CurveSource source, Eval eval) {
  const auto grid = uniform_grid(t0, t1, resolution);
  CurveSamples out{{}, source};
  out.points.reserve(grid.size());
  for (double t : grid) out.points.push_back({t, eval(t)});
  return out;
}

}  // namespace

CurveSamples dense_grid(const SplineModel& model, std::size_t resolution) {
  const auto source = model.lambda() > 0.0 ? CurveSource::Smoothing : CurveSource::Spline;
  return sample(model.front_t(), model.back_t(), resolution, source,
                [&](double t) { return eval_spline(model, t); });
}

CurveSamples dense_grid(const LagrangeModel& model, std::size_t resolution) {
  return sample(model.front_t(), model.back_t(), resolution, CurveSource::Lagrange,
                [&](double t) { return eval_lagrange(model, t); });
}

std::string_view to_string(ExtremumKind kind) {
  return kind == ExtremumKind::Max ? "max" : "min";
}

std::vector<Extremum> spline_extrema(const SplineModel& model) {
  const auto& knots = model.knots();
  const auto& segs = model.segments();
  std::vector<Extremum> out;

  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    // f'(x) = qa x^2 + qb x + qc on x in [0, h).
    const double qa = 3.0 * s.d;
    const double qb = 2.0 * s.c;
    const double qc = s.b;
    std::vector<double> roots;
    if (qa == 0.0) {
      if (qb != 0.0) roots.push_back(-qc / qb);
    } else {
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0.0) {
        const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
        roots.push_back(q / qa);
        if (q != 0.0) roots.push_back(qc / q);
      }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    for (double x : roots) {
      if (!(x >= 0.0)) continue;
      if (i == 0 && x == 0.0) continue;
      const double t = knots[i].t + x;
      if (!(t < knots[i + 1].t)) continue;
      const double curvature = cubic_d2(s, x);
      if (std::abs(curvature) <= kFlatCurvatureTolerance) continue;
      out.push_back({t, eval_spline(model, t), curvature < 0.0 ? ExtremumKind::Max : ExtremumKind::Min});
    }
  }

  std::sort(out.begin(), out.end(), [](const Extremum& a, const Extremum& b) { return a.t < b.t; });
  // A root sitting on an interior knot can be found from both neighbouring segments.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Extremum& a, const Extremum& b) {
                          return a.kind == b.kind && std::abs(a.t - b.t) <= 1e-9 * (1.0 + std::abs(a.t));
                        }),
            out.end());
  return out;
}

}  // namespace wq
