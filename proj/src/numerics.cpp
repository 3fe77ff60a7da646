#include "wq/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "wq/error.hpp"

namespace wq::numerics {

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<double> Matrix::multiply(std::span<const double> x) const {
  std::vector<double> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

std::vector<double> Matrix::multiply_transposed(std::span<const double> v) const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[c] += (*this)(r, c) * v[r];
  }
  return out;
}

std::vector<double> TridiagonalSystem::multiply(std::span<const double> x) const {
  const std::size_t n = size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += lower[i - 1] * x[i - 1];
    if (i + 1 < n) acc += upper[i] * x[i + 1];
    out[i] = acc;
  }
  return out;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
  const std::size_t n = system.size();
  if (n == 0 || system.rhs.size() != n || system.lower.size() != n - 1 ||
      system.upper.size() != n - 1) {
    throw Error(ErrorCode::DimensionMismatch, "inconsistent tridiagonal dimensions");
  }

  std::vector<double> c_prime(n, 0.0);
  std::vector<double> d_prime(n, 0.0);

  double pivot = system.diag[0];
  if (std::abs(pivot) < kPivotTolerance) {
    throw Error(ErrorCode::ZeroPivot, "pivot 0 vanished");
  }
  if (n > 1) c_prime[0] = system.upper[0] / pivot;
  d_prime[0] = system.rhs[0] / pivot;

  for (std::size_t i = 1; i < n; ++i) {
    pivot = system.diag[i] - system.lower[i - 1] * c_prime[i - 1];
    if (std::abs(pivot) < kPivotTolerance) {
      throw Error(ErrorCode::ZeroPivot, fmt::format("pivot {} vanished", i));
    }
    if (i + 1 < n) c_prime[i] = system.upper[i] / pivot;
    d_prime[i] = (system.rhs[i] - system.lower[i - 1] * d_prime[i - 1]) / pivot;
  }

  std::vector<double> x(n);
  x[n - 1] = d_prime[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] = d_prime[i] - c_prime[i] * x[i + 1];
  }
  return x;
}

std::vector<double> SymmetricBandedSystem::multiply(std::span<const double> x) const {
  const std::size_t n = size();
  const std::size_t p = bandwidth();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] += bands[0][i] * x[i];
    for (std::size_t k = 1; k <= p && i + k < n; ++k) {
      out[i] += bands[k][i] * x[i + k];
      out[i + k] += bands[k][i] * x[i];
    }
  }
  return out;
}

std::vector<double> solve_symmetric_banded(const SymmetricBandedSystem& system) {
  const std::size_t n = system.size();
  const std::size_t p = system.bandwidth();
  if (n == 0 || system.rhs.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "inconsistent banded dimensions");
  }
  for (std::size_t k = 0; k <= p; ++k) {
    if (system.bands[k].size() < n - std::min(k, n)) {
      throw Error(ErrorCode::DimensionMismatch, fmt::format("band {} too short", k));
    }
  }

  // L stored by sub-diagonals: l[k][j] = L(j+k, j).
  std::vector<std::vector<double>> l(p + 1, std::vector<double>(n, 0.0));
  std::vector<double> d(n, 0.0);
  auto a = [&](std::size_t i, std::size_t j) {  // i >= j, i - j <= p
    return system.bands[i - j][j];
  };

  for (std::size_t j = 0; j < n; ++j) {
    double dj = a(j, j);
    const std::size_t lo = j > p ? j - p : 0;
    for (std::size_t s = lo; s < j; ++s) dj -= l[j - s][s] * l[j - s][s] * d[s];
    if (!(dj > kPivotTolerance * std::max(1.0, std::abs(a(j, j))))) {
      throw Error(ErrorCode::ZeroPivot, fmt::format("banded pivot {} not positive", j));
    }
    d[j] = dj;
    for (std::size_t i = j + 1; i <= std::min(n - 1, j + p); ++i) {
      double v = a(i, j);
      const std::size_t lo_i = i > p ? i - p : 0;
      for (std::size_t s = std::max(lo, lo_i); s < j; ++s) v -= l[i - s][s] * l[j - s][s] * d[s];
      l[i - j][j] = v / dj;
    }
  }

  std::vector<double> x = system.rhs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > p ? i - p : 0;
    for (std::size_t s = lo; s < i; ++s) x[i] -= l[i - s][s] * x[s];
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= d[i];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = 1; k <= p && i + k < n; ++k) x[i] -= l[k][i] * x[i + k];
  }
  return x;
}

std::vector<double> solve_least_squares(const LeastSquaresProblem& problem) {
  const auto& a = problem.design;
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  if (k == 0 || m < k || problem.targets.size() != m) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("least squares needs m >= k >= 1 (m={}, k={}, targets={})", m, k,
                            problem.targets.size()));
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (!std::isfinite(problem.targets[r])) {
      throw Error(ErrorCode::DimensionMismatch, "non-finite target");
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (!std::isfinite(a(r, c))) throw Error(ErrorCode::DimensionMismatch, "non-finite design entry");
    }
  }

  // Q stored column-major, R upper triangular.
  std::vector<std::vector<double>> q(k);
  std::vector<std::vector<double>> rmat(k, std::vector<double>(k, 0.0));
  std::vector<double> b = problem.targets;
  std::vector<double> qtb(k, 0.0);

  auto dot = [m](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += u[i] * v[i];
    return s;
  };

  for (std::size_t j = 0; j < k; ++j) {
    std::vector<double> v = a.column(j);
    const double original = std::sqrt(dot(v, v));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        const double proj = dot(q[i], v);
        rmat[i][j] += proj;
        for (std::size_t r = 0; r < m; ++r) v[r] -= proj * q[i][r];
      }
    }
    const double norm = std::sqrt(dot(v, v));
    if (!(original > 0.0) || norm < kRankTolerance * original) {
      throw Error(ErrorCode::RankDeficient, fmt::format("column {} is numerically dependent", j));
    }
    rmat[j][j] = norm;
    for (double& x : v) x /= norm;
    q[j] = std::move(v);

    // Project the running residual of the targets the same way (MGS on [A b]).
    const double proj = dot(q[j], b);
    qtb[j] = proj;
    for (std::size_t r = 0; r < m; ++r) b[r] -= proj * q[j][r];
  }

  std::vector<double> x(k);
  for (std::size_t i = k; i-- > 0;) {
    double s = qtb[i];
    for (std::size_t c = i + 1; c < k; ++c) s -= rmat[i][c] * x[c];
    x[i] = s / rmat[i][i];
  }
  return x;
}

}  // namespace wq::numerics
