#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wq::numerics {

/// Dense row-major matrix, just enough for least-squares design matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double> column(std::size_t c) const;

  /// A * x.
  std::vector<double> multiply(std::span<const double> x) const;

  /// A^T * v.
  std::vector<double> multiply_transposed(std::span<const double> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct TridiagonalSystem {
  std::vector<double> lower;  // n-1 entries, lower[i] couples row i+1 to x[i]
  std::vector<double> diag;   // n entries
  std::vector<double> upper;  // n-1 entries, upper[i] couples row i to x[i+1]
  std::vector<double> rhs;    // n entries

  std::size_t size() const noexcept { return diag.size(); }

  /// A * x, used for residual checks.
  std::vector<double> multiply(std::span<const double> x) const;
};

inline constexpr double kPivotTolerance = 1e-14;
inline constexpr double kRankTolerance = 1e-12;

/// Thomas algorithm: forward elimination then back substitution, O(n), no pivoting.
/// Throws ZeroPivot if a pivot falls below kPivotTolerance in magnitude and
/// DimensionMismatch on inconsistent sizes.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

/// Symmetric positive definite band matrix stored by diagonals:
/// bands[0] is the main diagonal, bands[k][i] = A(i, i+k).
struct SymmetricBandedSystem {
  std::vector<std::vector<double>> bands;
  std::vector<double> rhs;

  std::size_t size() const noexcept { return bands.empty() ? 0 : bands[0].size(); }
  std::size_t bandwidth() const noexcept { return bands.empty() ? 0 : bands.size() - 1; }

  std::vector<double> multiply(std::span<const double> x) const;
};

/// Banded LDL^T factorization and solve. Throws ZeroPivot when a pivot of D
/// is not positive beyond kPivotTolerance relative to the diagonal entry.
std::vector<double> solve_symmetric_banded(const SymmetricBandedSystem& system);

struct LeastSquaresProblem {
  Matrix design;                // m x k, rows = observations, columns = basis functions
  std::vector<double> targets;  // m entries
};

/// Minimizes |design * x - targets|_2 by modified Gram-Schmidt QR with one
/// reorthogonalization pass per column. Throws RankDeficient when the
/// orthogonalized column norm drops below kRankTolerance times its original
/// norm, and DimensionMismatch when m < k, k == 0, or entries are not finite.
std::vector<double> solve_least_squares(const LeastSquaresProblem& problem);

}  // namespace wq::numerics
