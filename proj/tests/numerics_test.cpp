#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"
#include "wq/numerics.hpp"

using namespace wq;
using namespace wq::numerics;
using wq::test::check_error;

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

TridiagonalSystem random_dominant(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  std::uniform_real_distribution<double> extra(0.5, 3.0);
  TridiagonalSystem s;
  s.lower.resize(n - 1);
  s.upper.resize(n - 1);
  s.diag.resize(n);
  s.rhs.resize(n);
  for (auto& x : s.lower) x = off(rng);
  for (auto& x : s.upper) x = off(rng);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    if (i > 0) row += std::abs(s.lower[i - 1]);
    if (i + 1 < n) row += std::abs(s.upper[i]);
    s.diag[i] = (off(rng) < 0 ? -1.0 : 1.0) * (row + extra(rng));
    s.rhs[i] = 10.0 * off(rng);
  }
  return s;
}

oracle::DenseMatrix to_dense(const TridiagonalSystem& s) {
  const std::size_t n = s.size();
  oracle::DenseMatrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = s.diag[i];
    if (i > 0) a[i][i - 1] = s.lower[i - 1];
    if (i + 1 < n) a[i][i + 1] = s.upper[i];
  }
  return a;
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("tridiagonal identity and 2x2 examples") {
    CHECK(solve_tridiagonal({{0, 0}, {1, 1, 1}, {0, 0}, {2, 5, 7}}) == std::vector<double>{2, 5, 7});
    const auto x = solve_tridiagonal({{1}, {2, 2}, {1}, {3, 3}});
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(solve_tridiagonal({{}, {4}, {}, {2}}) == std::vector<double>{0.5});
  }

  TEST_CASE("tridiagonal errors") {
    check_error(ErrorCode::ZeroPivot, [] { solve_tridiagonal({{1}, {0, 1}, {1}, {1, 1}}); });
    check_error(ErrorCode::ZeroPivot, [] { solve_tridiagonal({{1}, {1, 1}, {1}, {1, 1}}); });
    check_error(ErrorCode::DimensionMismatch, [] { solve_tridiagonal({{1}, {1, 1}, {}, {1, 1}}); });
    check_error(ErrorCode::DimensionMismatch, [] { solve_tridiagonal({}); });
  }

  TEST_CASE("tridiagonal matches dense elimination on dominant systems, n = 2..100") {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 2; n <= 100; ++n) {
      const auto sys = random_dominant(rng, n);
      const auto x = solve_tridiagonal(sys);
      const auto ref = oracle::dense_solve(to_dense(sys), sys.rhs);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x[i] - ref[i]) <= 1e-10);
      auto r = sys.multiply(x);
      for (std::size_t i = 0; i < n; ++i) r[i] -= sys.rhs[i];
      CHECK(max_abs(r) <= 1e-10 * (1.0 + max_abs(sys.rhs)));
      CHECK(solve_tridiagonal(sys) == x);
    }
  }

  TEST_CASE("symmetric banded solve matches dense elimination") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    for (std::size_t n : {1u, 2u, 3u, 7u, 40u}) {
      for (std::size_t p : {0u, 1u, 2u}) {
        SymmetricBandedSystem s;
        s.bands.assign(p + 1, std::vector<double>(n, 0.0));
        for (std::size_t k = 1; k <= p; ++k) {
          for (std::size_t i = 0; i + k < n; ++i) s.bands[k][i] = off(rng);
        }
        for (std::size_t i = 0; i < n; ++i) s.bands[0][i] = 2.0 * static_cast<double>(p) + 1.0 + std::abs(off(rng));
        s.rhs.resize(n);
        for (auto& v : s.rhs) v = off(rng);
        oracle::DenseMatrix a(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
          a[i][i] = s.bands[0][i];
          for (std::size_t k = 1; k <= p && i + k < n; ++k) a[i][i + k] = a[i + k][i] = s.bands[k][i];
        }
        const auto x = solve_symmetric_banded(s);
        const auto ref = oracle::dense_solve(a, s.rhs);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x[i] - ref[i]) <= 1e-12);
      }
    }
  }

  TEST_CASE("symmetric banded rejects indefinite matrices") {
    SymmetricBandedSystem s{{{1.0, 1.0}, {2.0, 0.0}}, {1.0, 1.0}};
    check_error(ErrorCode::ZeroPivot, [&] { solve_symmetric_banded(s); });
  }

  TEST_CASE("least squares exact examples") {
    Matrix eye(3, 3);
    for (std::size_t i = 0; i < 3; ++i) eye(i, i) = 1.0;
    const auto x = solve_least_squares({eye, {4, 5, 6}});
    CHECK(x[0] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(x[2] == doctest::Approx(6.0).epsilon(1e-15));

    Matrix line(3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      line(i, 0) = 1.0;
      line(i, 1) = static_cast<double>(i);
    }
    const auto c = solve_least_squares({line, {1, 3, 5}});
    CHECK(std::abs(c[0] - 1.0) <= 1e-14);
    CHECK(std::abs(c[1] - 2.0) <= 1e-14);
  }

  TEST_CASE("least squares errors") {
    Matrix dependent(4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
      dependent(i, 0) = static_cast<double>(i);
      dependent(i, 1) = 2.0 * static_cast<double>(i);
    }
    check_error(ErrorCode::RankDeficient, [&] { solve_least_squares({dependent, {1, 2, 3, 4}}); });
    check_error(ErrorCode::RankDeficient, [] { solve_least_squares({Matrix(3, 1), {1, 2, 3}}); });
    check_error(ErrorCode::DimensionMismatch, [] { solve_least_squares({Matrix(1, 2), {1}}); });
    check_error(ErrorCode::DimensionMismatch, [] { solve_least_squares({Matrix(3, 1, 1.0), {1, 2}}); });
  }

  TEST_CASE("least squares matches normal equations and leaves orthogonal residuals") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix a(20, 3);
      oracle::DenseMatrix dense(20, std::vector<double>(3));
      std::vector<double> b(20);
      for (std::size_t r = 0; r < 20; ++r) {
        for (std::size_t c = 0; c < 3; ++c) dense[r][c] = a(r, c) = u(rng);
        b[r] = 5.0 * u(rng);
      }
      const auto x = solve_least_squares({a, b});
      const auto ref = oracle::normal_equations(dense, b);
      for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(x[c] - ref[c]) <= 1e-8);

      auto resid = a.multiply(x);
      for (std::size_t r = 0; r < 20; ++r) resid[r] = b[r] - resid[r];
      CHECK(max_abs(a.multiply_transposed(resid)) <= 1e-8 * (1.0 + max_abs(b)));
      CHECK(solve_least_squares({a, b}) == x);
    }
  }

  TEST_CASE("least squares handles a degree-10 polynomial basis on [-1, 1]") {
    const std::size_t m = 60;
    Matrix a(m, 11);
    std::vector<double> b(m);
    for (std::size_t r = 0; r < m; ++r) {
      const double u = -1.0 + 2.0 * static_cast<double>(r) / static_cast<double>(m - 1);
      double p = 1.0;
      for (std::size_t c = 0; c < 11; ++c, p *= u) a(r, c) = p;
      b[r] = std::cos(3.0 * u);
    }
    const auto x = solve_least_squares({a, b});
    auto resid = a.multiply(x);
    for (std::size_t r = 0; r < m; ++r) resid[r] = b[r] - resid[r];
    CHECK(max_abs(a.multiply_transposed(resid)) <= 1e-8 * (1.0 + max_abs(b)));
  }
}
