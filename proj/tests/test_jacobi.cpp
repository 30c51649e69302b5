#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gear/jacobi.hpp"
#include "gear/kernels.hpp"

using namespace gear;

TEST_CASE("Jacobi on a tridiagonal matrix with known spectrum") {
  // tridiag(-1, 2, -1) of order m: eigenvalues 2 - 2 cos(j pi/(m+1)).
  const std::size_t m = 12;
  FloatMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    a(i, i) = 2;
    if (i + 1 < m) a(i, i + 1) = a(i + 1, i) = -1;
  }
  const auto eig = symmetric_eigen(a, true);
  CHECK(eig.converged);
  for (std::size_t j = 1; j <= m; ++j)
    CHECK(eig.values[j - 1] == doctest::Approx(2 - 2 * std::cos(j * std::numbers::pi / (m + 1))).epsilon(1e-12));

  // A V = V diag(values)
  const FloatMatrix av = a * eig.vectors;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) CHECK(std::abs(av(i, j) - eig.vectors(i, j) * eig.values[j]) < 1e-12);
}

TEST_CASE("Jacobi rejects asymmetric input") {
  CHECK_THROWS_AS(symmetric_eigen(FloatMatrix{{1, 2}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_eigen(FloatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("numerical rank") {
  CHECK(numerical_rank({0.0, 1e-13, 3.0, -2.0}) == 2);
  CHECK(numerical_rank({0.0, 0.0}) == 0);
}
