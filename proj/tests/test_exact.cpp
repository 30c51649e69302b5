#include <doctest.h>

#include <random>

#include "gear/exact.hpp"
#include "gear/kernels.hpp"
#include "gear/rational.hpp"

using namespace gear;

namespace {

// Cofactor expansion; the independent determinant oracle for small orders.
Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    det += (c % 2 == 0 ? 1 : -1) * m(0, c) * cofactor_det(minor);
  }
  return det;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  RationalMatrix m(rows, cols);
  for (auto& x : m.data()) x = make_rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RationalMatrix m = random_matrix(rng, n, n);
    CHECK(exact::determinant(m) == cofactor_det(m));
  }
  CHECK(exact::determinant(RationalMatrix{{0, 1}, {1, 0}}) == Rational(-1));
  CHECK(exact::determinant(RationalMatrix{{1, 2}, {2, 4}}) == Rational(0));
}

TEST_CASE("rref of a rank-deficient matrix") {
  const RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  std::vector<std::size_t> pivots;
  const RationalMatrix r = exact::rref(m, &pivots);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(r == RationalMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  CHECK(exact::rank(m) == 2);
}

TEST_CASE("inverse times matrix is the identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix m = random_matrix(rng, 5, 5);
    if (exact::determinant(m) == 0) continue;
    CHECK(m * exact::inverse(m) == RationalMatrix::identity(5));
  }
  CHECK_THROWS_AS(exact::inverse(RationalMatrix{{1, 2}, {2, 4}}), std::domain_error);
}
