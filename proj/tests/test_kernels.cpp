#include <doctest.h>

#include <random>

#include "gear/kernels.hpp"
#include "gear/laplacian.hpp"
#include "gear/rational.hpp"

using namespace gear;

TEST_CASE("parallel and serial products agree") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  FloatMatrix a(17, 23), b(23, 11);
  for (auto& x : a.data()) x = u(rng);
  for (auto& x : b.data()) x = u(rng);
  CHECK(kernels::parallel::multiply(a, b) == kernels::serial::multiply(a, b));

  RationalMatrix p(9, 7), q(7, 8);
  for (auto& x : p.data()) x = make_rational(num(rng), den(rng));
  for (auto& x : q.data()) x = make_rational(num(rng), den(rng));
  CHECK(kernels::parallel::multiply(p, q) == kernels::serial::multiply(p, q));
  CHECK_THROWS(kernels::serial::multiply(p, p));
}

TEST_CASE("fused Laplacian accumulation matches the materialized reference bitwise") {
  for (int n = 4; n <= 25; ++n) {
    const int terms = laplacian_term_count(n);
    RationalMatrix base = a_matrix(n);
    if (n % 2 == 1) base = base + h_matrix(n);
    const FloatMatrix start = to_float(base);
    CHECK(kernels::parallel::laplacian_b_sum(n, terms, start) ==
          kernels::serial::laplacian_b_sum(n, terms, start));
  }
}

TEST_CASE("compensated sum recovers cancelled low-order terms") {
  kernels::CompensatedSum s(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 2.0);
}
