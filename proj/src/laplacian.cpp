#include "gear/laplacian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gear/graph.hpp"
#include "gear/kernels.hpp"
#include "gear/rational.hpp"

namespace gear {

namespace {

void require_k(int n, int k) {
  if (k < 1 || k > n - 2)
    throw std::out_of_range("k must lie in 1..n-2 (got k=" + std::to_string(k) + ", n=" +
                            std::to_string(n) + ")");
}

// cos(2 pi t k / size) with t reduced first; shared with the parallel kernel
// so both paths produce identical bits.
double cos_step(int t, int k, int size) {
  const int wrapped = ((t % size) + size) % size;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>((wrapped * k) % size) / size);
}

}  // namespace

RationalVector laplacian_y_vector(int n) {
  require_wheel_size(n);
  const auto size = static_cast<std::size_t>(n - 1);
  RationalVector y(2 * size + 1);
  y[0] = 1;
  const Rational r = make_rational(n - 2, 3 * (n - 1));
  const Rational s = make_rational(-(n + 1), 3 * (n - 1));
  for (std::size_t i = 0; i < size; ++i) {
    y[1 + i] = r;
    y[1 + size + i] = s;
  }
  return y;
}

RationalMatrix a_matrix(int n) {
  const RationalVector y = laplacian_y_vector(n);
  const Rational coeff = make_rational(9 * (n - 1), (n + 4) * (n + 4));
  return scaled(outer(std::span<const Rational>(y), std::span<const Rational>(y)), coeff);
}

std::pair<FloatMatrix, FloatMatrix> c_matrices(int n, int k) {
  require_wheel_size(n);
  require_k(n, k);
  const int size = n - 1;
  const auto m = static_cast<std::size_t>(size);
  FloatMatrix c(m, m), c_tilde(m, m);
  for (int r = 0; r < size; ++r)
    for (int s = 0; s < size; ++s) {
      c(r, s) = cos_step(r - s, k, size);
      c_tilde(r, s) = cos_step(r - s - 1, k, size);
    }
  return {std::move(c), std::move(c_tilde)};
}

FloatMatrix b_matrix(int n, int k) {
  require_wheel_size(n);
  require_k(n, k);
  const int size = n - 1;
  if (2 * k == size)
    throw std::domain_error("B_k is singular: cos(pi k/(n-1)) = 0 for k = (n-1)/2");
  const double phi = std::cos(std::numbers::pi * k / size);
  const double g = 2.0 * phi + 1.0 / (2.0 * phi);
  const double scale = 2.0 / (size * g * g);
  const double inner = 1.0 / (4.0 * phi * phi);

  const auto [c, c_tilde] = c_matrices(n, k);
  const auto m = static_cast<std::size_t>(size);
  FloatMatrix b(2 * m + 1, 2 * m + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      b(1 + r, 1 + s) = scale * (c(r, s) * inner);
      b(1 + r, 1 + m + s) = scale * ((c(r, s) + c_tilde(r, s)) * inner);
      b(1 + m + r, 1 + s) = scale * ((c(r, s) + c_tilde(s, r)) * inner);
      b(1 + m + r, 1 + m + s) = scale * c(r, s);
    }
  return b;
}

RationalMatrix h_matrix(int n) {
  require_wheel_size(n);
  if (n % 2 == 0) throw std::domain_error("H is defined for odd n only (got n=" + std::to_string(n) + ")");
  const auto size = static_cast<std::size_t>(n - 1);
  RationalMatrix h(2 * size + 1, 2 * size + 1);
  const Rational plus = make_rational(1, n - 1);
  const Rational minus = -plus;
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t s = 0; s < size; ++s) h(1 + r, 1 + s) = (r + s) % 2 == 0 ? plus : minus;
  return h;
}

int laplacian_term_count(int n) {
  require_wheel_size(n);
  return n % 2 == 0 ? (n - 2) / 2 : (n - 3) / 2;
}

FloatMatrix special_laplacian(int n) {
  RationalMatrix base = a_matrix(n);
  if (n % 2 == 1) base = base + h_matrix(n);
  return kernels::parallel::laplacian_b_sum(n, laplacian_term_count(n), to_float(base));
}

LaplacianParts laplacian_parts(int n) {
  LaplacianParts parts;
  parts.n = n;
  parts.a = a_matrix(n);
  if (n % 2 == 1) parts.h = h_matrix(n);
  for (int k = 1; k <= n - 2; ++k) {
    parts.phi.push_back(std::cos(std::numbers::pi * k / (n - 1)));
    parts.b.push_back(2 * k == n - 1 ? FloatMatrix() : b_matrix(n, k));
  }
  return parts;
}

}  // namespace gear
