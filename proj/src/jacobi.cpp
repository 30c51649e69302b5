#include "gear/jacobi.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gear {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeTolerance = 1e-12;

double off_diagonal_norm(const FloatMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += a(r, c) * a(r, c);
  return std::sqrt(s);
}

}  // namespace

SymmetricEigen symmetric_eigen(const FloatMatrix& input, bool want_vectors) {
  if (!input.square()) throw std::invalid_argument("symmetric_eigen: matrix is not square");
  if (symmetry_defect(input) > 1e-12 * std::max(1.0, max_abs(input)))
    throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");

  const std::size_t n = input.rows();
  FloatMatrix a = input;
  FloatMatrix v = want_vectors ? FloatMatrix::identity(n) : FloatMatrix();
  const double threshold = kRelativeTolerance * frobenius_norm(input);

  SymmetricEigen result;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      result.converged = true;
      break;
    }
    ++result.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle from the symmetric Schur decomposition of the
        // 2x2 block (Golub & Van Loan 8.4.2).
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (!result.converged && off_diagonal_norm(a) <= threshold) result.converged = true;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  result.values.resize(n);
  if (want_vectors) result.vectors = FloatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    result.values[i] = a(order[i], order[i]);
    if (want_vectors)
      for (std::size_t k = 0; k < n; ++k) result.vectors(k, i) = v(k, order[i]);
  }
  return result;
}

std::size_t numerical_rank(const RealVector& eigenvalues, double rel_threshold) {
  const double scale = max_abs(std::span<const double>(eigenvalues));
  std::size_t r = 0;
  for (double x : eigenvalues)
    if (std::abs(x) > rel_threshold * scale) ++r;
  return r;
}

}  // namespace gear
