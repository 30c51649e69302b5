#include "gear/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gear/laplacian.hpp"

namespace gear::kernels {

namespace {

template <class M>
void check_product_shapes(const M& a, const M& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
}

template <class T, class V>
std::vector<V> matvec(const Matrix<T>& a, std::span<const V> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<V> y(a.rows(), V(0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    V acc(0);
    for (std::size_t c = 0; c < a.cols(); ++c) acc += V(a(r, c)) * x[c];
    y[r] = acc;
  }
  return y;
}

}  // namespace

namespace serial {

FloatMatrix multiply(const FloatMatrix& a, const FloatMatrix& b) {
  check_product_shapes(a, b);
  FloatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  check_product_shapes(a, b);
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntegerVector multiply(const IntegerMatrix& a, std::span<const std::int64_t> x) {
  return matvec(a, x);
}
RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x) {
  return matvec(a, x);
}
RealVector multiply(const FloatMatrix& a, std::span<const double> x) { return matvec(a, x); }
ComplexVector multiply(const FloatMatrix& a, std::span<const Complex> x) {
  return matvec(a, x);
}

FloatMatrix laplacian_b_sum(int n, int k_max, const FloatMatrix& base) {
  const std::size_t order = static_cast<std::size_t>(2 * n - 1);
  if (base.rows() != order || base.cols() != order)
    throw std::invalid_argument("laplacian_b_sum: base has wrong order");
  std::vector<FloatMatrix> terms;
  terms.reserve(static_cast<std::size_t>(std::max(k_max, 0)));
  for (int k = 1; k <= k_max; ++k) terms.push_back(b_matrix(n, k));
  FloatMatrix out(order, order);
  for (std::size_t i = 0; i < order * order; ++i) {
    CompensatedSum acc(base.data()[i]);
    for (const auto& b : terms) acc.add(b.data()[i]);
    out.data()[i] = acc.value();
  }
  return out;
}

}  // namespace serial

namespace parallel {

FloatMatrix multiply(const FloatMatrix& a, const FloatMatrix& b) {
  check_product_shapes(a, b);
  FloatMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  check_product_shapes(a, b);
  RationalMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

FloatMatrix laplacian_b_sum(int n, int k_max, const FloatMatrix& base) {
  const std::size_t order = static_cast<std::size_t>(2 * n - 1);
  if (base.rows() != order || base.cols() != order)
    throw std::invalid_argument("laplacian_b_sum: base has wrong order");
  const int size = n - 1;
  const int terms = std::max(k_max, 0);

  // cos_table[k-1][t] = cos(2*pi*t*k/(n-1)), t reduced mod n-1.
  std::vector<RealVector> cos_table(static_cast<std::size_t>(terms), RealVector(size));
  RealVector scale(terms), inner(terms);
  for (int k = 1; k <= terms; ++k) {
    const int numerator = 2 * k;
    if (numerator == size) throw std::domain_error("laplacian_b_sum: phi_k vanishes");
    for (int t = 0; t < size; ++t)
      cos_table[k - 1][t] =
          std::cos(2.0 * std::numbers::pi * static_cast<double>((t * k) % size) / size);
    const double phi = std::cos(std::numbers::pi * k / size);
    const double g = 2.0 * phi + 1.0 / (2.0 * phi);
    scale[k - 1] = 2.0 / (size * g * g);
    inner[k - 1] = 1.0 / (4.0 * phi * phi);
  }
  auto wrap = [size](int t) { return ((t % size) + size) % size; };

  FloatMatrix out(order, order);
  const auto rows = static_cast<std::ptrdiff_t>(order);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      CompensatedSum acc(base(i, j));
      if (i != 0 && j != 0) {
        const bool i_rim = static_cast<int>(i) <= size;
        const bool j_rim = static_cast<int>(j) <= size;
        const int r = i_rim ? static_cast<int>(i) - 1 : static_cast<int>(i) - 1 - size;
        const int s = j_rim ? static_cast<int>(j) - 1 : static_cast<int>(j) - 1 - size;
        for (int k = 0; k < terms; ++k) {
          const auto& tab = cos_table[k];
          const double c = tab[wrap(r - s)];
          double v;
          if (i_rim && j_rim)
            v = c * inner[k];
          else if (i_rim)
            v = (c + tab[wrap(r - s - 1)]) * inner[k];
          else if (j_rim)
            v = (c + tab[wrap(s - r - 1)]) * inner[k];
          else
            v = c;
          acc.add(scale[k] * v);
        }
      }
      out(i, j) = acc.value();
    }
  }
  return out;
}

}  // namespace parallel

}  // namespace gear::kernels

namespace gear {

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
  return kernels::parallel::multiply(a, b);
}
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  return kernels::parallel::multiply(a, b);
}
IntegerVector operator*(const IntegerMatrix& a, std::span<const std::int64_t> x) {
  return kernels::serial::multiply(a, x);
}
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  return kernels::serial::multiply(a, x);
}
RealVector operator*(const FloatMatrix& a, std::span<const double> x) {
  return kernels::serial::multiply(a, x);
}
ComplexVector operator*(const FloatMatrix& a, std::span<const Complex> x) {
  return kernels::serial::multiply(a, x);
}

}  // namespace gear
