#pragma once

#include <span>

#include "gear/matrix.hpp"

// Dense kernels in two flavours. `serial` is the reference used by tests;
// `parallel` distributes rows over OpenMP threads and must agree with it
// (exactly for rationals, bitwise for floats since per-entry summation
// order is unchanged).
namespace gear::kernels {

namespace serial {

FloatMatrix multiply(const FloatMatrix& a, const FloatMatrix& b);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
IntegerVector multiply(const IntegerMatrix& a, std::span<const std::int64_t> x);
RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x);
RealVector multiply(const FloatMatrix& a, std::span<const double> x);
ComplexVector multiply(const FloatMatrix& a, std::span<const Complex> x);

// base + sum_{k=1}^{k_max} B_k, each entry accumulated in ascending k with
// Neumaier compensation. B_k is materialized from its block definition.
FloatMatrix laplacian_b_sum(int n, int k_max, const FloatMatrix& base);

}  // namespace serial

namespace parallel {

FloatMatrix multiply(const FloatMatrix& a, const FloatMatrix& b);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Same contract as serial::laplacian_b_sum. B_k entries are evaluated on
// the fly from cosine tables with the same expressions, so the result is
// bitwise identical to the serial path.
FloatMatrix laplacian_b_sum(int n, int k_max, const FloatMatrix& base);

}  // namespace parallel

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  explicit CompensatedSum(double start = 0.0) : sum_(start) {}
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_;
  double carry_ = 0.0;
};

}  // namespace gear::kernels

namespace gear {

// Default entry points; these use the parallel kernels.
FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
IntegerVector operator*(const IntegerMatrix& a, std::span<const std::int64_t> x);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);
RealVector operator*(const FloatMatrix& a, std::span<const double> x);
ComplexVector operator*(const FloatMatrix& a, std::span<const Complex> x);

}  // namespace gear
