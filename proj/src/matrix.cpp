#include "gear/matrix.hpp"

#include <cmath>
#include <cstring>
#include <limits>

namespace gear {

namespace {

// mpq_get_d truncates; pick the nearer of the truncated value and its
// outward neighbour, ties to even.
double nearest_double(const Rational& q) {
  const double truncated = q.get_d();
  if (sgn(q) == 0) return 0.0;
  const double outward = std::nextafter(
      truncated, sgn(q) > 0 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(outward)) return truncated;
  const Rational lo_gap = abs(q - Rational(truncated));
  const Rational hi_gap = abs(Rational(outward) - q);
  const int cmp_result = cmp(lo_gap, hi_gap);
  if (cmp_result < 0) return truncated;
  if (cmp_result > 0) return outward;
  std::uint64_t bits;
  std::memcpy(&bits, &truncated, sizeof bits);
  return (bits & 1U) == 0 ? truncated : outward;
}

}  // namespace

FloatMatrix to_float(const RationalMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = nearest_double(m.data()[i]);
  return out;
}

FloatMatrix to_float(const IntegerMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i)
    out.data()[i] = static_cast<double>(m.data()[i]);
  return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i)
    out.data()[i] = Rational(static_cast<long>(m.data()[i]));
  return out;
}

RealVector to_float(std::span<const Rational> v) {
  RealVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = nearest_double(v[i]);
  return out;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

double max_abs(const FloatMatrix& a) { return max_abs(std::span<const double>(a.data())); }

double max_abs(std::span<const double> v) {
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x));
  return worst;
}

double frobenius_norm(const FloatMatrix& a) {
  double s = 0.0;
  for (double x : a.data()) s += x * x;
  return std::sqrt(s);
}

double symmetry_defect(const FloatMatrix& a) { return max_abs_diff(a, a.transpose()); }

}  // namespace gear
