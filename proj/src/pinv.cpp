#include "gear/pinv.hpp"

#include <algorithm>

#include "gear/exact.hpp"
#include "gear/graph.hpp"
#include "gear/kernels.hpp"
#include "gear/laplacian.hpp"
#include "gear/rational.hpp"

namespace gear {

RationalVector u_vector(int n) {
  require_wheel_size(n);
  const auto size = static_cast<std::size_t>(n - 1);
  const std::int64_t denom = static_cast<std::int64_t>(n) * n + 3 * n - 4;
  RationalVector u(2 * size + 1);
  u[0] = make_rational(-(3 * n - 13), denom);
  const Rational rim = make_rational(-(n - 6), denom);
  const Rational sub = make_rational(1, n + 4);
  for (std::size_t i = 0; i < size; ++i) {
    u[1 + i] = rim;
    u[1 + size + i] = sub;
  }
  return u;
}

Rational beta(int n) {
  require_wheel_size(n);
  return make_rational(2, n - 1);
}

GearPinvResult gear_pinv(int n) {
  GearPinvResult res;
  res.n = n;
  res.u = u_vector(n);
  res.beta = beta(n);
  res.laplacian = special_laplacian(n);
  const RealVector u = to_float(std::span<const Rational>(res.u));
  const double weight = (n - 1) / 2.0;
  res.pinv = FloatMatrix(u.size(), u.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < u.size(); ++c)
      res.pinv(r, c) = -0.5 * res.laplacian(r, c) + weight * (u[r] * u[c]);
  return res;
}

FloatMatrix gear_pinv_formula(int n) { return gear_pinv(n).pinv; }

RationalMatrix rational_pinv(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix reduced = exact::rref(m, &pivots);
  const std::size_t rank = pivots.size();
  if (rank == 0) return RationalMatrix(m.cols(), m.rows());

  RationalMatrix c(m.rows(), rank);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t j = 0; j < rank; ++j) c(r, j) = m(r, pivots[j]);
  RationalMatrix f(rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t col = 0; col < m.cols(); ++col) f(i, col) = reduced(i, col);

  const RationalMatrix ft = f.transpose();
  const RationalMatrix ct = c.transpose();
  const RationalMatrix ff_inv = exact::inverse(f * ft);
  const RationalMatrix cc_inv = exact::inverse(ct * c);
  return ft * (ff_inv * (cc_inv * ct));
}

double PenroseReport::max_residual() const {
  return *std::max_element(residual.begin(), residual.end());
}

PenroseReport penrose_check(const RationalMatrix& m, const RationalMatrix& x) {
  if (x.rows() != m.cols() || x.cols() != m.rows())
    throw std::invalid_argument("penrose_check: X must have the shape of M'");
  const RationalMatrix mx = m * x;
  const RationalMatrix xm = x * m;
  const std::array<RationalMatrix, 4> defects{mx * m - m, xm * x - x, mx.transpose() - mx,
                                               xm.transpose() - xm};
  PenroseReport rep;
  for (std::size_t i = 0; i < defects.size(); ++i) {
    Rational worst = 0;
    for (const auto& e : defects[i].data())
      if (abs(e) > worst) worst = abs(e);
    rep.holds[i] = sgn(worst) == 0;
    rep.residual[i] = worst.get_d();
  }
  return rep;
}

PenroseReport penrose_check(const RationalMatrix& m, const FloatMatrix& x, std::int64_t max_den) {
  return penrose_check(m, nearest_rational(x, max_den));
}

}  // namespace gear
