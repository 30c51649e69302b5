#include "gear/edm.hpp"

#include <stdexcept>

#include "gear/jacobi.hpp"
#include "gear/kernels.hpp"
#include "gear/pinv.hpp"

namespace gear {

namespace {

bool hollow(const RationalMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (sgn(d(i, i)) != 0) return false;
  return true;
}

RationalVector ones(std::size_t m) { return RationalVector(m, Rational(1)); }

}  // namespace

RationalMatrix centering_projector(std::size_t m) {
  if (m == 0) throw std::invalid_argument("centering_projector: m must be >= 1");
  RationalMatrix p(m, m);
  const Rational off(-1, static_cast<unsigned long>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) p(r, c) = r == c ? Rational(1 + off) : off;
  for (auto& x : p.data()) x.canonicalize();
  return p;
}

RationalMatrix gram_from_edm(const RationalMatrix& d) {
  if (!d.square()) throw std::invalid_argument("gram_from_edm: matrix is not square");
  if (!d.is_symmetric()) throw std::invalid_argument("gram_from_edm: matrix is not symmetric");
  if (!hollow(d)) throw std::invalid_argument("gram_from_edm: matrix has a nonzero diagonal");
  const RationalMatrix p = centering_projector(d.rows());
  return scaled(p * d * p, Rational(-1, 2));
}

Rational edm_beta(const RationalMatrix& d) {
  const RationalVector u = rational_pinv(d) * std::span<const Rational>(ones(d.rows()));
  Rational b = 0;
  for (const auto& x : u) b += x;
  return b;
}

EdmReport is_edm(const RationalMatrix& d, double tol) {
  EdmReport rep;
  rep.order = d.rows();
  if (!d.square()) return rep;
  rep.is_hollow = hollow(d);
  rep.is_symmetric = d.is_symmetric();
  if (!rep.is_hollow || !rep.is_symmetric) return rep;
  const auto eig = symmetric_eigen(to_float(gram_from_edm(d)));
  rep.min_gram_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
  rep.is_edm = rep.min_gram_eigenvalue >= -tol;
  rep.beta = edm_beta(d).get_d();
  return rep;
}

FloatMatrix balaji_bapat_pinv(const RationalMatrix& d) {
  const RationalMatrix d_pinv = rational_pinv(d);
  const RationalVector u = d_pinv * std::span<const Rational>(ones(d.rows()));
  Rational b = 0;
  for (const auto& x : u) b += x;
  if (sgn(b) <= 0)
    throw std::domain_error("balaji_bapat_pinv: 1' D^+ 1 must be positive for the EDM formula");

  const RationalMatrix u_pinv = rational_pinv(gram_from_edm(d));
  RationalMatrix exact = scaled(u_pinv, Rational(-1, 2));
  const Rational inv_b = 1 / b;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) exact(r, c) += inv_b * u[r] * u[c];
  return to_float(exact);
}

}  // namespace gear
