#include "gear/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gear/circulant.hpp"
#include "gear/graph.hpp"
#include "gear/jacobi.hpp"
#include "gear/kernels.hpp"

namespace gear {

namespace {

void require_theta_index(int n, int k) {
  if (k < 1 || k > n - 2)
    throw std::out_of_range("k must lie in 1..n-2 (got k=" + std::to_string(k) + ", n=" +
                            std::to_string(n) + ")");
}

double residual_inf(const ComplexVector& dx, const ComplexVector& x, double value) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(dx[i] - value * x[i]));
  return worst;
}

}  // namespace

std::vector<IntegerVector> null_basis(int n) {
  require_wheel_size(n);
  const std::size_t size = static_cast<std::size_t>(n - 1);
  std::vector<IntegerVector> basis;
  for (std::size_t i = 0; i < size; ++i) {
    IntegerVector f(2 * size + 1, 0);
    f[0] = 1;
    f[1 + i] = -1;
    f[1 + (i + 1) % size] = -1;
    f[1 + size + i] = 1;
    basis.push_back(std::move(f));
  }
  return basis;
}

std::array<LambdaPair, 2> lambda_pairs(int n) {
  require_wheel_size(n);
  const double root = std::sqrt(5.0) * std::sqrt(static_cast<double>(n * (2 * n - 9) + 12));
  const auto size = static_cast<std::size_t>(n - 1);
  std::array<LambdaPair, 2> out;
  for (int j = 1; j <= 2; ++j) {
    const double sign = j % 2 == 0 ? 1.0 : -1.0;  // (-1)^j
    LambdaPair& p = out[j - 1];
    p.value = 3.0 * n - 8.0 - sign * root;
    p.alpha = (15.0 - 5.0 * n - 2.0 * sign * root) / (3.0 * (n - 1));
    p.beta = (6.0 - n - sign * root) / (3.0 * (n - 1));
    p.vector.assign(2 * size + 1, 1.0);
    p.vector[0] = p.alpha;
    std::fill(p.vector.begin() + 1, p.vector.begin() + 1 + size, p.beta);
  }
  return out;
}

double theta(int n, int k) {
  require_wheel_size(n);
  require_theta_index(n, k);
  const double c = std::cos(std::numbers::pi * k / (n - 1));
  return -8.0 * c * c - 2.0;
}

ComplexVector q_vector(int n, int k) {
  require_wheel_size(n);
  require_theta_index(n, k);
  const auto size = static_cast<std::size_t>(n - 1);
  ComplexVector q(2 * size + 1, Complex(0.0, 0.0));
  if (2 * k == n - 1) {
    for (std::size_t r = 0; r < size; ++r) q[1 + r] = r % 2 == 0 ? 1.0 : -1.0;
    return q;
  }
  const double c = std::cos(std::numbers::pi * k / (n - 1));
  const ComplexVector v = unit_root_powers(size, k);
  const FloatMatrix s = to_float(circ(s_block_spec(n)));
  const ComplexVector sv = s * std::span<const Complex>(v);
  for (std::size_t r = 0; r < size; ++r) {
    q[1 + r] = -sv[r] / (8.0 * c * c);
    q[1 + size + r] = v[r];
  }
  return q;
}

GearSpectrum gear_spectrum(int n) {
  GearSpectrum g;
  g.n = n;
  g.lambda = lambda_pairs(n);
  for (int k = 1; k <= n - 2; ++k) {
    g.theta.push_back(theta(n, k));
    g.q.push_back(q_vector(n, k));
  }
  g.null_basis = null_basis(n);
  return g;
}

RealVector analytic_eigenvalues(int n) {
  const auto lp = lambda_pairs(n);
  RealVector out{lp[0].value, lp[1].value};
  for (int k = 1; k <= n - 2; ++k) out.push_back(theta(n, k));
  out.insert(out.end(), static_cast<std::size_t>(n - 1), 0.0);
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumReport spectrum_report(int n) {
  SpectrumReport rep;
  rep.n = n;
  const IntegerMatrix d_int = gear_distance_closed(n);
  const FloatMatrix d = to_float(d_int);
  rep.analytic = analytic_eigenvalues(n);
  rep.numeric = symmetric_eigen(d).values;
  for (std::size_t i = 0; i < rep.analytic.size(); ++i)
    rep.max_eigenvalue_gap = std::max(rep.max_eigenvalue_gap, std::abs(rep.analytic[i] - rep.numeric[i]));

  const GearSpectrum g = gear_spectrum(n);
  for (const auto& p : g.lambda) {
    const RealVector dx = d * std::span<const double>(p.vector);
    for (std::size_t i = 0; i < dx.size(); ++i)
      rep.max_lambda_residual = std::max(rep.max_lambda_residual, std::abs(dx[i] - p.value * p.vector[i]));
  }
  for (std::size_t k = 0; k < g.q.size(); ++k) {
    const ComplexVector dq = d * std::span<const Complex>(g.q[k]);
    rep.max_theta_residual = std::max(rep.max_theta_residual, residual_inf(dq, g.q[k], g.theta[k]));
  }
  for (const auto& f : g.null_basis) {
    const IntegerVector df = d_int * std::span<const std::int64_t>(f);
    for (auto x : df) rep.max_null_residual = std::max(rep.max_null_residual, std::abs(static_cast<double>(x)));
  }
  rep.null_multiplicity = g.null_basis.size();
  rep.numerical_rank = numerical_rank(rep.numeric);
  return rep;
}

}  // namespace gear
