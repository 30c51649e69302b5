#include "gear/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gear/graph.hpp"

namespace gear {

RationalMatrix circ(const CirculantSpec& spec) {
  if (spec.first_row.empty()) throw std::invalid_argument("circ: empty first row");
  return circulant(std::span<const Rational>(spec.first_row));
}

ComplexVector unit_root_powers(std::size_t size, long m) {
  if (size == 0) throw std::invalid_argument("unit_root_powers: size must be positive");
  const long s = static_cast<long>(size);
  const long reduced = ((m % s) + s) % s;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduced) / static_cast<double>(s);
  const Complex step(std::cos(angle), std::sin(angle));
  ComplexVector out(size);
  Complex current(1.0, 0.0);
  for (std::size_t j = 0; j < size; ++j) {
    out[j] = current;
    current *= step;
    if ((j + 1) % 64 == 0) current /= std::abs(current);
  }
  return out;
}

std::vector<CirculantEigenpair> circ_eigen(const CirculantSpec& spec) {
  if (spec.first_row.empty()) throw std::invalid_argument("circ_eigen: empty first row");
  const std::size_t size = spec.first_row.size();
  const RealVector c = to_float(std::span<const Rational>(spec.first_row));
  std::vector<CirculantEigenpair> out;
  out.reserve(size);
  for (std::size_t m = 0; m < size; ++m) {
    ComplexVector v = unit_root_powers(size, static_cast<long>(m));
    Complex sigma(0.0, 0.0);
    for (std::size_t p = 0; p < size; ++p) sigma += c[p] * v[p];
    out.push_back({sigma, std::move(v)});
  }
  return out;
}

RealVector t_spectrum(int n) {
  require_wheel_size(n);
  RealVector out;
  out.push_back(4.0 * (n - 3));
  for (int m = 1; m <= n - 2; ++m) {
    const double c = std::cos(std::numbers::pi * m / (n - 1));
    out.push_back(-8.0 * c * c);
  }
  return out;
}

ComplexVector s_spectrum(int n) {
  require_wheel_size(n);
  const auto size = static_cast<std::size_t>(n - 1);
  ComplexVector out;
  out.emplace_back(3.0 * n - 7.0, 0.0);
  for (int m = 1; m <= n - 2; ++m) {
    const Complex w_inv = unit_root_powers(size, -m)[1];
    out.push_back(-2.0 * (1.0 + w_inv));
  }
  return out;
}

CirculantSpec s_block_spec(int n) {
  require_wheel_size(n);
  CirculantSpec spec;
  spec.first_row.assign(static_cast<std::size_t>(n - 1), Rational(3));
  spec.first_row.front() = 1;
  spec.first_row.back() = 1;
  return spec;
}

CirculantSpec t_block_spec(int n) {
  require_wheel_size(n);
  CirculantSpec spec;
  spec.first_row.assign(static_cast<std::size_t>(n - 1), Rational(4));
  spec.first_row.front() = 0;
  spec.first_row[1] = 2;
  spec.first_row.back() = 2;
  return spec;
}

ComplexVector canonical_order(ComplexVector values, double tol) {
  std::sort(values.begin(), values.end(),
            [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
  auto group_begin = values.begin();
  while (group_begin != values.end()) {
    auto group_end = group_begin + 1;
    while (group_end != values.end() && group_end->real() - (group_end - 1)->real() <= tol)
      ++group_end;
    std::sort(group_begin, group_end,
              [](const Complex& a, const Complex& b) { return a.imag() < b.imag(); });
    group_begin = group_end;
  }
  return values;
}

bool same_spectrum(const ComplexVector& a, const ComplexVector& b, double tol) {
  if (a.size() != b.size()) return false;
  const auto ca = canonical_order(a, tol);
  const auto cb = canonical_order(b, tol);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (std::abs(ca[i] - cb[i]) > tol) return false;
  return true;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner_product: length mismatch");
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

}  // namespace gear
