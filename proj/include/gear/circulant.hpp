#pragma once

#include <vector>

#include "gear/matrix.hpp"

namespace gear {

// Circ(c_0, ..., c_{m-1}): entry (r, s) is c_{(s - r) mod m}.
struct CirculantSpec {
  RationalVector first_row;
};

struct CirculantEigenpair {
  Complex value;
  ComplexVector vector;
};

RationalMatrix circ(const CirculantSpec& spec);

template <class T>
Matrix<T> circulant(std::span<const T> first_row) {
  const std::size_t m = first_row.size();
  Matrix<T> out(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) out(r, s) = first_row[(s + m - r) % m];
  return out;
}

// (1, w^m, w^{2m}, ..., w^{m(size-1)}) with w = exp(2 pi i / size).
// Powers come from repeated multiplication by w^m, renormalized to unit
// modulus every 64 steps.
ComplexVector unit_root_powers(std::size_t size, long m);

// sigma_m = sum_p c_p w^{pm} with eigenvector unit_root_powers(size, m),
// for m = 0..size-1.
std::vector<CirculantEigenpair> circ_eigen(const CirculantSpec& spec);

// Eigenvalues of Circ(0,2,4,...,4,2) of order n-1:
// 4(n-3) followed by -8 cos^2(pi m/(n-1)), m = 1..n-2.
RealVector t_spectrum(int n);

// Eigenvalues of Circ(1,3,...,3,1) of order n-1:
// 3n-7 followed by -2(1 + w^{-m}), m = 1..n-2.
ComplexVector s_spectrum(int n);

// First rows of the S and T blocks of the gear distance matrix.
CirculantSpec s_block_spec(int n);
CirculantSpec t_block_spec(int n);

// Sorts by real part, groups runs whose real parts chain within `tol`,
// and orders each group by imaginary part.
ComplexVector canonical_order(ComplexVector values, double tol);

// Multiset equality after canonical_order, compared positionally.
bool same_spectrum(const ComplexVector& a, const ComplexVector& b, double tol);

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace gear
