#pragma once

#include <array>

#include "gear/matrix.hpp"

namespace gear {

// D(G_n)^+ 1 = (-(3n-13), -(n-6) 1', (n-1) 1')' / (n^2+3n-4).
RationalVector u_vector(int n);

// 1' D(G_n)^+ 1 = 2/(n-1).
Rational beta(int n);

// -1/2 L + (n-1)/2 u u', with L the special Laplacian for n's parity.
FloatMatrix gear_pinv_formula(int n);

struct GearPinvResult {
  int n = 0;
  RationalVector u;
  Rational beta;
  FloatMatrix laplacian;
  FloatMatrix pinv;
};

GearPinvResult gear_pinv(int n);

// Exact Moore-Penrose inverse through a rank factorization M = C F, where C
// holds the pivot columns of M and F the nonzero rows of rref(M):
//   M^+ = F' (F F')^{-1} (C' C)^{-1} C'.
RationalMatrix rational_pinv(const RationalMatrix& m);

struct PenroseReport {
  // MXM = M, XMX = X, (MX)' = MX, (XM)' = XM
  std::array<bool, 4> holds{};
  // Largest absolute entry of each defect matrix.
  std::array<double, 4> residual{};

  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
  double max_residual() const;
};

PenroseReport penrose_check(const RationalMatrix& m, const RationalMatrix& x);

// Residual mode for float-derived candidates: x is snapped to the nearest
// rationals with denominator <= max_den before the exact check.
PenroseReport penrose_check(const RationalMatrix& m, const FloatMatrix& x, std::int64_t max_den = 1000000);

}  // namespace gear
