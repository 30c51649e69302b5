#pragma once

#include <array>
#include <vector>

#include "gear/matrix.hpp"

namespace gear {

struct LambdaPair {
  double value;
  double alpha;
  double beta;
  RealVector vector;  // (alpha, beta * 1', 1')'
};

// Analytic eigen-data of the gear distance matrix D(G_n).
struct GearSpectrum {
  int n = 0;
  std::array<LambdaPair, 2> lambda;
  RealVector theta;                   // theta_1..theta_{n-2}
  std::vector<ComplexVector> q;       // q_1..q_{n-2}
  std::vector<IntegerVector> null_basis;
};

// f^i for i = 1..n-1: hub +1, the two rim ends of rim edge i get -1, the
// vertex subdividing that edge gets +1.
std::vector<IntegerVector> null_basis(int n);

// lambda_j = 3n-8 -/+ sqrt(5) sqrt(n(2n-9)+12), j = 1, 2 (lambda_1 larger).
std::array<LambdaPair, 2> lambda_pairs(int n);

// theta_k = -8 cos^2(pi k/(n-1)) - 2. Throws std::out_of_range unless 1 <= k <= n-2.
double theta(int n, int k);

// Eigenvector for theta_k. Generic k: (0, u_k', v_k')' with v_k the Fourier
// vector and u_k = -S v_k / (8 cos^2(pi k/(n-1))). For odd n and
// k = (n-1)/2 the cosine vanishes and the vector is (0, 1,-1,...,1,-1, 0')'.
ComplexVector q_vector(int n, int k);

GearSpectrum gear_spectrum(int n);

// lambda_1, lambda_2, theta_1..theta_{n-2}, then n-1 zeros, sorted ascending.
RealVector analytic_eigenvalues(int n);

struct SpectrumReport {
  int n = 0;
  RealVector analytic;   // sorted ascending
  RealVector numeric;    // Jacobi, sorted ascending
  double max_eigenvalue_gap = 0.0;
  double max_lambda_residual = 0.0;   // max_j ||D x_j - lambda_j x_j||_inf
  double max_theta_residual = 0.0;    // max_k ||D q_k - theta_k q_k||_inf
  double max_null_residual = 0.0;     // max_i ||D f^i||_inf
  std::size_t null_multiplicity = 0;  // n-1
  std::size_t numerical_rank = 0;
};

SpectrumReport spectrum_report(int n);

}  // namespace gear
