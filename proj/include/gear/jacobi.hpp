#pragma once

#include "gear/matrix.hpp"

namespace gear {

struct SymmetricEigen {
  RealVector values;     // ascending
  FloatMatrix vectors;   // column i pairs with values[i]; empty if not requested
  int sweeps = 0;
  bool converged = false;
};

// Cyclic Jacobi rotations on an owned copy of `a`. Stops once the
// off-diagonal Frobenius norm is <= 1e-12 * ||a||_F or after 100 sweeps.
// Throws std::invalid_argument if `a` is not square and symmetric.
SymmetricEigen symmetric_eigen(const FloatMatrix& a, bool want_vectors = false);

// Number of eigenvalues with |value| > rel_threshold * max|value|.
std::size_t numerical_rank(const RealVector& eigenvalues, double rel_threshold = 1e-8);

}  // namespace gear
