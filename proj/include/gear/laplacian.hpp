#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gear/matrix.hpp"

namespace gear {

// y = (1, (n-2)/(3(n-1)) 1', -(n+1)/(3(n-1)) 1')'; orthogonal to 1.
RationalVector laplacian_y_vector(int n);

// A = 9(n-1)/(n+4)^2 * y y'.
RationalMatrix a_matrix(int n);

// C_k(r,s) = cos(2 pi (r-s) k/(n-1)), C~_k(r,s) = cos(2 pi (r-s-1) k/(n-1)).
std::pair<FloatMatrix, FloatMatrix> c_matrices(int n, int k);

// Block matrix with zero hub row/column,
//   [ C/(4 phi^2)          (C + C~)/(4 phi^2) ]
//   [ (C + C~')/(4 phi^2)  C                  ]
// scaled by 2/((n-1)(2 phi + 1/(2 phi))^2), phi = cos(pi k/(n-1)).
// Throws std::out_of_range for k outside 1..n-2 and std::domain_error when
// phi vanishes (odd n, k = (n-1)/2).
FloatMatrix b_matrix(int n, int k);

// (1/(n-1)) * blockdiag(0, T, O) with T(r,s) = (-1)^{r+s}. Odd n only.
RationalMatrix h_matrix(int n);

// A + sum_{k=1}^{(n-2)/2} B_k for even n; A + H + sum_{k=1}^{(n-3)/2} B_k for
// odd n. A and H are summed exactly and cast once.
FloatMatrix special_laplacian(int n);

// Upper summation index for the B_k terms.
int laplacian_term_count(int n);

struct LaplacianParts {
  int n = 0;
  RationalMatrix a;
  std::vector<FloatMatrix> b;  // b[k-1] = B_k, k = 1..n-2; empty when phi_k = 0
  std::optional<RationalMatrix> h;
  RealVector phi;              // phi_k, k = 1..n-2
};

LaplacianParts laplacian_parts(int n);

}  // namespace gear
