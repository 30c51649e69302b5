#pragma once

#include "gear/matrix.hpp"

namespace gear {

struct EdmReport {
  std::size_t order = 0;
  bool is_hollow = false;
  bool is_symmetric = false;
  double min_gram_eigenvalue = 0.0;
  bool is_edm = false;
  double beta = 0.0;  // 1' D^+ 1
};

// P = I - J/m.
RationalMatrix centering_projector(std::size_t m);

// U = -1/2 P D P. Throws std::invalid_argument unless D is square,
// symmetric and hollow.
RationalMatrix gram_from_edm(const RationalMatrix& d);

// Certifies D as a Euclidean distance matrix: hollow, symmetric, and
// -1/2 PDP positive semidefinite up to -tol.
EdmReport is_edm(const RationalMatrix& d, double tol = 1e-9);

// 1' D^+ 1 from the exact pseudoinverse.
Rational edm_beta(const RationalMatrix& d);

// D^+ = -1/2 U^+ + (1/beta) (D^+ 1)(D^+ 1)', with U^+, D^+ 1 and beta from
// the exact oracle. Throws std::domain_error when beta <= 0.
FloatMatrix balaji_bapat_pinv(const RationalMatrix& d);

}  // namespace gear
