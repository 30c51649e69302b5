#pragma once

#include <vector>

#include "gear/matrix.hpp"

// Exact elimination over the rationals. Rows are cleared of denominators
// and reduced with fraction-free (Bareiss) elimination, so every
// intermediate entry is a minor of the scaled input.
namespace gear::exact {

struct Echelon {
  // Integer echelon form of the row-scaled input, rows in pivot order.
  Matrix<mpz_class> form;
  std::vector<std::size_t> pivot_columns;
  // Row permutation applied: form row i came from input row row_order[i].
  std::vector<std::size_t> row_order;
  // Multiplier applied to each input row to make it integral.
  std::vector<mpz_class> row_scale;
  int swap_parity = 1;
};

Echelon fraction_free_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Reduced row echelon form (pivot entries 1, zero above and below).
// Zero rows are kept at the bottom.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_columns = nullptr);

// Exact determinant via fraction-free elimination.
Rational determinant(const RationalMatrix& m);

// Gauss-Jordan inverse. Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace gear::exact
