#include "gear/exact.hpp"

#include <stdexcept>
#include <utility>

#include "gear/kernels.hpp"

namespace gear::exact {

namespace {

mpz_class lcm_of_denominators(std::span<const Rational> row) {
  mpz_class l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace

Echelon fraction_free_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Echelon e;
  e.form = Matrix<mpz_class>(rows, cols);
  e.row_scale.resize(rows);
  e.row_order.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    e.row_order[r] = r;
    e.row_scale[r] = lcm_of_denominators(m.row(r));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m(r, c);
      e.form(r, c) = q.get_num() * (e.row_scale[r] / q.get_den());
    }
  }

  auto& a = e.form;
  mpz_class previous = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Pivot: the candidate with the longest numerator.
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const std::size_t bits = mpz_sizeinbase(a(r, col).get_mpz_t(), 2);
      if (best == rows || bits > best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    if (best != pivot_row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(best, c), a(pivot_row, c));
      std::swap(e.row_order[best], e.row_order[pivot_row]);
      e.swap_parity = -e.swap_parity;
    }
    const mpz_class pivot = a(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      const mpz_class factor = a(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class v = pivot * a(r, c) - factor * a(pivot_row, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(r, c) = std::move(v);
      }
      a(r, col) = 0;
    }
    previous = pivot;
    e.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return e;
}

std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).pivot_columns.size(); }

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivot_columns) {
  const Echelon e = fraction_free_echelon(m);
  const std::size_t r = e.pivot_columns.size();
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& lead = e.form(i, e.pivot_columns[i]);
    for (std::size_t c = e.pivot_columns[i]; c < m.cols(); ++c) {
      if (sgn(e.form(i, c)) == 0) continue;
      Rational q(e.form(i, c), lead);
      q.canonicalize();
      out(i, c) = std::move(q);
    }
  }
  // Back substitution from the last pivot upward.
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivot_columns[i];
    for (std::size_t above = 0; above < i; ++above) {
      const Rational factor = out(above, pc);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) out(above, c) -= factor * out(i, c);
    }
  }
  if (pivot_columns) *pivot_columns = e.pivot_columns;
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  const Echelon e = fraction_free_echelon(m);
  if (e.pivot_columns.size() < n) return Rational(0);
  // Bareiss: the last pivot equals the determinant of the scaled matrix.
  mpz_class scale = 1;
  for (const auto& s : e.row_scale) scale *= s;
  Rational det(e.form(n - 1, n - 1) * e.swap_parity, scale);
  det.canonicalize();
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(work(p, col)) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: matrix is singular");
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(p, c), work(col, c));
        std::swap(inv(p, c), inv(col, c));
      }
    }
    const Rational pivot_inv = 1 / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= pivot_inv;
      inv(col, c) *= pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace gear::exact
