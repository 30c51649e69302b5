#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gear/matrix.hpp"

namespace gear {

struct TreeEdge {
  int u = 0;  // 1-based
  int v = 0;
  Rational weight = 1;
};

struct WeightedTree {
  int m = 0;
  std::vector<TreeEdge> edges;

  bool unit_weights() const;
};

// Throws std::invalid_argument unless the edges form a spanning tree on
// 1..m with positive weights.
void validate_tree(const WeightedTree& t);

// Weighted path lengths, one traversal per source vertex.
RationalMatrix tree_distance(const WeightedTree& t);

// tau_i = 2 - deg(i).
RationalVector tree_tau(const WeightedTree& t);

// D^{-1} = -1/2 L + tau tau' / (2(m-1)) for unit weights.
RationalMatrix graham_lovasz_inverse(const WeightedTree& t);

// D~^{-1} = -1/2 L~ + tau tau' / (2 sum_e w_e), L~ the Laplacian with edge
// conductances 1/w_e.
RationalMatrix weighted_tree_inverse(const WeightedTree& t);

// Determinant of the unit-weight distance matrix by fraction-free
// elimination. Throws std::domain_error if the identity
// det = (-1)^{m-1} (m-1) 2^{m-2} fails.
Rational graham_pollak_det(const WeightedTree& t);

// (-1)^{m-1} (m-1) 2^{m-2}, for m >= 2.
Rational graham_pollak_formula(int m);

// Uniform random attachment: vertex v joins a uniformly chosen vertex < v.
WeightedTree random_tree(int m, std::mt19937_64& rng);

// Same shape distribution, weights drawn from {1/2, 1, 2, 3}.
WeightedTree random_weighted_tree(int m, std::mt19937_64& rng);

}  // namespace gear
