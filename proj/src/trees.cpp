#include "gear/trees.hpp"

#include <stdexcept>
#include <string>

#include "gear/exact.hpp"
#include "gear/rational.hpp"

namespace gear {

namespace {

struct Arc {
  int to;
  Rational weight;
};

std::vector<std::vector<Arc>> arcs(const WeightedTree& t) {
  std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(t.m) + 1);
  for (const auto& e : t.edges) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  return adj;
}

std::vector<int> degrees(const WeightedTree& t) {
  std::vector<int> deg(static_cast<std::size_t>(t.m) + 1, 0);
  for (const auto& e : t.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

}  // namespace

bool WeightedTree::unit_weights() const {
  for (const auto& e : edges)
    if (e.weight != 1) return false;
  return true;
}

void validate_tree(const WeightedTree& t) {
  if (t.m < 1) throw std::invalid_argument("tree must have at least one vertex");
  if (static_cast<int>(t.edges.size()) != t.m - 1)
    throw std::invalid_argument("tree on " + std::to_string(t.m) + " vertices needs " +
                                std::to_string(t.m - 1) + " edges");
  // Union-find; a cycle among m-1 edges means the graph is disconnected.
  std::vector<int> parent(static_cast<std::size_t>(t.m) + 1);
  for (int i = 0; i <= t.m; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    if (e.u < 1 || e.u > t.m || e.v < 1 || e.v > t.m || e.u == e.v)
      throw std::invalid_argument("tree edge has an invalid endpoint");
    if (sgn(e.weight) <= 0) throw std::invalid_argument("tree edge weights must be positive");
    const int a = find(e.u), b = find(e.v);
    if (a == b) throw std::invalid_argument("edges contain a cycle");
    parent[a] = b;
  }
}

RationalMatrix tree_distance(const WeightedTree& t) {
  validate_tree(t);
  const auto adj = arcs(t);
  const auto m = static_cast<std::size_t>(t.m);
  RationalMatrix d(m, m);
  for (int src = 1; src <= t.m; ++src) {
    std::vector<bool> seen(m + 1, false);
    std::vector<int> stack{src};
    seen[src] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& a : adj[x]) {
        if (seen[a.to]) continue;
        seen[a.to] = true;
        d(src - 1, a.to - 1) = d(src - 1, x - 1) + a.weight;
        stack.push_back(a.to);
      }
    }
  }
  return d;
}

RationalVector tree_tau(const WeightedTree& t) {
  const auto deg = degrees(t);
  RationalVector tau(static_cast<std::size_t>(t.m));
  for (int i = 1; i <= t.m; ++i) tau[i - 1] = 2 - deg[i];
  return tau;
}

RationalMatrix weighted_tree_inverse(const WeightedTree& t) {
  validate_tree(t);
  if (t.m < 2) throw std::invalid_argument("inverse formula needs at least two vertices");
  const auto m = static_cast<std::size_t>(t.m);
  RationalMatrix lap(m, m);
  Rational total_weight = 0;
  for (const auto& e : t.edges) {
    const Rational conductance = 1 / e.weight;
    lap(e.u - 1, e.u - 1) += conductance;
    lap(e.v - 1, e.v - 1) += conductance;
    lap(e.u - 1, e.v - 1) -= conductance;
    lap(e.v - 1, e.u - 1) -= conductance;
    total_weight += e.weight;
  }
  const RationalVector tau = tree_tau(t);
  const Rational coeff = 1 / (2 * total_weight);
  RationalMatrix inv(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) inv(r, c) = -lap(r, c) / 2 + coeff * tau[r] * tau[c];
  return inv;
}

RationalMatrix graham_lovasz_inverse(const WeightedTree& t) {
  if (!t.unit_weights())
    throw std::invalid_argument("graham_lovasz_inverse needs unit weights; use weighted_tree_inverse");
  return weighted_tree_inverse(t);
}

Rational graham_pollak_formula(int m) {
  if (m < 2) throw std::invalid_argument("graham_pollak_formula: m must be >= 2");
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(m - 2));
  Rational value(mpz_class(power * (m - 1)));
  return (m - 1) % 2 == 0 ? value : Rational(-value);
}

Rational graham_pollak_det(const WeightedTree& t) {
  if (!t.unit_weights()) throw std::invalid_argument("graham_pollak_det needs unit weights");
  const Rational det = exact::determinant(tree_distance(t));
  if (t.m >= 2 && det != graham_pollak_formula(t.m))
    throw std::domain_error("determinant " + to_string(det) + " disagrees with (-1)^{m-1}(m-1)2^{m-2}");
  return det;
}

WeightedTree random_tree(int m, std::mt19937_64& rng) {
  if (m < 1) throw std::invalid_argument("random_tree: m must be >= 1");
  WeightedTree t{m, {}};
  for (int v = 2; v <= m; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    t.edges.push_back({pick(rng), v, Rational(1)});
  }
  return t;
}

WeightedTree random_weighted_tree(int m, std::mt19937_64& rng) {
  static const Rational kWeights[] = {make_rational(1, 2), Rational(1), Rational(2), Rational(3)};
  WeightedTree t = random_tree(m, rng);
  std::uniform_int_distribution<int> pick(0, 3);
  for (auto& e : t.edges) e.weight = kWeights[pick(rng)];
  return t;
}

}  // namespace gear
