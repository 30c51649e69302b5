#include <doctest.h>

#include <random>

#include "gear/exact.hpp"
#include "gear/kernels.hpp"
#include "gear/rational.hpp"
#include "gear/trees.hpp"

using namespace gear;

namespace {

WeightedTree path3(Rational w1 = 1, Rational w2 = 1) { return {3, {{1, 2, w1}, {2, 3, w2}}}; }
WeightedTree star4() { return {4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}}}; }

}  // namespace

TEST_CASE("tree distances") {
  CHECK(tree_distance(path3()) == RationalMatrix{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(tree_distance(star4())(1, 2) == 2);
  CHECK(tree_distance(path3(1, 2)) == RationalMatrix{{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  CHECK(tree_tau(path3()) == RationalVector{1, 0, 1});
}

TEST_CASE("tree validation") {
  CHECK_THROWS(validate_tree({3, {{1, 2, 1}, {1, 2, 1}}}));            // cycle-free but disconnected
  CHECK_THROWS(validate_tree({3, {{1, 2, 1}}}));                       // wrong edge count
  CHECK_THROWS(validate_tree({2, {{1, 3, 1}}}));                       // vertex out of range
  CHECK_THROWS(validate_tree({2, {{1, 2, 0}}}));                       // non-positive weight
  CHECK_NOTHROW(validate_tree(star4()));
}

TEST_CASE("Graham-Lovasz inverse") {
  const WeightedTree p = path3();
  CHECK(tree_distance(p) * graham_lovasz_inverse(p) == RationalMatrix::identity(3));
  const RationalMatrix s = graham_lovasz_inverse(star4());
  CHECK(s(0, 0) == make_rational(-4, 3));
  CHECK(s == exact::inverse(tree_distance(star4())));
  CHECK_THROWS(graham_lovasz_inverse(path3(1, 2)));
}

TEST_CASE("weighted inverse") {
  const WeightedTree p = path3(1, 2);
  CHECK(tree_distance(p) * weighted_tree_inverse(p) == RationalMatrix::identity(3));
  CHECK(weighted_tree_inverse(star4()) == graham_lovasz_inverse(star4()));
}

TEST_CASE("Graham-Pollak determinant") {
  CHECK(graham_pollak_det(path3()) == 4);
  CHECK(graham_pollak_det({2, {{1, 2, 1}}}) == -1);
  CHECK(graham_pollak_formula(3) == 4);
}

TEST_CASE("random trees") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    const int m = 2 + i % 11;
    const WeightedTree t = random_tree(m, rng);
    CHECK(t.unit_weights());
    const RationalMatrix d = tree_distance(t);
    CHECK(d * graham_lovasz_inverse(t) == RationalMatrix::identity(m));
    CHECK(exact::determinant(d) == graham_pollak_formula(m));
    CHECK(graham_pollak_det(t) == graham_pollak_formula(m));
  }
  for (int i = 0; i < 20; ++i) {
    const int m = 2 + i % 9;
    const WeightedTree t = random_weighted_tree(m, rng);
    CHECK(tree_distance(t) * weighted_tree_inverse(t) == RationalMatrix::identity(m));
  }
}

TEST_CASE("random trees are reproducible") {
  std::mt19937_64 a(9), b(9);
  const WeightedTree x = random_weighted_tree(10, a), y = random_weighted_tree(10, b);
  CHECK(tree_distance(x) == tree_distance(y));
}
