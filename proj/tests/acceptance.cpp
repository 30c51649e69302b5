// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gear/edm.hpp"
#include "gear/exact.hpp"
#include "gear/graph.hpp"
#include "gear/jacobi.hpp"
#include "gear/kernels.hpp"
#include "gear/laplacian.hpp"
#include "gear/pinv.hpp"
#include "gear/rational.hpp"
#include "gear/spectral.hpp"
#include "gear/trees.hpp"
#include "golden.hpp"

using namespace gear;

namespace {

// Tolerances and limits, fixed here rather than taken from the command line.
constexpr double kGoldenTol = 1e-12;
constexpr double kOracleTol = 1e-9;
constexpr double kRowSumTol = 1e-10;
constexpr double kPsdTol = 1e-9;
constexpr double kEigenGapTol = 1e-8;
constexpr double kResidualTol = 1e-9;
constexpr double kParityTol = 1e-12;
constexpr double kDeltaTol = 1e-9;
constexpr double kGoldenSeconds = 1.0;
constexpr double kSweepSeconds = 60.0;
constexpr std::uint64_t kTreeSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

RationalMatrix gear_d(int n) { return to_rational(gear_distance_closed(n)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome golden_g5() {
  const auto t0 = std::chrono::steady_clock::now();
  const RationalMatrix oracle = rational_pinv(gear_d(5));
  const bool exact = oracle == golden::g5_pinv() && oracle(0, 0) == make_rational(-35, 162) &&
                     oracle(0, 5) == make_rational(8, 81);
  const double diff = max_abs_diff(gear_pinv_formula(5), to_float(golden::g5_pinv()));
  const double secs = seconds_since(t0);
  return {exact && diff <= kGoldenTol && secs < kGoldenSeconds,
          std::string(exact ? "exact match" : "exact MISMATCH") + fmt(", formula diff %.3g, %.3fs", diff, secs)};
}

Outcome golden_g6() {
  const auto t0 = std::chrono::steady_clock::now();
  const double diff = max_abs_diff(gear_pinv_formula(6), to_float(golden::g6_pinv()));
  // The printed illustration vector has +1/10 in the first slot; D^+ 1 gives -1/10.
  const RationalVector u = u_vector(6);
  const bool sign = u[0] == make_rational(-1, 10) && u[0] != make_rational(1, 10);
  const double secs = seconds_since(t0);
  return {diff <= kGoldenTol && sign && secs < kGoldenSeconds,
          fmt("formula diff %.3g, u(1) = -1/10 asserted, %.3fs", diff, secs)};
}

Outcome oracle_sweep() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (int n = 4; n <= 30; ++n)
    worst = std::max(worst, max_abs_diff(gear_pinv_formula(n), to_float(rational_pinv(gear_d(n)))));
  const double secs = seconds_since(t0);
  return {worst <= kOracleTol && secs < kSweepSeconds, fmt("n=4..30, max diff %.3g, %.2fs", worst, secs)};
}

Outcome laplacian_identity() {
  double worst = 0;
  for (int n = 4; n <= 30; ++n)
    worst = std::max(worst, max_abs_diff(special_laplacian(n), to_float(rational_pinv(gram_from_edm(gear_d(n))))));
  return {worst <= kOracleTol, fmt("n=4..30, max diff %.3g", worst)};
}

Outcome laplacian_properties() {
  double row = 0, min_eig = 0;
  bool rank_ok = true;
  for (int n = 4; n <= 30; ++n) {
    const FloatMatrix l = special_laplacian(n);
    row = std::max(row, max_abs(std::span<const double>(row_sums(l))));
    const auto eig = symmetric_eigen(l);
    min_eig = std::min(min_eig, eig.values.front());
    rank_ok = rank_ok && numerical_rank(eig.values) == static_cast<std::size_t>(n - 1);
  }
  return {row <= kRowSumTol && min_eig >= -kPsdTol && rank_ok,
          fmt("max row sum %.3g, min eigenvalue %.3g", row, min_eig) + (rank_ok ? ", rank n-1" : ", RANK MISMATCH")};
}

Outcome spectrum() {
  double gap = 0, residual = 0;
  for (int n = 4; n <= 40; ++n) {
    const SpectrumReport r = spectrum_report(n);
    gap = std::max(gap, r.max_eigenvalue_gap);
    residual = std::max({residual, r.max_lambda_residual, r.max_theta_residual});
  }
  return {gap <= kEigenGapTol && residual <= kResidualTol, fmt("n=4..40, max gap %.3g, max residual %.3g", gap, residual)};
}

Outcome null_space() {
  bool ok = true;
  for (int n = 4; n <= 40; ++n) {
    const IntegerMatrix d = gear_distance_closed(n);
    for (const auto& f : null_basis(n))
      for (auto x : d * std::span<const std::int64_t>(f)) ok = ok && x == 0;
    const RationalMatrix p = rational_pinv(to_rational(d));
    Rational total = 0;
    for (const auto& x : p.data()) total += x;
    ok = ok && total == make_rational(2, n - 1);
  }
  return {ok, "n=4..40, D f = 0 and 1'D^+1 = 2/(n-1) exactly"};
}

Outcome parity_symmetry() {
  double sym = 0, delta = 0;
  for (int n = 4; n <= 30; ++n) {
    const GearSpectrum g = gear_spectrum(n);
    const std::size_t order = static_cast<std::size_t>(2 * n - 1);
    FloatMatrix deltas(order, order), half(order, order);
    for (int k = 1; k <= n - 2; ++k) {
      const ComplexVector& q = g.q[k - 1];
      double norm = 0;
      for (const auto& z : q) norm += std::norm(z);
      for (std::size_t r = 0; r < order; ++r)
        for (std::size_t s = 0; s < order; ++s)
          deltas(r, s) += -2.0 / g.theta[k - 1] * (q[r] * std::conj(q[s])).real() / norm;
      if (2 * k != n - 1) sym = std::max(sym, max_abs_diff(b_matrix(n, k), b_matrix(n, n - 1 - k)));
    }
    for (int k = 1; 2 * k < n - 1; ++k) half = half + b_matrix(n, k);
    if (n % 2 == 1) half = half + to_float(h_matrix(n));  // alternating eigenvector term
    delta = std::max(delta, max_abs_diff(deltas, half));
  }
  return {sym <= kParityTol && delta <= kDeltaTol, fmt("max |B_k - B_{n-1-k}| %.3g, max delta-sum diff %.3g", sym, delta)};
}

Outcome trees() {
  std::mt19937_64 rng(kTreeSeed);
  int ok = 0;
  for (int i = 0; i < 20; ++i) {
    const int m = 2 + i % 11;
    const WeightedTree t = random_tree(m, rng);
    const RationalMatrix d = tree_distance(t);
    if (d * graham_lovasz_inverse(t) == RationalMatrix::identity(m) &&
        exact::determinant(d) == graham_pollak_formula(m))
      ++ok;
  }
  for (int i = 0; i < 20; ++i) {
    const int m = 2 + i % 9;
    const WeightedTree t = random_weighted_tree(m, rng);
    if (tree_distance(t) * weighted_tree_inverse(t) == RationalMatrix::identity(m)) ++ok;
  }
  return {ok == 40, std::to_string(ok) + "/40 trees exact"};
}

Outcome edm() {
  bool all_edm = true;
  double worst = 0;
  const auto check = [&](const RationalMatrix& d) {
    all_edm = all_edm && is_edm(d, kPsdTol).is_edm;
    worst = std::max(worst, max_abs_diff(balaji_bapat_pinv(d), to_float(rational_pinv(d))));
  };
  for (int n = 4; n <= 30; ++n) check(gear_d(n));
  std::mt19937_64 rng(kTreeSeed);
  for (int i = 0; i < 20; ++i) check(tree_distance(random_tree(2 + i % 11, rng)));
  return {all_edm && worst <= kOracleTol, fmt("gear n=4..30 + 20 trees, max diff %.3g", worst)};
}

Outcome distances() {
  for (int n = 4; n <= 60; ++n)
    if (!(bfs_distances(build_gear(n)) == gear_distance_closed(n))) return {false, "mismatch at n=" + std::to_string(n)};
  return {true, "n=4..60 exact"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"golden G_5 inverse", golden_g5},
      {"golden G_6 inverse", golden_g6},
      {"formula vs oracle sweep", oracle_sweep},
      {"Laplacian equals Gram pseudoinverse", laplacian_identity},
      {"Laplacian row sums, PSD, rank", laplacian_properties},
      {"analytic spectrum", spectrum},
      {"null space and beta", null_space},
      {"parity symmetry of B_k", parity_symmetry},
      {"tree inverse and determinant", trees},
      {"EDM certification and K4 route", edm},
      {"BFS vs closed-form distances", distances},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("AC%-2d %s  %s (%s)\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
