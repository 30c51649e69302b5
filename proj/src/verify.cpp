#include "gear/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "gear/edm.hpp"
#include "gear/graph.hpp"
#include "gear/jacobi.hpp"
#include "gear/kernels.hpp"
#include "gear/laplacian.hpp"
#include "gear/pinv.hpp"
#include "gear/spectral.hpp"

namespace gear {

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

struct Shared {
  int n;
  double tol;
  IntegerMatrix d_int;
  RationalMatrix d;
  RationalMatrix d_pinv;
  FloatMatrix laplacian;
};

CheckResult distance_equality(const Shared& s) {
  const IntegerMatrix bfs = bfs_distances(build_gear(s.n));
  double mismatches = 0;
  for (std::size_t i = 0; i < bfs.data().size(); ++i)
    if (bfs.data()[i] != s.d_int.data()[i]) ++mismatches;
  return {"distance_equality", mismatches == 0, mismatches};
}

CheckResult spectrum(const Shared& s) {
  const SpectrumReport rep = spectrum_report(s.n);
  const double worst = std::max({rep.max_eigenvalue_gap, rep.max_lambda_residual, rep.max_theta_residual});
  const bool ok = worst <= s.tol && rep.numerical_rank == static_cast<std::size_t>(s.n);
  return {"spectrum", ok, worst};
}

CheckResult null_space(const Shared& s) {
  double worst = 0;
  for (const auto& f : null_basis(s.n)) {
    const IntegerVector df = s.d_int * std::span<const std::int64_t>(f);
    for (auto x : df) worst = std::max(worst, std::abs(static_cast<double>(x)));
  }
  return {"null_space", worst == 0, worst};
}

CheckResult laplacian_row_sums(const Shared& s) {
  const double worst = max_abs(std::span<const double>(row_sums(s.laplacian)));
  return {"laplacian_row_sums", worst <= s.tol, worst};
}

CheckResult laplacian_psd(const Shared& s) {
  const double min_eig = symmetric_eigen(s.laplacian).values.front();
  return {"laplacian_psd", min_eig >= -s.tol, min_eig};
}

CheckResult laplacian_rank(const Shared& s) {
  const std::size_t r = numerical_rank(symmetric_eigen(s.laplacian).values);
  const double off = std::abs(static_cast<double>(r) - (s.n - 1));
  return {"laplacian_rank", off == 0, off};
}

CheckResult laplacian_gram_pinv(const Shared& s) {
  const FloatMatrix oracle = to_float(rational_pinv(gram_from_edm(s.d)));
  const double diff = max_abs_diff(oracle, s.laplacian);
  return {"laplacian_gram_pinv", diff <= s.tol, diff};
}

// Formula against the exact oracle; also pins D^+ 1 = u and 1'D^+ 1 = beta
// exactly.
CheckResult formula_vs_oracle(const Shared& s) {
  const FloatMatrix formula = gear_pinv_formula(s.n);
  const double diff = max_abs_diff(formula, to_float(s.d_pinv));
  const RationalVector one(s.d.rows(), Rational(1));
  const RationalVector d_pinv_one = s.d_pinv * std::span<const Rational>(one);
  Rational total = 0;
  for (const auto& x : d_pinv_one) total += x;
  const bool exact_ok = d_pinv_one == u_vector(s.n) && total == beta(s.n);
  return {"formula_vs_oracle", diff <= s.tol && exact_ok, diff};
}

CheckResult penrose(const Shared& s) {
  const PenroseReport rep = penrose_check(s.d, s.d_pinv);
  return {"penrose", rep.all(), rep.max_residual()};
}

CheckResult edm(const Shared& s) {
  const EdmReport rep = is_edm(s.d, s.tol);
  const double diff = max_abs_diff(balaji_bapat_pinv(s.d), to_float(s.d_pinv));
  return {"edm", rep.is_edm && diff <= s.tol, diff};
}

using CheckFn = CheckResult (*)(const Shared&);
constexpr CheckFn kChecks[] = {distance_equality, spectrum,          null_space,
                               laplacian_row_sums, laplacian_psd,    laplacian_rank,
                               laplacian_gram_pinv, formula_vs_oracle, penrose,
                               edm};
constexpr const char* kCheckNames[] = {"distance_equality",  "spectrum",          "null_space",
                                       "laplacian_row_sums", "laplacian_psd",     "laplacian_rank",
                                       "laplacian_gram_pinv", "formula_vs_oracle", "penrose",
                                       "edm"};

}  // namespace

VerifyReport verify_gear(int n, double tol) {
  require_wheel_size(n);
  Shared s{n, tol, gear_distance_closed(n), {}, {}, {}};
  s.d = to_rational(s.d_int);
  s.d_pinv = rational_pinv(s.d);
  s.laplacian = special_laplacian(n);

  constexpr std::size_t count = std::size(kChecks);
  VerifyReport report{n, tol, std::vector<CheckResult>(count)};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      report.checks[i] = kChecks[i](s);
    } catch (const std::exception&) {
      report.checks[i] = {kCheckNames[i], false, std::nan("")};
    }
  }
  return report;
}

}  // namespace gear
