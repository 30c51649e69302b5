#pragma once

#include <string>
#include <vector>

namespace gear {

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct VerifyReport {
  int n = 0;
  double tolerance = 0.0;
  std::vector<CheckResult> checks;  // fixed order, see verify_gear

  bool all_pass() const;
};

// Runs every identity for one wheel size, in this order:
//   distance_equality, spectrum, null_space, laplacian_row_sums,
//   laplacian_psd, laplacian_rank, laplacian_gram_pinv, formula_vs_oracle,
//   penrose, edm.
// Float comparisons use `tol`; exact ones use none. Checks run concurrently
// and land in their fixed slots.
VerifyReport verify_gear(int n, double tol = 1e-9);

}  // namespace gear
