#pragma once

#include <string>
#include <vector>

namespace vewave {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Module-invariant suite over the built-in catalog (elastic, standard linear
// solid, power-law kernel, logarithmic kernel, single-atom kernel): complete
// monotonicity, measure contracts, duality residuals, the wavenumber
// identity, kernel monotonicity/limits, jump-route agreement, upper bounds
// and the regularization exponents.
VerifySummary run_verification(double tol_scale = 1.0);

}  // namespace vewave
