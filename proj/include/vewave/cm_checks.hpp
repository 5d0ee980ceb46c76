#pragma once

#include <functional>
#include <span>
#include <vector>

namespace vewave {

struct CmCheckReport {
  int max_order = 0;
  // worst relative sign violation seen at each order 1..max_order
  std::vector<double> violation_by_order;
  double worst_violation = 0.0;
  int worst_order = 0;
  bool pass(double threshold = 1e-7) const { return worst_violation <= threshold; }
};

// Divided-difference test for complete monotonicity: on every sliding window
// of the grid, the order-n divided difference must carry the sign (-1)^n.
// Violations are reported relative to the cancellation scale sum |w_j f_j| of
// the same difference, which keeps high orders meaningful despite their
// conditioning.
CmCheckReport check_cm(const std::function<double(double)>& f,
                       std::span<const double> grid, int order);

// Verifies numerically that x -> x f(x) is completely monotone; by the
// Bernstein-type equivalence this holds exactly when f is the Laplace
// transform of a non-negative non-decreasing function.
CmCheckReport check_bernstein_pair(const std::function<double(double)>& f,
                                   std::span<const double> grid, int order = 4);

std::vector<double> geomspace(double lo, double hi, int n);
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace vewave
