#include "vewave/cm_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace vewave {

std::vector<double> geomspace(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
    throw std::invalid_argument("geomspace: need 0 < lo < hi, n >= 2");
  std::vector<double> g(n);
  double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo * std::exp(i * step);
  return g;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("linspace: n >= 2");
  std::vector<double> g(n);
  double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo + i * step;
  return g;
}

CmCheckReport check_cm(const std::function<double(double)>& f,
                       std::span<const double> grid, int order) {
  if (order < 1) throw std::invalid_argument("check_cm: order >= 1");
  if (static_cast<int>(grid.size()) < order + 1)
    throw std::invalid_argument("check_cm: grid too small for requested order");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("check_cm: grid must be strictly increasing");

  std::vector<double> fv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) fv[i] = f(grid[i]);

  CmCheckReport rep;
  rep.max_order = order;
  rep.violation_by_order.assign(order, 0.0);

  for (int n = 1; n <= order; ++n) {
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i0 = 0; i0 + n < grid.size(); ++i0) {
      // divided difference via explicit weights w_j = 1/prod(x_j - x_k)
      double dd = 0.0, scale = 0.0;
      for (int j = 0; j <= n; ++j) {
        double w = 1.0;
        for (int k = 0; k <= n; ++k)
          if (k != j) w /= grid[i0 + j] - grid[i0 + k];
        dd += w * fv[i0 + j];
        scale += std::abs(w * fv[i0 + j]);
      }
      if (scale == 0.0) continue;
      double viol = std::max(0.0, -sign * dd) / scale;
      if (viol > rep.violation_by_order[n - 1])
        rep.violation_by_order[n - 1] = viol;
      if (viol > rep.worst_violation) {
        rep.worst_violation = viol;
        rep.worst_order = n;
      }
    }
  }
  return rep;
}

CmCheckReport check_bernstein_pair(const std::function<double(double)>& f,
                                   std::span<const double> grid, int order) {
  auto xf = [&f](double x) { return x * f(x); };
  return check_cm(xf, grid, order);
}

}  // namespace vewave
