#include "vewave/volterra.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

namespace vewave {

namespace {

// 7-point Gauss-Legendre on [0,1]
constexpr int kGaussN = 7;
constexpr double kGaussX[kGaussN] = {
    0.02544604382862074, 0.12923440720030277, 0.29707742431130141,
    0.50000000000000000, 0.70292257568869859, 0.87076559279969723,
    0.97455395617137926};
constexpr double kGaussW[kGaussN] = {
    0.06474248308443485, 0.13985269574463833, 0.19091502525255947,
    0.20897959183673469, 0.19091502525255947, 0.13985269574463833,
    0.06474248308443485};

}  // namespace

RelaxationModulus solve_duality(const CreepCompliance& J,
                                const DualityOptions& opts) {
  if (!(J.J0 > 0.0))
    throw std::invalid_argument(
        "solve_duality: J0 = 0 (unbounded G at 0) is unsupported");
  if (opts.steps < 2 || !(opts.t_max > 0.0))
    throw std::invalid_argument("solve_duality: need steps >= 2, t_max > 0");

  const std::size_t n = opts.steps;
  const double h = opts.t_max / static_cast<double>(n);

  // Product-integration weights from exact moments of the creep rate:
  //   M0_j = integral J' over panel j,  M1_j = integral u J'(u) du.
  std::vector<double> P(n), Q(n);
  {
    std::vector<double> F(n + 1), FF(n + 1);
    F[0] = 0.0;
    FF[0] = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      double tj = h * static_cast<double>(j);
      F[j] = J.rate.integral0(tj);
      FF[j] = J.rate.integral00(tj);
    }
    for (std::size_t j = 0; j < n; ++j) {
      double t0 = h * static_cast<double>(j), t1 = t0 + h;
      double M0 = F[j + 1] - F[j];
      double M1 = t1 * F[j + 1] - t0 * F[j] - (FF[j + 1] - FF[j]);
      P[j] = (t1 * M0 - M1) / h;
      Q[j] = (M1 - t0 * M0) / h;
    }
  }

  RelaxationModulus out;
  out.G0 = 1.0 / J.J0;
  out.t.resize(n + 1);
  out.G.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.t[i] = h * static_cast<double>(i);
  out.G[0] = out.G0;

  const double diag = J.J0 + P[0];
  for (std::size_t i = 1; i <= n; ++i) {
    double known = Q[0] * out.G[i - 1];
    const double* G = out.G.data();
    if (opts.exec == Exec::parallel && i > 512) {
#pragma omp parallel for reduction(+ : known) schedule(static)
      for (std::size_t j = 1; j < i; ++j)
        known += P[j] * G[i - j] + Q[j] * G[i - j - 1];
    } else {
      for (std::size_t j = 1; j < i; ++j)
        known += P[j] * G[i - j] + Q[j] * G[i - j - 1];
    }
    out.G[i] = (1.0 - known) / diag;
  }
  return out;
}

double duality_residual(const CreepCompliance& Jc, const RelaxationModulus& R,
                        Exec exec) {
  const std::size_t n = R.G.size() - 1;
  const double h = R.step();

  // J evaluated at the shifted Gauss abscissae h(m - xi_q), shared by all i.
  std::vector<double> Jg(n * kGaussN);
  for (std::size_t m = 1; m <= n; ++m)
    for (int q = 0; q < kGaussN; ++q)
      Jg[(m - 1) * kGaussN + q] =
          Jc.J(h * (static_cast<double>(m) - kGaussX[q]));

  // subsample the check points; the convolution is O(n) per point
  std::vector<std::size_t> idx;
  std::size_t stride = std::max<std::size_t>(1, n / 192);
  for (std::size_t i = 1; i <= n; i += stride) idx.push_back(i);
  if (idx.back() != n) idx.push_back(n);

  double worst = 0.0;
  const long m_count = static_cast<long>(idx.size());
#pragma omp parallel for reduction(max : worst) schedule(dynamic) \
    if (exec == Exec::parallel)
  for (long ii = 0; ii < m_count; ++ii) {
    std::size_t i = idx[ii];
    double conv = 0.0;
    for (std::size_t k = 0; k < i; ++k) {
      const double* row = &Jg[(i - k - 1) * kGaussN];
      double panel = 0.0;
      for (int q = 0; q < kGaussN; ++q) {
        double Glin = R.G[k] * (1.0 - kGaussX[q]) + R.G[k + 1] * kGaussX[q];
        panel += kGaussW[q] * Glin * row[q];
      }
      conv += panel;
    }
    conv *= h;
    double ti = R.t[i];
    double res = std::abs(conv - ti) / std::max(ti, h);
    if (res > worst) worst = res;
  }
  return worst;
}

double g_prime_at_zero(const RelaxationModulus& R) {
  if (R.G.size() < 5)
    throw std::invalid_argument("g_prime_at_zero: need at least 5 samples");
  double h = R.step();
  return (-25.0 * R.G[0] + 48.0 * R.G[1] - 36.0 * R.G[2] + 16.0 * R.G[3] -
          3.0 * R.G[4]) /
         (12.0 * h);
}

}  // namespace vewave
