#include "vewave/greens.hpp"

#include <cmath>
#include <stdexcept>

namespace vewave {

namespace {

// 6-point Gauss-Legendre on [0,1]
constexpr int kGN = 6;
constexpr double kGX[kGN] = {0.03376524289842399, 0.16939530676686775,
                             0.38069040695840155, 0.61930959304159845,
                             0.83060469323313225, 0.96623475710157601};
constexpr double kGW[kGN] = {0.08566224618958517, 0.18038078652406930,
                             0.23395696728634552, 0.23395696728634552,
                             0.18038078652406930, 0.08566224618958517};

// Sharp g(0+) used for jump subtraction: exact creep-route value for J-based
// models, term-wise limit for direct ones.
Limit sharp_g0(const AttenuationKernel& k) {
  if (k.j_based()) {
    Limit rate = k.model().creep().rate.limit_at_zero();
    if (rate.kind == Limit::Kind::finite)
      rate.value *= 0.5 * k.rho() * k.c0();
    return rate;
  }
  return k.g_fn().limit_at_zero();
}

LogTransform kernel_transform(const AttenuationKernel& k, double r) {
  return LogTransform([&k, r](cplx p) { return -r * k.p_g_tilde(p) - std::log(p); });
}

LogTransform kernel_transform_jump_subtracted(const AttenuationKernel& k,
                                              double r, double g0) {
  return LogTransform([&k, r, g0](cplx p) {
    cplx delta = g0 - k.p_g_tilde(p);
    return -g0 * r + std::log(expm1c(r * delta)) - std::log(p);
  });
}

LogTransform direct_transform(const AttenuationKernel& k, double r) {
  double two_rho = 2.0 * k.rho();
  double c0 = k.c0();
  return LogTransform([&k, r, c0, two_rho](cplx p) {
    cplx pg = k.p_g_tilde(p);
    return std::log(1.0 + c0 * pg / p) - std::log(two_rho) - std::log(p) -
           r * pg;
  });
}

LogTransform direct_transform_jump_subtracted(const AttenuationKernel& k,
                                              double r, double g0) {
  double two_rho = 2.0 * k.rho();
  double c0 = k.c0();
  return LogTransform([&k, r, g0, c0, two_rho](cplx p) {
    cplx pg = k.p_g_tilde(p);
    cplx delta = g0 - pg;
    cplx inner = expm1c(r * delta) + (c0 * pg / p) * std::exp(r * delta);
    return -g0 * r + std::log(inner) - std::log(two_rho) - std::log(p);
  });
}

}  // namespace

Inverted kernel_H_scaled(const AttenuationKernel& k, double r, double tau,
                         const InversionOptions& opts) {
  if (!(tau > 0.0))
    throw std::domain_error("kernel_H_scaled: tau > 0 required");
  if (r < 0.0) throw std::domain_error("kernel_H_scaled: r >= 0 required");
  if (r == 0.0 || k.g_fn().empty()) return Inverted{0.0, 1.0, true};
  Limit g0 = sharp_g0(k);
  if (g0.kind == Limit::Kind::finite) {
    Inverted rem = invert_laplace_scaled(
        kernel_transform_jump_subtracted(k, r, g0.value), tau, opts);
    double jump = std::exp(-g0.value * r);
    Inverted out;
    out.log_scale = 0.0;
    out.mantissa = jump + rem.value();
    out.ok = rem.ok;
    return out;
  }
  return invert_laplace_scaled(kernel_transform(k, r), tau, opts);
}

WavefrontKernel wavefront_kernel(const AttenuationKernel& k, double r,
                                 std::span<const double> taus,
                                 const InversionOptions& opts) {
  WavefrontKernel out;
  out.r = r;
  out.tau.assign(taus.begin(), taus.end());
  out.H.resize(taus.size());
  out.ok.resize(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    Inverted v = kernel_H_scaled(k, r, taus[i], opts);
    out.H[i] = v.value();
    out.ok[i] = v.ok ? 1 : 0;
  }
  return out;
}

double f_integral(const AttenuationKernel& k, double t) {
  if (t == 0.0) return 0.0;
  if (!(t > 0.0)) throw std::domain_error("f_integral: t >= 0 required");
  return k.f(t);
}

namespace {

// (g * H(., r))(tau) on panels graded toward s = 0 (g may be singular) and
// s = tau (H dies at the wavefront for continuous media).
double convolve_g_H(const AttenuationKernel& k, double r, double tau) {
  InversionOptions conv_opts;
  conv_opts.node_limit = 512;  // absolute accuracy suffices inside the integral

  auto H_at = [&](double s) {
    return kernel_H_scaled(k, r, s, conv_opts).value();
  };

  double total = 0.0;
  // left half [0, tau/2]: geometric toward 0
  {
    double hi = 0.5 * tau;
    double f_tau = k.f(tau);
    int K = 0;
    double lo = hi;
    while (K < 60) {
      lo = hi * std::pow(0.5, K + 1);
      if (k.f(lo) <= 1e-10 * (f_tau + 1e-300)) break;
      ++K;
    }
    for (int j = 0; j <= K; ++j) {
      double b = hi * std::pow(0.5, j);
      double a = (j == K) ? lo : 0.5 * b;
      double acc = 0.0;
      for (int q = 0; q < kGN; ++q) {
        double s = a + (b - a) * kGX[q];
        acc += kGW[q] * k.g(s) * H_at(tau - s);
      }
      total += acc * (b - a);
    }
    // sub-panel tail: H is within [H(tau-lo), H(tau)] there
    total += k.f(lo) * H_at(tau - 0.5 * lo);
  }
  // right half [tau/2, tau]: geometric toward tau, early exit once H underflows
  {
    double g_mid = k.g(0.5 * tau);
    for (int j = 0; j < 60; ++j) {
      double width = 0.5 * tau * std::pow(0.5, j + 1);
      double a = tau - 2.0 * width, b = tau - width;  // panel [a, b]
      double acc = 0.0;
      for (int q = 0; q < kGN; ++q) {
        double s = a + (b - a) * kGX[q];
        acc += kGW[q] * k.g(s) * H_at(tau - s);
      }
      total += acc * (b - a);
      // remaining stretch (b, tau): g <= g(tau/2) there and H decreasing
      double bound = g_mid * H_at(tau - b) * width;
      if (bound <= 1e-12 * (std::abs(total) + 1e-300)) break;
    }
  }
  return total;
}

}  // namespace

GreensValue greens_u(const AttenuationKernel& k, double t, double x) {
  if (!(t > 0.0)) throw std::domain_error("greens_u: t > 0 required");
  double r = std::abs(x);
  double tau = t - r / k.c0();
  GreensValue out;
  if (tau < 0.0) {
    out.flag = FrontFlag::pre_front;
    return out;
  }
  double inv_two_rho = 0.5 / k.rho();
  if (tau == 0.0) {
    out.flag = FrontFlag::at_front;
    Limit g0 = sharp_g0(k);
    out.u = g0.kind == Limit::Kind::finite
                ? inv_two_rho * std::exp(-g0.value * r)
                : 0.0;
    return out;
  }
  double H = kernel_H_scaled(k, r, tau).value();
  double conv = k.g_fn().empty() ? 0.0 : convolve_g_H(k, r, tau);
  out.u = inv_two_rho * (H + k.c0() * conv);
  return out;
}

GreensValue greens_u_direct(const AttenuationKernel& k, double t, double x) {
  if (!(t > 0.0)) throw std::domain_error("greens_u_direct: t > 0 required");
  double r = std::abs(x);
  double tau = t - r / k.c0();
  GreensValue out;
  if (tau < 0.0) {
    out.flag = FrontFlag::pre_front;
    return out;
  }
  double inv_two_rho = 0.5 / k.rho();
  Limit g0 = sharp_g0(k);
  if (tau == 0.0) {
    out.flag = FrontFlag::at_front;
    out.u = g0.kind == Limit::Kind::finite
                ? inv_two_rho * std::exp(-g0.value * r)
                : 0.0;
    return out;
  }
  if (r == 0.0) {
    // transform (1 + c0 g~)/(2 rho p); the convolution identity degenerates
    out.u = inv_two_rho * (1.0 + k.c0() * k.f(t));
    return out;
  }
  if (k.g_fn().empty()) {
    out.u = inv_two_rho;  // lossless medium: plain step
    return out;
  }
  if (g0.kind == Limit::Kind::finite) {
    Inverted rem = invert_laplace_scaled(
        direct_transform_jump_subtracted(k, r, g0.value), tau);
    out.u = inv_two_rho * std::exp(-g0.value * r) + rem.value();
  } else {
    out.u = invert_laplace_scaled(direct_transform(k, r), tau).value();
  }
  return out;
}

GreensValue greens_u(const MaterialModel& m, double t, double x) {
  return greens_u(AttenuationKernel::from(m), t, x);
}

GreensValue greens_u_direct(const MaterialModel& m, double t, double x) {
  return greens_u_direct(AttenuationKernel::from(m), t, x);
}

double f_integral(const MaterialModel& m, double t) {
  return f_integral(AttenuationKernel::from(m), t);
}

}  // namespace vewave
