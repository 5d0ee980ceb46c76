#pragma once

#include <cstdint>
#include <span>

#include "vewave/dispersion.hpp"
#include "vewave/laplace_inversion.hpp"

namespace vewave {

// Leading wavefront factor H(tau, r): inverse Laplace transform of
// exp(-p g~(p) r)/p evaluated at tau = t - r/c0.  Non-decreasing from
// H(0+) = exp(-g(0+) r) (zero when g blows up at 0) to exp(-g(inf) r).
struct WavefrontKernel {
  double r = 0.0;
  std::vector<double> tau;
  std::vector<double> H;
  std::vector<std::uint8_t> ok;
};

// Scaled single-point evaluation; survives tails far below double range.
Inverted kernel_H_scaled(const AttenuationKernel& k, double r, double tau,
                         const InversionOptions& opts = {});

WavefrontKernel wavefront_kernel(const AttenuationKernel& k, double r,
                                 std::span<const double> taus,
                                 const InversionOptions& opts = {});

// f(t) = integral_0^t g(s) ds
double f_integral(const AttenuationKernel& k, double t);

enum class FrontFlag : std::uint8_t { pre_front = 0, at_front = 1, post_front = 2 };

struct GreensValue {
  double u = 0.0;
  FrontFlag flag = FrontFlag::post_front;
};

// Green's function through the wavefront-factor identity
//   u(t, x) = (1/2 rho) [ H(tau, r) + c0 (g * H(., r))(tau) ],
// tau = t - |x|/c0, normalized so the elastic limit is theta(tau)/(2 rho).
// The convolution is integrated on panels graded toward both the
// singularity of g at s = 0 and the wavefront at s = tau.
GreensValue greens_u(const AttenuationKernel& k, double t, double x);

// The same field by one-shot Bromwich inversion of the full integrand
// c0 kappa(p) e^{-kappa(p) r} / (2 rho p^2) with the wavefront shift
// e^{-p r/c0} stripped analytically; the mutual oracle for greens_u.
GreensValue greens_u_direct(const AttenuationKernel& k, double t, double x);

// Model-taking conveniences (J-based models pay a measure extraction per call)
GreensValue greens_u(const MaterialModel& m, double t, double x);
GreensValue greens_u_direct(const MaterialModel& m, double t, double x);
double f_integral(const MaterialModel& m, double t);

}  // namespace vewave
