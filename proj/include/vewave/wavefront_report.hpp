#pragma once

#include <optional>
#include <string>

#include "vewave/greens.hpp"
#include "vewave/volterra.hpp"

namespace vewave {

// g(0+) < inf  <=>  the wavefront carries a jump.  J-based models answer
// through two independent routes (creep-rate mass and extrapolation of
// p g~(p) along p -> inf); a disagreement is reported, never silently
// resolved.
struct JumpCriterionResult {
  enum class Kind { discontinuous, continuous, undetermined };
  Kind kind = Kind::undetermined;
  std::optional<double> g0;
  std::optional<double> g0_rate_route;    // rho c0 J'(0+)/2, J-based only
  std::optional<double> g0_extrap_route;  // limit of p g~(p), J-based only
  std::string note;
};

JumpCriterionResult jump_criterion(const MaterialModel& m);

// Jump height (2 rho)^{-1} e^{-g(0+) r} with the three analytic routes for
// g(0+): the kernel limit, J'(0+)/(2 J0 c0) and -G'(0+)/(2 rho c0^3).
struct JumpAmplitude {
  double value = 0.0;
  double via_g0 = 0.0;
  std::optional<double> via_creep_rate;
  std::optional<double> via_relaxation;
  double max_route_discrepancy = 0.0;  // relative, over available routes
};

// Throws std::domain_error when the model is continuous at the wavefront.
JumpAmplitude jump_amplitude(const MaterialModel& m, double r);

struct PhasePoint {
  double tau = 0.0;
  double ratio = 0.0;  // H(tau, r) e^{g(tau) r}
  bool ok = true;
};

// Trace of H(tau,r) e^{g(tau) r} along a decreasing tau sequence; trend
// assessment belongs to the caller.
std::vector<PhasePoint> asymptotic_phase_ratio(const AttenuationKernel& k,
                                               double r,
                                               std::span<const double> taus);

struct BoundCheck {
  enum class Status { checked, refused };
  Status status = Status::checked;
  double max_violation = 0.0;            // max over grid of H e^{g r} - 1, clipped at 0
  std::optional<double> max_violation_displayed;  // log models: H (1/(a tau)+A)^{b r} - 1
  double worst_tau = 0.0, worst_r = 0.0;
  double hypothesis_failing_tau = 0.0;   // set when refused
  std::string diagnostic;
};

// Verifies H(tau, r) <= e^{-g(tau) r} on the grid.  The hypothesis that
// -t g'(t) is non-increasing is tested first by finite differences on a
// geometric grid; models that fail it are refused with the failing abscissa.
BoundCheck upper_bound_check(const AttenuationKernel& k,
                             std::span<const double> r_grid,
                             std::span<const double> tau_grid);

struct ExponentFit {
  double exponent = 0.0;
  double intercept = 0.0;
  bool ok = false;
  std::string error;
};

// Least-squares slope of ln H against ln tau over a near-wavefront window;
// for g(t) = b ln(1/(a t) + A) the wavefront singularity weakens stepwise
// with exponent r b.
ExponentFit regularization_exponent(const AttenuationKernel& k, double r,
                                    std::span<const double> tau_window);

struct SlowVarPoint {
  double p = 0.0;
  double lambda = 0.0;
  double deviation = 0.0;  // | l(lambda p)/l(p) - 1 |, l = exp(-p g~(p) r)
};

std::vector<SlowVarPoint> slowly_varying_check(const AttenuationKernel& k,
                                               std::span<const double> lambdas,
                                               std::span<const double> p_grid,
                                               double r = 1.0);

// Signed max over the grid of g(t) - rho c0 J'(t)/2 (must stay <= 0 for
// Bernstein creep laws).
double g_vs_creep_rate_check(const MaterialModel& m,
                             std::span<const double> t_grid);

struct WavefrontReport {
  std::string model_label;
  double r = 1.0;
  JumpCriterionResult criterion;
  std::optional<JumpAmplitude> amplitude;
  std::optional<BoundCheck> bound;
  std::vector<PhasePoint> phase_trace;
  std::optional<ExponentFit> regularization;

  std::string to_text() const;
  std::string to_json() const;
};

WavefrontReport make_wavefront_report(const MaterialModel& m, double r);

}  // namespace vewave
