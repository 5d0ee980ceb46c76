#pragma once

#include <memory>
#include <span>

#include "vewave/material.hpp"
#include "vewave/spectral_measure.hpp"

namespace vewave {

// Wavefront speed c0: stored for direct models, 1/sqrt(rho J0) otherwise.
double wavefront_speed(const MaterialModel& m);

// Complex wavenumber kappa(p) for Re p > 0.  Throws std::domain_error on
// Re p <= 0; boundary values are served by extract_density and
// attenuation_dispersion.
cplx kappa(const MaterialModel& m, cplx p);

struct ExtractOptions {
  int window_nodes = 96;        // Chebyshev nodes per support window
  double r_min = 1e-6;          // generic fallback grid
  double r_max = 1e12;
  int points_per_decade = 64;
  double negative_tolerance = 1e-9;  // relative; beyond it the model is invalid
};

// Attenuation-dispersion measure nu of a J-based model, from the boundary
// values of sqrt(p J~(p)) on the negative real axis (approached from below,
// which makes the extracted density non-negative).  Rational symbols (creep
// rates that are sums of exponentials) get exact support windows with
// Chebyshev quadrature; anything else falls back to a log grid with a small
// imaginary offset.
SpectralMeasure extract_density(const MaterialModel& m,
                                const ExtractOptions& opts = {});

// Causal attenuation kernel g of a model together with everything the
// transform engines need: the identity kappa(p) = p/c0 + p g~(p) makes
// p g~ = kappa - p/c0 available in closed form for J-based models, while
// g(t) itself is evaluated through the extracted measure.
class AttenuationKernel {
 public:
  static AttenuationKernel from(const MaterialModel& m,
                                const ExtractOptions& opts = {});

  double c0() const { return c0_; }
  double rho() const { return rho_; }
  bool j_based() const { return j_based_; }

  // p g~(p) on C minus the negative real axis
  cplx p_g_tilde(cplx p) const;
  cplx kappa(cplx p) const { return p / c0_ + p_g_tilde(p); }

  double g(double t) const;
  double f(double t) const;  // integral_0^t g
  Limit g0() const;          // limit of g at 0+
  double g_infinity() const;

  const CMFunction& g_fn() const { return g_fn_; }
  const MaterialModel& model() const { return model_; }

 private:
  MaterialModel model_;
  CMFunction g_fn_;   // closed form (direct) or measure-backed (J-based)
  double c0_ = 0.0;
  double rho_ = 1.0;
  bool j_based_ = false;
};

// g(t) of a model; J-based models go through extract_density, so callers
// evaluating many points should hold an AttenuationKernel instead.
double g_of_t(const MaterialModel& m, double t);

struct AttenuationDispersion {
  std::vector<double> omega;
  std::vector<double> attenuation;  // A(w) = Re kappa(-iw)
  std::vector<double> dispersion;   // D(w) = -Im kappa(-iw)
  std::vector<double> phase_speed;  // c(w) = w / (D + w/c0)
  double c0 = 0.0;
};

AttenuationDispersion attenuation_dispersion(const MaterialModel& m,
                                             std::span<const double> omega);

// Max relative discrepancy over the grid between kappa evaluated from the
// material law and p/c0 + p g~(p) rebuilt from the extracted spectral
// density (J-based), or from the closed-form boundary density (direct).
double kk_identity_residual(const MaterialModel& m,
                            std::span<const double> p_grid);

}  // namespace vewave
