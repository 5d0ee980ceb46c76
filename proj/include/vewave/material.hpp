#pragma once

#include <string>
#include <variant>

#include "vewave/cm_function.hpp"

namespace vewave {

// Creep compliance J(t) = J0 + integral_0^t J'(s) ds, a Bernstein function:
// J0 >= 0 and the creep rate J' is LICM.
struct CreepCompliance {
  double J0 = 0.0;           // [1/Pa]
  CMFunction rate;           // J' [1/(Pa s)]

  double J(double t) const { return J0 + rate.integral0(t); }
};

// Direct specification of the medium through its wavefront speed and the
// causal attenuation kernel g.
struct DirectSpec {
  double c0 = 0.0;           // [m/s]
  CMFunction g;              // [1/m]
};

struct MaterialModel {
  double rho = 1.0;          // [kg/m^3]
  std::variant<CreepCompliance, DirectSpec> law;
  std::string label;

  bool j_based() const { return std::holds_alternative<CreepCompliance>(law); }
  const CreepCompliance& creep() const { return std::get<CreepCompliance>(law); }
  const DirectSpec& direct() const { return std::get<DirectSpec>(law); }
};

// Standard linear solid: J(t) = J0 + J1 (1 - e^{-t/tau}).
MaterialModel make_zener(double J0, double J1, double tau, double rho = 1.0);

// Purely elastic medium, J(t) = J0.
MaterialModel make_elastic(double J0, double rho = 1.0);

// p g~(p) = a p^alpha, i.e. g(t) = a t^{-alpha} / Gamma(1-alpha).
MaterialModel make_powerlaw_g(double c0, double a, double alpha,
                              double rho = 1.0);

// g(t) = b ln(1/(a t) + A), A >= 1.
MaterialModel make_log_g(double c0, double a, double b, double A,
                         double rho = 1.0);

// Single-atom kernel g(t) = w e^{-rate t}.
MaterialModel make_atom_g(double c0, double w, double rate, double rho = 1.0);

// Arbitrary sum-of-kernels direct model.
MaterialModel make_direct_g(double c0, CMFunction g, double rho = 1.0,
                            std::string label = "direct");

// J'(0+): finite value (total mass of the creep-rate measure) or infinite.
Limit creep_rate_limit(const CreepCompliance& J);

}  // namespace vewave
