#pragma once

#include <cstddef>
#include <vector>

#include "vewave/material.hpp"

namespace vewave {

enum class Exec { serial, parallel };

// Relaxation modulus samples on a uniform grid, produced by the duality
// solver.  G0 comes from the exact identity G0 = 1/J0 rather than from
// extrapolating samples.
struct RelaxationModulus {
  std::vector<double> t;
  std::vector<double> G;
  double G0 = 0.0;
  double step() const { return t.size() > 1 ? t[1] - t[0] : 0.0; }
};

struct DualityOptions {
  double t_max = 10.0;
  std::size_t steps = 2048;
  Exec exec = Exec::parallel;
};

// Solves  integral_0^t G(s) J(t-s) ds = t  for G given a Bernstein J with
// J0 > 0.  The equation is first differentiated to the second kind,
//   J0 G(t) + (J' * G)(t) = 1,
// then marched with product integration: G piecewise linear, the weakly
// singular kernel J' integrated exactly through antiderivatives of J.
RelaxationModulus solve_duality(const CreepCompliance& J,
                                const DualityOptions& opts = {});

// Re-convolves the solution through the original first-kind equation and
// returns max_i |(G*J)(t_i) - t_i| / max(t_i, h) over a subsampled index set.
double duality_residual(const CreepCompliance& J, const RelaxationModulus& G,
                        Exec exec = Exec::parallel);

// One-sided fourth-order estimate of G'(0+) from the first samples.
double g_prime_at_zero(const RelaxationModulus& G);

}  // namespace vewave
