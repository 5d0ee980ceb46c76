#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "vewave/special.hpp"

namespace vewave {

struct SpectralAtom {
  double location;  // r_k > 0, [1/T]
  double weight;    // w_k >= 0
};

enum class MassClass { finite, infinite, undetermined };

struct MassReport {
  MassClass cls = MassClass::finite;
  double value = 0.0;  // meaningful when cls == finite
};

// Positive Radon measure nu on ]0,inf[, represented as point masses plus a
// density sampled on a strictly increasing grid with precomputed integration
// weights (so that  integral phi dnu = sum_k w_k phi(r_k)
//                               + sum_j W_j h_j phi(r_j)).
//
// Two grid builders are provided:
//   * log_grid_density  -- trapezoid in ln r with Jacobian, for densities
//                          spread over many decades;
//   * cheb_window_density -- Gauss-Chebyshev nodes on a finite window [a,b]
//                          for densities with inverse-square-root endpoint
//                          behavior (boundary values of rational symbols).
class SpectralMeasure {
 public:
  enum class Rule { none, log_trapezoid, cheb_window };

  SpectralMeasure() = default;

  static SpectralMeasure from_atoms(std::vector<SpectralAtom> atoms);

  static SpectralMeasure log_grid_density(
      const std::function<double(double)>& h, double r_min, double r_max,
      int points_per_decade, double scale = 1.0);

  // Window density written as h(r) = u(r)/sqrt((r-a)(b-r)); the caller
  // supplies h itself, the builder forms the Chebyshev weights.
  static SpectralMeasure cheb_window_density(
      const std::function<double(double)>& h, double a, double b, int n);

  // Concatenation of measures with disjoint, ordered supports.
  static SpectralMeasure concat(std::vector<SpectralMeasure> parts);

  void add_atom(SpectralAtom atom);

  // integral of phi dnu over ]0, inf[
  double integrate(const std::function<double(double)>& phi) const;
  // integral of e^{-r t} dnu
  double exp_moment(double t) const;
  // integral of (1 - e^{-r t})/r dnu
  double growth_moment(double t) const;
  // integral of (t - (1 - e^{-r t})/r)/r dnu   (second antiderivative part)
  double growth_moment2(double t) const;
  // integral of dnu / (p + r)
  cplx stieltjes(cplx p) const;
  // integral of p dnu / (p + r)
  cplx p_stieltjes(cplx p) const;
  // integral of dnu / (1 + r); finite for every admissible measure
  double doss_integral() const;

  MassReport total_mass() const;

  bool empty() const { return atoms_.empty() && nodes_.empty(); }
  const std::vector<SpectralAtom>& atoms() const { return atoms_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& density() const { return density_; }
  const std::vector<double>& quad_weights() const { return quad_w_; }
  Rule rule() const { return rule_; }
  double scale() const { return scale_; }
  double quad_tolerance() const { return quad_tol_; }
  void set_quad_tolerance(double tol) { quad_tol_ = tol; }

  // Throws std::invalid_argument on violated structural invariants
  // (non-positive or non-increasing locations, negative weights/density).
  void validate() const;

 private:
  std::vector<SpectralAtom> atoms_;
  std::vector<double> nodes_;    // density abscissa, strictly increasing
  std::vector<double> density_;  // h(r_j) >= 0
  std::vector<double> quad_w_;   // integration weights
  Rule rule_ = Rule::none;
  double scale_ = 1.0;
  double quad_tol_ = 1e-6;
};

}  // namespace vewave
