#include "vewave/spectral_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vewave {

SpectralMeasure SpectralMeasure::from_atoms(std::vector<SpectralAtom> atoms) {
  SpectralMeasure m;
  std::sort(atoms.begin(), atoms.end(),
            [](const SpectralAtom& a, const SpectralAtom& b) {
              return a.location < b.location;
            });
  m.atoms_ = std::move(atoms);
  m.validate();
  return m;
}

void SpectralMeasure::add_atom(SpectralAtom atom) {
  if (atom.location <= 0.0 || atom.weight < 0.0)
    throw std::invalid_argument("SpectralMeasure: atom must have r > 0, w >= 0");
  atoms_.push_back(atom);
  std::sort(atoms_.begin(), atoms_.end(),
            [](const SpectralAtom& a, const SpectralAtom& b) {
              return a.location < b.location;
            });
}

SpectralMeasure SpectralMeasure::log_grid_density(
    const std::function<double(double)>& h, double r_min, double r_max,
    int points_per_decade, double scale) {
  if (!(r_min > 0.0) || !(r_max > r_min) || points_per_decade < 2)
    throw std::invalid_argument("SpectralMeasure: bad log grid parameters");
  SpectralMeasure m;
  m.rule_ = Rule::log_trapezoid;
  m.scale_ = scale;
  double lo = std::log(r_min);
  double hi = std::log(r_max);
  int n = static_cast<int>(std::ceil((hi - lo) / std::numbers::ln10 *
                                     points_per_decade)) + 1;
  double du = (hi - lo) / (n - 1);
  m.nodes_.resize(n);
  m.density_.resize(n);
  m.quad_w_.resize(n);
  for (int j = 0; j < n; ++j) {
    double r = std::exp(lo + j * du);
    m.nodes_[j] = r;
    m.density_[j] = h(r);
    // trapezoid in u = ln r; dr = r du
    double w = (j == 0 || j == n - 1) ? 0.5 * du : du;
    m.quad_w_[j] = w * r;
  }
  m.validate();
  return m;
}

SpectralMeasure SpectralMeasure::cheb_window_density(
    const std::function<double(double)>& h, double a, double b, int n) {
  if (!(a > 0.0) || !(b > a) || n < 4)
    throw std::invalid_argument("SpectralMeasure: bad window parameters");
  SpectralMeasure m;
  m.rule_ = Rule::cheb_window;
  m.scale_ = 1.0 / a;
  m.nodes_.resize(n);
  m.density_.resize(n);
  m.quad_w_.resize(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  // Gauss-Chebyshev: integral_a^b F(r)/sqrt((r-a)(b-r)) dr = (pi/n) sum F(r_k);
  // store weights as (pi/n) sqrt((r-a)(b-r)) so weight*h integrates h itself.
  for (int k = 0; k < n; ++k) {
    double theta = (2.0 * k + 1.0) * std::numbers::pi / (2.0 * n);
    double r = mid - half * std::cos(theta);
    m.nodes_[k] = r;
    m.density_[k] = h(r);
    m.quad_w_[k] = (std::numbers::pi / n) * std::sqrt((r - a) * (b - r));
  }
  m.validate();
  return m;
}

SpectralMeasure SpectralMeasure::concat(std::vector<SpectralMeasure> parts) {
  if (parts.empty()) return SpectralMeasure();
  SpectralMeasure out = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto& p = parts[i];
    for (const auto& a : p.atoms_) out.atoms_.push_back(a);
    out.nodes_.insert(out.nodes_.end(), p.nodes_.begin(), p.nodes_.end());
    out.density_.insert(out.density_.end(), p.density_.begin(), p.density_.end());
    out.quad_w_.insert(out.quad_w_.end(), p.quad_w_.begin(), p.quad_w_.end());
  }
  std::sort(out.atoms_.begin(), out.atoms_.end(),
            [](const SpectralAtom& a, const SpectralAtom& b) {
              return a.location < b.location;
            });
  out.validate();
  return out;
}

void SpectralMeasure::validate() const {
  double prev = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.location > 0.0))
      throw std::invalid_argument("SpectralMeasure: atom location must be > 0");
    if (a.weight < 0.0)
      throw std::invalid_argument("SpectralMeasure: atom weight must be >= 0");
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (!(nodes_[j] > prev))
      throw std::invalid_argument(
          "SpectralMeasure: density grid must be strictly increasing and > 0");
    prev = nodes_[j];
    if (density_[j] < 0.0)
      throw std::invalid_argument("SpectralMeasure: density must be >= 0");
  }
}

double SpectralMeasure::integrate(
    const std::function<double(double)>& phi) const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight * phi(a.location);
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    s += quad_w_[j] * density_[j] * phi(nodes_[j]);
  return s;
}

double SpectralMeasure::exp_moment(double t) const {
  return integrate([t](double r) { return std::exp(-r * t); });
}

double SpectralMeasure::growth_moment(double t) const {
  return integrate([t](double r) { return -std::expm1(-r * t) / r; });
}

double SpectralMeasure::growth_moment2(double t) const {
  return integrate([t](double r) {
    double x = r * t;
    if (x < 1e-4) return t * t * (0.5 - x / 6.0 + x * x / 24.0);
    return (t + std::expm1(-x) / r) / r;
  });
}

cplx SpectralMeasure::stieltjes(cplx p) const {
  cplx s = 0.0;
  for (const auto& a : atoms_) s += a.weight / (p + a.location);
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    s += quad_w_[j] * density_[j] / (p + nodes_[j]);
  return s;
}

cplx SpectralMeasure::p_stieltjes(cplx p) const { return p * stieltjes(p); }

double SpectralMeasure::doss_integral() const {
  return integrate([](double r) { return 1.0 / (1.0 + r); });
}

MassReport SpectralMeasure::total_mass() const {
  MassReport rep;
  double total = 0.0;
  for (const auto& a : atoms_) total += a.weight;
  if (nodes_.empty()) {
    rep.value = total;
    return rep;
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    total += quad_w_[j] * density_[j];
  if (rule_ == Rule::cheb_window) {
    rep.value = total;
    return rep;
  }
  // Infinite-mass detection: when every one of the top three grid decades
  // still contributes more than the quadrature tolerance, the partial mass
  // has not converged at the declared edge and the density is treated as
  // non-integrable.
  double r_hi = nodes_.back();
  double tol = quad_tol_ * std::max(1.0, total);
  bool growing = true;
  for (int d = 1; d <= 3; ++d) {
    double lo = r_hi * std::pow(10.0, -d);
    double hi = r_hi * std::pow(10.0, 1 - d);
    double decade_mass = 0.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (nodes_[j] > lo && nodes_[j] <= hi)
        decade_mass += quad_w_[j] * density_[j];
    if (decade_mass <= tol) growing = false;
  }
  if (growing) {
    rep.cls = MassClass::infinite;
    return rep;
  }
  rep.value = total;
  return rep;
}

}  // namespace vewave
