#include "vewave/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vewave {

namespace {

// sqrt(1+z) - 1 without cancellation for small |z|; principal branch
cplx sqrt1pm1c(cplx z) { return z / (std::sqrt(1.0 + z) + 1.0); }

// p J~(p) = J0 + L[J'](p), continued off the right half-plane
cplx p_J_tilde(const CreepCompliance& J, cplx p) {
  return J.J0 + J.rate.laplace_analytic(p);
}

// real boundary value of p J~ on the negative axis for rational symbols
double p_J_tilde_neg(const CreepCompliance& J, double r) {
  double v = J.J0;
  for (const auto& term : J.rate.terms()) {
    const auto& ex = std::get<CMFunction::Exponential>(term);
    v += ex.w / (ex.rate - r);
  }
  return v;
}

bool rate_is_rational(const CreepCompliance& J) {
  for (const auto& term : J.rate.terms())
    if (!std::holds_alternative<CMFunction::Exponential>(term)) return false;
  return true;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double wavefront_speed(const MaterialModel& m) {
  if (m.j_based()) {
    const auto& J = m.creep();
    if (!(J.J0 > 0.0))
      throw std::domain_error("wavefront_speed: J0 = 0 means infinite speed");
    return 1.0 / std::sqrt(m.rho * J.J0);
  }
  return m.direct().c0;
}

cplx kappa(const MaterialModel& m, cplx p) {
  if (!(p.real() > 0.0))
    throw std::domain_error(
        "kappa: Re p > 0 required; boundary values are provided by "
        "extract_density / attenuation_dispersion");
  return AttenuationKernel::from(m).kappa(p);
}

SpectralMeasure extract_density(const MaterialModel& m,
                                const ExtractOptions& opts) {
  if (!m.j_based())
    throw std::invalid_argument(
        "extract_density: direct models already carry their kernel; "
        "only J-based models are extracted");
  const auto& J = m.creep();
  const double rho = m.rho;
  const double front = std::sqrt(rho) / std::numbers::pi;

  if (rate_is_rational(J)) {
    // one support window ]s_k, z_k[ opens right of every pole -s_k of p J~
    std::vector<double> poles;
    double wsum = 0.0;
    for (const auto& term : J.rate.terms()) {
      const auto& ex = std::get<CMFunction::Exponential>(term);
      poles.push_back(ex.rate);
      wsum += ex.w;
    }
    std::sort(poles.begin(), poles.end());
    if (poles.empty()) return SpectralMeasure();  // elastic: zero density

    auto symbol = [&J](double r) { return p_J_tilde_neg(J, r); };
    std::vector<SpectralMeasure> windows;
    for (std::size_t k = 0; k < poles.size(); ++k) {
      double lo = poles[k];
      double hi_bracket = (k + 1 < poles.size())
                              ? poles[k + 1] * (1.0 - 1e-12)
                              : poles.back() + wsum / J.J0 + 1.0;
      double eps = 1e-12 * lo;
      if (symbol(lo + eps) >= 0.0) continue;  // no negative excursion
      double z = bisect(symbol, lo + eps, hi_bracket);
      auto h = [&](double r) {
        double v = p_J_tilde_neg(J, r);
        return front * std::sqrt(std::max(0.0, -v));
      };
      windows.push_back(
          SpectralMeasure::cheb_window_density(h, lo, z, opts.window_nodes));
    }
    if (windows.empty()) return SpectralMeasure();
    return SpectralMeasure::concat(std::move(windows));
  }

  // generic fallback: boundary values with a small imaginary offset below
  // the axis, log-trapezoid weights on the requested grid
  double worst_neg = 0.0, peak = 0.0;
  auto h = [&](double r) {
    cplx p(-r, -1e-8 * r);
    double v = front * std::sqrt(p_J_tilde(J, p)).imag();
    peak = std::max(peak, std::abs(v));
    if (v < 0.0) {
      worst_neg = std::max(worst_neg, -v);
      v = 0.0;
    }
    return v;
  };
  auto measure = SpectralMeasure::log_grid_density(
      h, opts.r_min, opts.r_max, opts.points_per_decade);
  if (worst_neg > opts.negative_tolerance * std::max(1.0, peak))
    throw std::domain_error(
        "extract_density: boundary density significantly negative; "
        "the creep compliance is not a Bernstein function");
  return measure;
}

AttenuationKernel AttenuationKernel::from(const MaterialModel& m,
                                          const ExtractOptions& opts) {
  AttenuationKernel k;
  k.model_ = m;
  k.rho_ = m.rho;
  k.c0_ = wavefront_speed(m);
  k.j_based_ = m.j_based();
  if (k.j_based_) {
    auto nu = extract_density(m, opts);
    if (!nu.empty()) k.g_fn_ = CMFunction::from_measure(std::move(nu));
  } else {
    k.g_fn_ = m.direct().g;
  }
  return k;
}

cplx AttenuationKernel::p_g_tilde(cplx p) const {
  if (!j_based_) return g_fn_.p_laplace_analytic(p);
  // kappa - p/c0 in the cancellation-free form
  // (p/c0) * (sqrt(1 + rho c0^2 L[J'](p)) - 1)
  const auto& J = model_.creep();
  cplx delta = J.rate.laplace_analytic(p);
  return (p / c0_) * sqrt1pm1c(rho_ * c0_ * c0_ * delta);
}

double AttenuationKernel::g(double t) const { return g_fn_.eval(t); }

double AttenuationKernel::f(double t) const { return g_fn_.integral0(t); }

Limit AttenuationKernel::g0() const { return g_fn_.limit_at_zero(); }

double AttenuationKernel::g_infinity() const {
  return g_fn_.limit_at_infinity();
}

double g_of_t(const MaterialModel& m, double t) {
  return AttenuationKernel::from(m).g(t);
}

AttenuationDispersion attenuation_dispersion(const MaterialModel& m,
                                             std::span<const double> omega) {
  AttenuationDispersion out;
  auto kernel = AttenuationKernel::from(m);
  double c0 = kernel.c0();
  out.c0 = c0;
  out.omega.assign(omega.begin(), omega.end());
  out.attenuation.resize(omega.size());
  out.dispersion.resize(omega.size());
  out.phase_speed.resize(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    double w = omega[i];
    if (!(w > 0.0))
      throw std::domain_error("attenuation_dispersion: omega > 0 required");
    cplx pg = kernel.p_g_tilde(cplx(0.0, -w));
    out.attenuation[i] = pg.real();
    out.dispersion[i] = -pg.imag();
    out.phase_speed[i] = w / (out.dispersion[i] + w / c0);
  }
  return out;
}

namespace {

// integral h(r) p/(p+r) dr over ]0,inf[ via the substitution r = p e^u,
// trapezoid on a wide uniform u-grid (spectrally accurate for densities
// with power-law or exponential tails)
double tilted_density_integral(const std::function<double(double)>& h,
                               double p) {
  const double du = 0.125, u_max = 55.0;
  double s = 0.0;
  for (double u = -u_max; u <= u_max; u += du) {
    double r = p * std::exp(u);
    s += h(r) * (p * r / (p + r)) * du;
  }
  return s;
}

// p g~(p) of a direct model rebuilt from its boundary density
double direct_route2(const CMFunction& g, double p) {
  double s = 0.0;
  for (const auto& term : g.terms()) {
    if (auto* pl = std::get_if<CMFunction::PowerLaw>(&term)) {
      double c = pl->a * std::sin(pl->alpha * std::numbers::pi) / std::numbers::pi;
      double alpha = pl->alpha;
      s += tilted_density_integral(
          [c, alpha](double r) { return c * std::pow(r, alpha - 1.0); }, p);
    } else if (auto* lg = std::get_if<CMFunction::Logarithmic>(&term)) {
      double beta = 1.0 / (lg->a * lg->A);
      double b = lg->b;
      s += b * std::log(lg->A) +
           tilted_density_integral(
               [b, beta](double r) { return b * (-std::expm1(-beta * r)) / r; },
               p);
    } else if (auto* ex = std::get_if<CMFunction::Exponential>(&term)) {
      s += ex->w * p / (p + ex->rate);  // pole -> atom, extracted exactly
    } else if (auto* c = std::get_if<CMFunction::Constant>(&term)) {
      s += c->c;
    } else {
      s += std::get<SpectralMeasure>(term).p_stieltjes(p).real();
    }
  }
  return s;
}

}  // namespace

double kk_identity_residual(const MaterialModel& m,
                            std::span<const double> p_grid) {
  auto kernel = AttenuationKernel::from(m);
  double worst = 0.0;
  for (double p : p_grid) {
    if (!(p > 0.0))
      throw std::domain_error("kk_identity_residual: real p > 0 required");
    double route1 = kernel.p_g_tilde(cplx(p, 0.0)).real();
    double route2;
    if (m.j_based()) {
      route2 = kernel.g_fn().p_laplace_analytic(cplx(p, 0.0)).real();
    } else {
      route2 = direct_route2(m.direct().g, p);
    }
    double kap = p / kernel.c0() + route1;
    double res = std::abs(route1 - route2) / std::max(std::abs(kap), 1e-300);
    worst = std::max(worst, res);
  }
  return worst;
}

}  // namespace vewave
