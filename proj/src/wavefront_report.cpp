#include "vewave/wavefront_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "vewave/cm_checks.hpp"

namespace vewave {

namespace {

// Richardson-type extrapolation of p g~(p) along p = 10^k; the sequence is
// non-decreasing with limit g(0+) (finite mass) or divergent.
Limit extrapolate_p_g_tilde(const AttenuationKernel& k) {
  constexpr int n = 5;
  double h[n], v[n];
  for (int i = 0; i < n; ++i) {
    double p = std::pow(10.0, 2 + i);
    h[i] = 1.0 / p;
    v[i] = k.p_g_tilde(cplx(p, 0.0)).real();
  }
  // divergence test: increments along the decades must flatten
  double d1 = v[n - 1] - v[n - 2];
  double d0 = v[n - 2] - v[n - 3];
  Limit lim;
  if (d1 > 1e-9 * std::max(1.0, std::abs(v[n - 1])) && d1 > 0.5 * d0) {
    lim.kind = Limit::Kind::infinite;
    return lim;
  }
  // Neville table in h = 1/p
  double tab[n][n];
  for (int i = 0; i < n; ++i) tab[i][0] = v[i];
  for (int j = 1; j < n; ++j)
    for (int i = 0; i + j < n; ++i)
      tab[i][j] = (h[i] * tab[i + 1][j - 1] - h[i + j] * tab[i][j - 1]) /
                  (h[i] - h[i + j]);
  lim.kind = Limit::Kind::finite;
  lim.value = tab[0][n - 1];
  return lim;
}

}  // namespace

JumpCriterionResult jump_criterion(const MaterialModel& m) {
  JumpCriterionResult res;
  auto kernel = AttenuationKernel::from(m);
  if (!m.j_based()) {
    Limit lim = m.direct().g.limit_at_zero();
    if (lim.kind == Limit::Kind::finite) {
      res.kind = JumpCriterionResult::Kind::discontinuous;
      res.g0 = lim.value;
    } else if (lim.kind == Limit::Kind::infinite) {
      res.kind = JumpCriterionResult::Kind::continuous;
    } else {
      res.note = "kernel measure mass undetermined";
    }
    return res;
  }
  Limit rate = creep_rate_limit(m.creep());
  Limit extrap = extrapolate_p_g_tilde(kernel);
  if (rate.kind == Limit::Kind::finite)
    res.g0_rate_route = 0.5 * m.rho * kernel.c0() * rate.value;
  if (extrap.kind == Limit::Kind::finite) res.g0_extrap_route = extrap.value;

  bool rate_fin = rate.kind == Limit::Kind::finite;
  bool ext_fin = extrap.kind == Limit::Kind::finite;
  if (rate.kind == Limit::Kind::undetermined ||
      extrap.kind == Limit::Kind::undetermined || rate_fin != ext_fin) {
    res.kind = JumpCriterionResult::Kind::undetermined;
    res.note = "creep-rate and transform-extrapolation routes disagree";
    return res;
  }
  if (!rate_fin) {
    res.kind = JumpCriterionResult::Kind::continuous;
    return res;
  }
  double a = *res.g0_rate_route, b = *res.g0_extrap_route;
  if (std::abs(a - b) > 1e-3 * std::max({1.0, std::abs(a), std::abs(b)})) {
    res.kind = JumpCriterionResult::Kind::undetermined;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "route values differ: rate %.6e vs extrapolation %.6e", a, b);
    res.note = buf;
    return res;
  }
  res.kind = JumpCriterionResult::Kind::discontinuous;
  res.g0 = a;  // creep route is exact for rational laws
  return res;
}

JumpAmplitude jump_amplitude(const MaterialModel& m, double r) {
  if (r < 0.0) throw std::domain_error("jump_amplitude: r >= 0 required");
  auto crit = jump_criterion(m);
  if (crit.kind != JumpCriterionResult::Kind::discontinuous)
    throw std::domain_error(
        "jump_amplitude: model is continuous at the wavefront (g(0+) infinite)");
  double rho = m.rho;
  double inv2rho = 0.5 / rho;
  JumpAmplitude amp;
  amp.via_g0 = inv2rho * std::exp(-*crit.g0 * r);
  amp.value = amp.via_g0;
  if (m.j_based()) {
    double c0 = wavefront_speed(m);
    Limit rate = creep_rate_limit(m.creep());
    double g0_creep = rate.value / (2.0 * m.creep().J0 * c0);
    amp.via_creep_rate = inv2rho * std::exp(-g0_creep * r);

    DualityOptions opts;
    opts.t_max = 2.0;
    opts.steps = 4096;
    auto G = solve_duality(m.creep(), opts);
    double gp0 = g_prime_at_zero(G);
    double g0_relax = -gp0 / (2.0 * rho * c0 * c0 * c0);
    amp.via_relaxation = inv2rho * std::exp(-g0_relax * r);

    double lo = amp.via_g0, hi = amp.via_g0;
    for (double v : {*amp.via_creep_rate, *amp.via_relaxation}) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    amp.max_route_discrepancy = (hi - lo) / std::max(1e-300, hi);
  }
  return amp;
}

std::vector<PhasePoint> asymptotic_phase_ratio(const AttenuationKernel& k,
                                               double r,
                                               std::span<const double> taus) {
  std::vector<PhasePoint> trace;
  trace.reserve(taus.size());
  for (double tau : taus) {
    if (!(tau > 0.0))
      throw std::domain_error("asymptotic_phase_ratio: tau > 0 required");
    PhasePoint pt;
    pt.tau = tau;
    Inverted H = kernel_H_scaled(k, r, tau);
    pt.ok = H.ok;
    double g = k.g_fn().empty() ? 0.0 : k.g(tau);
    // assemble in logs: ratio = exp(ln H + g r)
    double lnH = H.log_value();
    pt.ratio = std::exp(lnH + g * r);
    trace.push_back(pt);
  }
  return trace;
}

BoundCheck upper_bound_check(const AttenuationKernel& k,
                             std::span<const double> r_grid,
                             std::span<const double> tau_grid) {
  BoundCheck out;
  // hypothesis: -t g'(t) non-increasing, probed by finite differences on a
  // geometric grid
  if (!k.g_fn().empty()) {
    auto grid = geomspace(1e-4, 1e2, 121);
    const double eps = 1e-5, slack = 1e-9;
    double prev = 0.0;
    bool first = true;
    for (double t : grid) {
      double d = -(k.g(t * (1.0 + eps)) - k.g(t * (1.0 - eps))) / (2.0 * eps);
      if (!first && d > prev * (1.0 + slack) + slack) {
        out.status = BoundCheck::Status::refused;
        out.hypothesis_failing_tau = t;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "-t g'(t) increases at t = %.6e (%.6e -> %.6e); "
                      "the bound hypothesis fails",
                      t, prev, d);
        out.diagnostic = buf;
        return out;
      }
      prev = d;
      first = false;
    }
  }

  // displayed extra bound for the logarithmic kernel
  const CMFunction::Logarithmic* logterm = nullptr;
  if (k.g_fn().terms().size() == 1)
    logterm = std::get_if<CMFunction::Logarithmic>(&k.g_fn().terms()[0]);
  if (logterm) out.max_violation_displayed = 0.0;

  for (double r : r_grid) {
    for (double tau : tau_grid) {
      double lnH = kernel_H_scaled(k, r, tau).log_value();
      double g = k.g_fn().empty() ? 0.0 : k.g(tau);
      double viol = std::exp(lnH + g * r) - 1.0;
      if (viol > out.max_violation) {
        out.max_violation = viol;
        out.worst_tau = tau;
        out.worst_r = r;
      }
      if (logterm) {
        double lnb = -logterm->b * r *
                     std::log(1.0 / (logterm->a * tau) + logterm->A);
        double v2 = std::exp(lnH - lnb) - 1.0;
        if (v2 > *out.max_violation_displayed) out.max_violation_displayed = v2;
      }
    }
  }
  return out;
}

ExponentFit regularization_exponent(const AttenuationKernel& k, double r,
                                    std::span<const double> tau_window) {
  ExponentFit fit;
  if (tau_window.size() < 4) {
    fit.error = "window too small";
    return fit;
  }
  double lo = tau_window.front(), hi = tau_window.back();
  if (!(hi / lo >= 10.0 * (1.0 - 1e-12))) {
    fit.error = "window must span at least one decade";
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (double tau : tau_window) {
    double lnH = kernel_H_scaled(k, r, tau).log_value();
    if (!std::isfinite(lnH)) {
      fit.error = "kernel evaluation failed in the window";
      return fit;
    }
    double x = std::log(tau);
    sx += x;
    sy += lnH;
    sxx += x * x;
    sxy += x * lnH;
    ++n;
  }
  double denom = n * sxx - sx * sx;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.exponent * sx) / n;
  fit.ok = true;
  return fit;
}

std::vector<SlowVarPoint> slowly_varying_check(const AttenuationKernel& k,
                                               std::span<const double> lambdas,
                                               std::span<const double> p_grid,
                                               double r) {
  std::vector<SlowVarPoint> out;
  for (double p : p_grid) {
    for (double lam : lambdas) {
      if (!(p > 0.0) || !(lam > 0.0))
        throw std::domain_error("slowly_varying_check: positive p, lambda");
      SlowVarPoint pt;
      pt.p = p;
      pt.lambda = lam;
      double l1 = -r * k.p_g_tilde(cplx(lam * p, 0.0)).real();
      double l0 = -r * k.p_g_tilde(cplx(p, 0.0)).real();
      pt.deviation = std::abs(std::expm1(l1 - l0));
      out.push_back(pt);
    }
  }
  return out;
}

double g_vs_creep_rate_check(const MaterialModel& m,
                             std::span<const double> t_grid) {
  if (!m.j_based())
    throw std::invalid_argument("g_vs_creep_rate_check: J-based model required");
  auto kernel = AttenuationKernel::from(m);
  double bound_factor = 0.5 * m.rho * kernel.c0();
  double worst = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    double lhs = kernel.g(t);
    double rhs = bound_factor * m.creep().rate.eval(t);
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

WavefrontReport make_wavefront_report(const MaterialModel& m, double r) {
  WavefrontReport rep;
  rep.model_label = m.label;
  rep.r = r;
  rep.criterion = jump_criterion(m);
  auto kernel = AttenuationKernel::from(m);
  if (rep.criterion.kind == JumpCriterionResult::Kind::discontinuous)
    rep.amplitude = jump_amplitude(m, r);
  auto taus = geomspace(1e-3, 1e-1, 9);
  std::reverse(taus.begin(), taus.end());
  rep.phase_trace = asymptotic_phase_ratio(kernel, r, taus);
  auto tau_grid = geomspace(1e-4, 1e-1, 16);
  double rs[1] = {r};
  rep.bound = upper_bound_check(kernel, rs, tau_grid);
  if (!m.j_based() && kernel.g_fn().terms().size() == 1 &&
      std::holds_alternative<CMFunction::Logarithmic>(kernel.g_fn().terms()[0])) {
    auto window = geomspace(1e-4, 1e-3, 9);
    rep.regularization = regularization_exponent(kernel, r, window);
  }
  return rep;
}

std::string WavefrontReport::to_text() const {
  std::string s;
  char buf[256];
  s += "wavefront report: " + model_label + "\n";
  std::snprintf(buf, sizeof buf, "  r = %.6g\n", r);
  s += buf;
  switch (criterion.kind) {
    case JumpCriterionResult::Kind::discontinuous:
      std::snprintf(buf, sizeof buf,
                    "  wavefront: discontinuous, g(0+) = %.12g\n", *criterion.g0);
      break;
    case JumpCriterionResult::Kind::continuous:
      std::snprintf(buf, sizeof buf, "  wavefront: continuous (g(0+) infinite)\n");
      break;
    default:
      std::snprintf(buf, sizeof buf, "  wavefront: undetermined (%s)\n",
                    criterion.note.c_str());
  }
  s += buf;
  if (amplitude) {
    std::snprintf(buf, sizeof buf,
                  "  jump amplitude = %.12g (route discrepancy %.3g)\n",
                  amplitude->value, amplitude->max_route_discrepancy);
    s += buf;
  }
  if (bound) {
    if (bound->status == BoundCheck::Status::refused) {
      s += "  upper bound: refused -- " + bound->diagnostic + "\n";
    } else {
      std::snprintf(buf, sizeof buf, "  upper bound: max violation %.3e\n",
                    bound->max_violation);
      s += buf;
    }
  }
  if (regularization && regularization->ok) {
    std::snprintf(buf, sizeof buf, "  regularization exponent = %.6g\n",
                  regularization->exponent);
    s += buf;
  }
  if (!phase_trace.empty()) {
    s += "  phase ratio trace (tau, H e^{g r}):\n";
    for (const auto& pt : phase_trace) {
      std::snprintf(buf, sizeof buf, "    %.6e  %.12e\n", pt.tau, pt.ratio);
      s += buf;
    }
  }
  return s;
}

std::string WavefrontReport::to_json() const {
  nlohmann::json j;
  j["model"] = model_label;
  j["r"] = r;
  switch (criterion.kind) {
    case JumpCriterionResult::Kind::discontinuous:
      j["wavefront"] = "discontinuous";
      j["g0"] = *criterion.g0;
      break;
    case JumpCriterionResult::Kind::continuous:
      j["wavefront"] = "continuous";
      break;
    default:
      j["wavefront"] = "undetermined";
      j["note"] = criterion.note;
  }
  if (criterion.g0_rate_route) j["g0_rate_route"] = *criterion.g0_rate_route;
  if (criterion.g0_extrap_route)
    j["g0_extrap_route"] = *criterion.g0_extrap_route;
  if (amplitude) {
    j["jump_amplitude"] = amplitude->value;
    j["jump_amplitude_routes"]["via_g0"] = amplitude->via_g0;
    if (amplitude->via_creep_rate)
      j["jump_amplitude_routes"]["via_creep_rate"] = *amplitude->via_creep_rate;
    if (amplitude->via_relaxation)
      j["jump_amplitude_routes"]["via_relaxation"] = *amplitude->via_relaxation;
    j["jump_amplitude_routes"]["max_discrepancy"] =
        amplitude->max_route_discrepancy;
  }
  if (bound) {
    if (bound->status == BoundCheck::Status::refused) {
      j["upper_bound"]["status"] = "refused";
      j["upper_bound"]["diagnostic"] = bound->diagnostic;
      j["upper_bound"]["failing_tau"] = bound->hypothesis_failing_tau;
    } else {
      j["upper_bound"]["status"] = "checked";
      j["upper_bound"]["max_violation"] = bound->max_violation;
      if (bound->max_violation_displayed)
        j["upper_bound"]["max_violation_displayed"] =
            *bound->max_violation_displayed;
    }
  }
  if (regularization && regularization->ok)
    j["regularization_exponent"] = regularization->exponent;
  auto& trace = j["phase_ratio_trace"];
  for (const auto& pt : phase_trace)
    trace.push_back({{"tau", pt.tau}, {"ratio", pt.ratio}});
  return j.dump(2);
}

}  // namespace vewave
