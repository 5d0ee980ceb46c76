#include "vewave/verification.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "vewave/cm_checks.hpp"
#include "vewave/grid_eval.hpp"
#include "vewave/wavefront_report.hpp"

namespace vewave {

namespace {

CheckResult make(const std::string& name, double residual, double tol,
                 std::string detail = "") {
  CheckResult c;
  c.name = name;
  c.residual = residual;
  c.tolerance = tol;
  c.passed = residual <= tol;
  c.detail = std::move(detail);
  return c;
}

CheckResult make_flag(const std::string& name, bool ok, std::string detail = "") {
  CheckResult c;
  c.name = name;
  c.passed = ok;
  c.residual = ok ? 0.0 : 1.0;
  c.tolerance = 0.0;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

bool VerifySummary::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifySummary::to_text() const {
  std::string s;
  char buf[256];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "[%s] %-44s residual %.3e (tol %.1e)%s%s\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                  c.tolerance, c.detail.empty() ? "" : " -- ",
                  c.detail.c_str());
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "%zu checks, %zu failed\n", checks.size(),
                static_cast<std::size_t>(
                    std::count_if(checks.begin(), checks.end(),
                                  [](const CheckResult& c) { return !c.passed; })));
  s += buf;
  return s;
}

std::string VerifySummary::to_json() const {
  nlohmann::json j;
  j["all_passed"] = all_passed();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"detail", c.detail}});
  return j.dump(2);
}

VerifySummary run_verification(double tol_scale) {
  VerifySummary sum;
  auto& out = sum.checks;

  auto zener = make_zener(1.0, 1.0, 1.0, 1.0);
  auto elastic = make_elastic(1.0, 1.0);
  auto powerlaw = make_powerlaw_g(1.0, 1.0, 0.5, 1.0);
  auto logm = make_log_g(1.0, 1.0, 1.0, 1.0, 1.0);
  auto atom = make_atom_g(1.0, 1.0, 1.0, 1.0);

  // --- complete monotonicity of the catalog kernels --------------------
  {
    auto grid = geomspace(1e-2, 1e2, 49);
    for (const auto* m : {&powerlaw, &logm, &atom}) {
      auto k = AttenuationKernel::from(*m);
      auto rep = check_cm([&k](double t) { return k.g(t); }, grid, 4);
      out.push_back(make("cm: " + m->label + " kernel sign test",
                         rep.worst_violation, 1e-7 * tol_scale));
    }
    auto kz = AttenuationKernel::from(zener);
    auto repz = check_cm([&kz](double t) { return kz.g(t); }, grid, 4);
    out.push_back(
        make("cm: zener extracted kernel sign test", repz.worst_violation,
             1e-7 * tol_scale));
  }

  // --- measure contracts ------------------------------------------------
  {
    auto mz = extract_density(zener);
    double doss = mz.doss_integral();
    out.push_back(make_flag("measure: zener doss integral finite",
                            std::isfinite(doss) && doss > 0.0));
    auto mass = mz.total_mass();
    double err = std::abs(mass.value - 0.5);
    out.push_back(make("measure: zener mass equals rho c0 J'(0+)/2", err,
                       1e-10 * tol_scale));
    ExtractOptions fine;
    fine.window_nodes = 192;
    auto mz2 = extract_density(zener, fine);
    double drift = std::abs(mz2.total_mass().value - mass.value);
    out.push_back(make("measure: refinement drift", drift, 1e-12 * tol_scale));
  }

  // --- duality -----------------------------------------------------------
  {
    DualityOptions opts;
    opts.steps = 2048;
    auto G = solve_duality(zener.creep(), opts);
    double res = duality_residual(zener.creep(), G);
    out.push_back(make("duality: zener residual", res, 1e-5 * tol_scale));
    out.push_back(make("duality: J0 G0 = 1", std::abs(zener.creep().J0 * G.G0 - 1.0),
                       1e-12 * tol_scale));
    double gp0 = g_prime_at_zero(G);
    out.push_back(make("duality: J'(0+) G0 + G'(0+) J0 = 0",
                       std::abs(1.0 * G.G0 + gp0 * zener.creep().J0),
                       1e-3 * tol_scale));
    bool monotone = true;
    for (std::size_t i = 1; i < G.G.size(); ++i)
      if (G.G[i] > G.G[i - 1] + 1e-12) monotone = false;
    out.push_back(make_flag("duality: G non-increasing", monotone));
  }

  // --- wavenumber identity ------------------------------------------------
  {
    auto ps = geomspace(1e-2, 1e2, 25);
    out.push_back(make("dispersion: zener wavenumber identity",
                       kk_identity_residual(zener, ps), 1e-4 * tol_scale));
    out.push_back(make("dispersion: powerlaw wavenumber identity",
                       kk_identity_residual(powerlaw, ps), 1e-6 * tol_scale));
    auto curves = attenuation_table(zener, ps, Exec::serial);
    bool a_monotone = true, c_bounded = true;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i && curves.attenuation[i] < curves.attenuation[i - 1] - 1e-12)
        a_monotone = false;
      if (curves.phase_speed[i] > curves.c0 * (1.0 + 1e-12)) c_bounded = false;
    }
    out.push_back(make_flag("dispersion: attenuation non-decreasing", a_monotone));
    out.push_back(make_flag("dispersion: phase speed below c0", c_bounded));
  }

  // --- inversion engine closed forms ---------------------------------------
  {
    auto one_over_p =
        LogTransform([](cplx p) { return -std::log(p); });
    double e1v = std::abs(invert_laplace(one_over_p, 1.0) - 1.0);
    out.push_back(make("inversion: step transform", e1v, 1e-9 * tol_scale));
    auto pole = LogTransform([](cplx p) { return -std::log(p + 1.0); });
    double e2v = std::abs(invert_laplace(pole, 1.0) - std::exp(-1.0));
    out.push_back(make("inversion: simple pole", e2v, 1e-9 * tol_scale));
    auto heat = LogTransform([](cplx p) { return -std::sqrt(p) - std::log(p); });
    double e3v =
        std::abs(invert_laplace(heat, 1.0) - std::erfc(0.5)) / std::erfc(0.5);
    out.push_back(make("inversion: diffusive front", e3v, 1e-9 * tol_scale));
  }

  // --- kernel invariants ----------------------------------------------------
  {
    auto taus = geomspace(1e-3, 1e3, 31);
    for (const auto* m : {&zener, &powerlaw, &logm, &elastic}) {
      auto k = AttenuationKernel::from(*m);
      auto tab = kernel_table(k, 1.0, taus, Exec::serial);
      bool mono = true, in01 = true;
      for (std::size_t i = 0; i < tab.H.size(); ++i) {
        if (i && tab.H[i] < tab.H[i - 1] - 1e-9) mono = false;
        if (tab.H[i] < -1e-9 || tab.H[i] > 1.0 + 1e-9) in01 = false;
      }
      out.push_back(make_flag("kernel: " + m->label + " H non-decreasing", mono));
      out.push_back(make_flag("kernel: " + m->label + " H within [0,1]", in01));
    }
    auto kp = AttenuationKernel::from(powerlaw);
    auto tab = kernel_table(kp, 1.0, taus, Exec::serial);
    double worst = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
      double exact = std::erfc(1.0 / (2.0 * std::sqrt(taus[i])));
      worst = std::max(worst, std::abs(tab.H[i] - exact) /
                                  std::max(exact, 1e-300));
    }
    out.push_back(make("kernel: powerlaw vs closed form", worst, 1e-6 * tol_scale));
  }

  // --- wavefront diagnostics -------------------------------------------------
  {
    auto crit = jump_criterion(zener);
    out.push_back(make_flag(
        "wavefront: zener jump routes agree",
        crit.kind == JumpCriterionResult::Kind::discontinuous, crit.note));
    auto amp = jump_amplitude(zener, 1.0);
    out.push_back(make("wavefront: zener amplitude route discrepancy",
                       amp.max_route_discrepancy, 1e-3 * tol_scale));
    for (const auto* m : {&powerlaw, &logm}) {
      auto crit2 = jump_criterion(*m);
      out.push_back(make_flag("wavefront: " + m->label + " continuous",
                              crit2.kind == JumpCriterionResult::Kind::continuous));
      auto k = AttenuationKernel::from(*m);
      auto tau_grid = geomspace(1e-4, 1e-1, 13);
      double rs[3] = {0.5, 1.0, 2.0};
      auto bc = upper_bound_check(k, rs, tau_grid);
      out.push_back(make("wavefront: " + m->label + " kernel bound",
                         bc.status == BoundCheck::Status::checked
                             ? bc.max_violation
                             : 1.0,
                         1e-3 * tol_scale));
    }
    auto katom = AttenuationKernel::from(atom);
    auto tau_grid = geomspace(1e-4, 1e-1, 13);
    double rs[1] = {1.0};
    auto bc = upper_bound_check(katom, rs, tau_grid);
    out.push_back(make_flag("wavefront: atom kernel refused by hypothesis",
                            bc.status == BoundCheck::Status::refused,
                            bc.diagnostic));
    auto klog = AttenuationKernel::from(logm);
    auto window = geomspace(1e-4, 1e-3, 9);
    auto fit = regularization_exponent(klog, 1.0, window);
    out.push_back(make("wavefront: log kernel regularization exponent",
                       std::abs(fit.exponent - 1.0), 0.1 * tol_scale));
  }

  // --- kernel/creep inequality -------------------------------------------------
  {
    auto ts = geomspace(1e-2, 10.0, 25);
    double v = g_vs_creep_rate_check(zener, ts);
    out.push_back(make("wavefront: g below rho c0 J'/2", std::max(0.0, v),
                       1e-6 * tol_scale));
  }

  return sum;
}

}  // namespace vewave
