#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "vewave/cm_checks.hpp"
#include "vewave/wavefront_report.hpp"

using namespace vewave;

TEST_CASE("jump criterion across the catalog") {
  SUBCASE("standard linear solid: discontinuous, g(0+) = 1/2, routes agree") {
    auto res = jump_criterion(make_zener(1.0, 1.0, 1.0, 1.0));
    CHECK(res.kind == JumpCriterionResult::Kind::discontinuous);
    CHECK(*res.g0 == doctest::Approx(0.5).epsilon(1e-10));
    REQUIRE(res.g0_rate_route);
    REQUIRE(res.g0_extrap_route);
    CHECK(*res.g0_rate_route ==
          doctest::Approx(*res.g0_extrap_route).epsilon(1e-6));
  }
  SUBCASE("power-law: continuous") {
    CHECK(jump_criterion(make_powerlaw_g(1, 1, 0.5)).kind ==
          JumpCriterionResult::Kind::continuous);
  }
  SUBCASE("logarithmic: continuous") {
    CHECK(jump_criterion(make_log_g(1, 1, 1, 1)).kind ==
          JumpCriterionResult::Kind::continuous);
  }
  SUBCASE("elastic: discontinuous with g0 = 0") {
    auto res = jump_criterion(make_elastic(1.0));
    CHECK(res.kind == JumpCriterionResult::Kind::discontinuous);
    CHECK(*res.g0 == doctest::Approx(0.0));
  }
}

TEST_CASE("jump amplitude and its three routes") {
  auto m = make_zener(1.0, 1.0, 1.0, 1.0);
  auto amp = jump_amplitude(m, 1.0);
  CHECK(amp.value == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-10));
  CHECK(amp.value == doctest::Approx(0.303265).epsilon(1e-5));
  REQUIRE(amp.via_creep_rate);
  REQUIRE(amp.via_relaxation);
  CHECK(amp.max_route_discrepancy < 1e-3);
  // r = 0: source-adjacent limit 1/(2 rho)
  CHECK(jump_amplitude(m, 0.0).value == doctest::Approx(0.5));
  // elastic: 1/(2 rho) for every r
  CHECK(jump_amplitude(make_elastic(1.0, 2.0), 7.0).value ==
        doctest::Approx(0.25));
  // continuous models are refused
  CHECK_THROWS_AS(jump_amplitude(make_powerlaw_g(1, 1, 0.5), 1.0),
                  std::domain_error);
}

TEST_CASE("asymptotic phase ratio traces") {
  SUBCASE("elastic: identically one") {
    auto k = AttenuationKernel::from(make_elastic(1.0));
    auto taus = geomspace(1e-3, 1e-1, 5);
    for (auto& pt : asymptotic_phase_ratio(k, 1.0, taus))
      CHECK(pt.ratio == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("power-law: trace equals the closed-form oracle") {
    auto k = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
    double taus[3] = {1e-1, 1e-2, 1e-3};
    auto trace = asymptotic_phase_ratio(k, 1.0, taus);
    for (const auto& pt : trace) {
      double ln_ref = oracles::log_erfc(1.0 / (2.0 * std::sqrt(pt.tau))) +
                      std::pow(pt.tau, -0.5) / std::sqrt(M_PI);
      CHECK(pt.ratio == doctest::Approx(std::exp(ln_ref)).epsilon(1e-6));
    }
    // the exact trace decreases toward zero as tau -> 0: the phase estimate
    // e^{-g r} only degenerates to the true wavefront law when g(0+) is
    // finite, and this kernel has g(0+) = inf
    CHECK(trace[0].ratio > trace[1].ratio);
    CHECK(trace[1].ratio > trace[2].ratio);
    CHECK(trace[2].ratio < 1e-50);
  }
  SUBCASE("standard linear solid: ratio -> 1 at the front (finite g0)") {
    auto k = AttenuationKernel::from(make_zener(1.0, 1.0, 1.0, 1.0));
    double taus[4] = {1e-1, 1e-2, 1e-3, 1e-4};
    auto trace = asymptotic_phase_ratio(k, 1.0, taus);
    // monotone approach to 1 from below as tau decreases
    for (std::size_t i = 1; i < trace.size(); ++i)
      CHECK(trace[i].ratio >= trace[i - 1].ratio - 1e-9);
    CHECK(trace.back().ratio == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("upper bound H <= e^{-g r}") {
  auto tau_grid = geomspace(1e-4, 1e-1, 13);
  double rs[3] = {0.5, 1.0, 2.0};
  SUBCASE("power-law kernel: bound holds with inversion slack") {
    auto k = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
    auto bc = upper_bound_check(k, rs, tau_grid);
    REQUIRE(bc.status == BoundCheck::Status::checked);
    CHECK(bc.max_violation <= 1e-3);
  }
  SUBCASE("power-law kernel: brute-force sweep confirms the bound globally") {
    // erfc(x) <= e^{-2x/sqrt(pi)} for all x >= 0 (x = r/(2 sqrt(tau)))
    for (double x : geomspace(1e-4, 40.0, 60)) {
      double lhs = oracles::log_erfc(x);
      double rhs = -2.0 * x / std::sqrt(M_PI);
      CHECK(lhs <= rhs + 1e-12);
    }
  }
  SUBCASE("logarithmic kernel: both the generic and displayed bounds hold") {
    auto k = AttenuationKernel::from(make_log_g(1.0, 1.0, 1.0, 1.0, 1.0));
    auto bc = upper_bound_check(k, rs, tau_grid);
    REQUIRE(bc.status == BoundCheck::Status::checked);
    CHECK(bc.max_violation <= 1e-3);
    REQUIRE(bc.max_violation_displayed);
    CHECK(*bc.max_violation_displayed <= 1e-3);
  }
  SUBCASE("single-atom kernel: refused with the failing abscissa") {
    auto k = AttenuationKernel::from(make_atom_g(1.0, 1.0, 1.0, 1.0));
    auto bc = upper_bound_check(k, rs, tau_grid);
    REQUIRE(bc.status == BoundCheck::Status::refused);
    CHECK(bc.hypothesis_failing_tau > 0.0);
    CHECK(bc.diagnostic.find("increases") != std::string::npos);
    // -t g'(t) = t e^{-t} peaks at t = 1; the probe must trip past it
    CHECK(bc.hypothesis_failing_tau > 0.5);
  }
  SUBCASE("elastic: trivially tight, zero violation") {
    auto k = AttenuationKernel::from(make_elastic(1.0));
    auto bc = upper_bound_check(k, rs, tau_grid);
    CHECK(bc.status == BoundCheck::Status::checked);
    CHECK(bc.max_violation <= 1e-9);
  }
}

TEST_CASE("stepwise regularization exponent r*b") {
  for (double r : {1.0, 2.0}) {
    for (double b : {1.0, 2.0}) {
      auto k = AttenuationKernel::from(make_log_g(1.0, 1.0, b, 1.0, 1.0));
      auto window = geomspace(1e-4, 1e-3, 9);
      auto fit = regularization_exponent(k, r, window);
      REQUIRE(fit.ok);
      CHECK(std::abs(fit.exponent - r * b) <= 0.1 * r * b);
    }
  }
  // window validation
  auto k = AttenuationKernel::from(make_log_g(1.0, 1.0, 1.0, 1.0, 1.0));
  auto narrow = geomspace(1e-4, 2e-4, 5);
  CHECK_FALSE(regularization_exponent(k, 1.0, narrow).ok);
}

TEST_CASE("slow-variation diagnostic of l(p) = exp(-p g~(p) r)") {
  double lambdas[1] = {2.0};
  auto ps = geomspace(1e2, 1e6, 5);
  SUBCASE("elastic: deviation identically zero") {
    auto k = AttenuationKernel::from(make_elastic(1.0));
    for (auto& pt : slowly_varying_check(k, lambdas, ps))
      CHECK(pt.deviation <= 1e-14);
  }
  SUBCASE("finite-g0 kernel: deviations decay") {
    auto k = AttenuationKernel::from(make_zener(1.0, 1.0, 1.0, 1.0));
    auto pts = slowly_varying_check(k, lambdas, ps);
    CHECK(pts.back().deviation < pts.front().deviation);
    CHECK(pts.back().deviation < 1e-4);
  }
  SUBCASE("power-law kernel: not slowly varying, deviation saturates") {
    auto k = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
    auto pts = slowly_varying_check(k, lambdas, ps);
    // l(2p)/l(p) = e^{-(sqrt 2 - 1) sqrt p} -> 0, so |ratio - 1| -> 1
    CHECK(pts.back().deviation == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("kernel sits below the scaled creep rate") {
  auto ts = geomspace(1e-2, 10.0, 25);
  SUBCASE("standard linear solid: g(t) <= e^{-t}/2") {
    double v = g_vs_creep_rate_check(make_zener(1, 1, 1, 1), ts);
    CHECK(v <= 1e-6);
    // and the bound is genuinely attained only at t = 0: interior gap > 0
    CHECK(v < 0.0);
  }
  SUBCASE("elastic: 0 <= 0") {
    double v = g_vs_creep_rate_check(make_elastic(1.0), ts);
    CHECK(v == doctest::Approx(0.0));
  }
  SUBCASE("direct models are rejected") {
    CHECK_THROWS_AS(g_vs_creep_rate_check(make_powerlaw_g(1, 1, 0.5), ts),
                    std::invalid_argument);
  }
}

TEST_CASE("wavefront report assembly and serialization") {
  auto rep = make_wavefront_report(make_zener(1.0, 1.0, 1.0, 1.0), 1.0);
  CHECK(rep.criterion.kind == JumpCriterionResult::Kind::discontinuous);
  REQUIRE(rep.amplitude);
  CHECK(rep.amplitude->value == doctest::Approx(0.303265).epsilon(1e-5));
  auto text = rep.to_text();
  CHECK(text.find("discontinuous") != std::string::npos);
  auto json = rep.to_json();
  CHECK(json.find("\"g0\"") != std::string::npos);
  CHECK(json.find("jump_amplitude") != std::string::npos);

  auto rep2 = make_wavefront_report(make_log_g(1.0, 1.0, 1.0, 1.0, 1.0), 1.0);
  CHECK(rep2.criterion.kind == JumpCriterionResult::Kind::continuous);
  REQUIRE(rep2.regularization);
  CHECK(rep2.regularization->exponent == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("Bernstein pair positive instance: x H~(x) from the kernel machinery") {
  // H~(p) = e^{-p g~(p) r}/p is the transform of the non-decreasing H, so
  // x H~(x) must be completely monotone
  auto k = AttenuationKernel::from(make_zener(1.0, 1.0, 1.0, 1.0));
  auto grid = geomspace(1e-1, 1e3, 49);
  auto rep = check_bernstein_pair(
      [&k](double x) {
        double pg = k.p_g_tilde(cplx(x, 0.0)).real();
        return std::exp(-pg) / x;
      },
      grid, 4);
  CHECK(rep.pass(1e-7));
}
