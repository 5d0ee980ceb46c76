#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "vewave/cm_checks.hpp"
#include "vewave/dispersion.hpp"

using namespace vewave;

TEST_CASE("wavenumber of the catalog models") {
  SUBCASE("elastic: kappa(p) = p/c0 exactly") {
    auto m = make_elastic(1.0, 1.0);
    for (double p : {0.1, 1.0, 100.0}) {
      CHECK(kappa(m, cplx(p, 0)).real() == doctest::Approx(p).epsilon(1e-14));
      CHECK(std::abs(kappa(m, cplx(p, 0)).imag()) < 1e-14);
    }
  }
  SUBCASE("power-law: kappa(4) = 4 + 2") {
    auto m = make_powerlaw_g(1.0, 1.0, 0.5, 1.0);
    CHECK(kappa(m, cplx(4.0, 0)).real() == doctest::Approx(6.0).epsilon(1e-14));
  }
  SUBCASE("standard linear solid: kappa(1) = sqrt(1.5)") {
    auto m = make_zener(1.0, 1.0, 1.0, 1.0);
    CHECK(kappa(m, cplx(1.0, 0)).real() ==
          doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
  }
  SUBCASE("boundary arguments are rejected") {
    auto m = make_zener(1.0, 1.0, 1.0, 1.0);
    CHECK_THROWS_AS(kappa(m, cplx(-1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(kappa(m, cplx(0.0, 2.0)), std::domain_error);
  }
}

TEST_CASE("wavefront speed") {
  CHECK(wavefront_speed(make_zener(1, 1, 1, 1)) == doctest::Approx(1.0));
  CHECK(wavefront_speed(make_elastic(1.0, 4.0)) == doctest::Approx(0.5));
  CHECK(wavefront_speed(make_powerlaw_g(3.0, 1.0, 0.5)) == doctest::Approx(3.0));
}

TEST_CASE("extracted spectral density of the standard linear solid") {
  auto m = make_zener(1.0, 1.0, 1.0, 1.0);
  auto nu = extract_density(m);
  REQUIRE_FALSE(nu.empty());
  // support is the window ]1, 2[ where p J~(-r) = 1 + 1/(1-r) is negative
  CHECK(nu.nodes().front() > 1.0);
  CHECK(nu.nodes().back() < 2.0);
  // closed-form density (independent algebra): h(r) = sqrt((2-r)/(r-1))/pi
  for (std::size_t j = 0; j < nu.nodes().size(); j += 7) {
    double r = nu.nodes()[j];
    double exact = std::sqrt((2.0 - r) / (r - 1.0)) / M_PI;
    CHECK(nu.density()[j] == doctest::Approx(exact).epsilon(1e-10));
  }
  // total mass = g(0+) = rho c0 J'(0+)/2 = 1/2
  auto mass = nu.total_mass();
  CHECK(mass.cls == MassClass::finite);
  CHECK(mass.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("extracted density of the elastic model is empty") {
  CHECK(extract_density(make_elastic(1.0)).empty());
}

TEST_CASE("extract_density refuses direct models") {
  CHECK_THROWS_AS(extract_density(make_powerlaw_g(1, 1, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("attenuation kernel g(t) for the standard linear solid") {
  auto m = make_zener(1.0, 1.0, 1.0, 1.0);
  auto k = AttenuationKernel::from(m);
  // Bessel closed form oracle
  for (double t : {1e-3, 0.1, 1.0, 5.0}) {
    CHECK(k.g(t) == doctest::Approx(oracles::zener_g_closed(t)).epsilon(1e-10));
  }
  // g(0+) = 1/2 via the jump identity; extrapolate the kernel toward zero
  CHECK(k.g(1e-7) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(k.g0().value == doctest::Approx(0.5).epsilon(1e-12));
  // round trip through the transform: p g~(p) from the measure matches
  // kappa - p/c0 (independent route)
  for (double p : {0.01, 1.0, 100.0}) {
    double route1 = k.p_g_tilde(cplx(p, 0)).real();
    double route2 = k.g_fn().p_laplace(cplx(p, 0)).real();
    CHECK(route1 == doctest::Approx(route2).epsilon(1e-10));
  }
}

TEST_CASE("extracted kernel is completely monotone") {
  auto k = AttenuationKernel::from(make_zener(1.0, 1.0, 1.0, 1.0));
  auto grid = geomspace(1e-2, 1e2, 49);
  auto rep = check_cm([&k](double t) { return k.g(t); }, grid, 4);
  CHECK(rep.pass(1e-7));
}

TEST_CASE("g_of_t convenience matches the kernel") {
  auto m = make_powerlaw_g(1.0, 1.0, 0.5, 1.0);
  CHECK(g_of_t(m, 1.0) == doctest::Approx(0.564190).epsilon(1e-6));
  CHECK(g_of_t(make_elastic(1.0), 1.0) == 0.0);
  CHECK_THROWS_AS(g_of_t(m, -1.0), std::domain_error);
}

TEST_CASE("attenuation and dispersion curves") {
  SUBCASE("elastic: zero attenuation, phase speed c0") {
    auto table = attenuation_dispersion(make_elastic(1.0, 1.0),
                                        geomspace(1e-2, 1e2, 17));
    for (std::size_t i = 0; i < table.omega.size(); ++i) {
      CHECK(std::abs(table.attenuation[i]) < 1e-14);
      CHECK(table.phase_speed[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("power-law: A = omega^alpha cos(alpha pi/2)") {
    auto m = make_powerlaw_g(1.0, 1.0, 0.5, 1.0);
    auto table = attenuation_dispersion(m, geomspace(1e-1, 1e3, 9));
    for (std::size_t i = 0; i < table.omega.size(); ++i) {
      double w = table.omega[i];
      double exact = std::sqrt(w) * std::cos(M_PI / 4.0);
      CHECK(table.attenuation[i] == doctest::Approx(exact).epsilon(1e-12));
      CHECK(table.phase_speed[i] <= 1.0 + 1e-12);
    }
  }
  SUBCASE("standard linear solid: A grows to the kernel mass g(0+)") {
    auto m = make_zener(1.0, 1.0, 1.0, 1.0);
    std::vector<double> big = {1e5, 1e6};
    auto table = attenuation_dispersion(m, big);
    CHECK(table.attenuation[1] == doctest::Approx(0.5).epsilon(1e-4));
    // monotone on a wide grid, c <= c0 with c -> c0
    auto wide = attenuation_dispersion(m, geomspace(1e-3, 1e6, 28));
    for (std::size_t i = 0; i < wide.omega.size(); ++i) {
      if (i) CHECK(wide.attenuation[i] >= wide.attenuation[i - 1] - 1e-12);
      CHECK(wide.phase_speed[i] <= 1.0 + 1e-12);
    }
    CHECK(wide.phase_speed.back() == doctest::Approx(1.0).epsilon(1e-5));
  }
  SUBCASE("omega must be positive") {
    CHECK_THROWS_AS(attenuation_dispersion(make_elastic(1.0),
                                           std::vector<double>{-1.0}),
                    std::domain_error);
  }
}

TEST_CASE("wavenumber identity: two independent routes") {
  auto ps = geomspace(1e-2, 1e2, 25);
  SUBCASE("standard linear solid below 1e-4") {
    CHECK(kk_identity_residual(make_zener(1, 1, 1, 1), ps) < 1e-4);
  }
  SUBCASE("elastic at round-off") {
    CHECK(kk_identity_residual(make_elastic(1.0), ps) < 1e-14);
  }
  SUBCASE("power-law closed form vs boundary density below 1e-6") {
    CHECK(kk_identity_residual(make_powerlaw_g(1, 1, 0.5), ps) < 1e-6);
  }
  SUBCASE("logarithmic kernel vs boundary density") {
    CHECK(kk_identity_residual(make_log_g(1, 1, 1, 1), ps) < 1e-6);
  }
}

TEST_CASE("kappa is positive and increasing on the real axis; p g~ bounded") {
  auto m = make_zener(1.0, 1.0, 1.0, 1.0);
  auto k = AttenuationKernel::from(m);
  double prev_kappa = 0.0, prev_pg = 0.0;
  for (double p : geomspace(1e-3, 1e6, 37)) {
    double kap = k.kappa(cplx(p, 0)).real();
    double pg = k.p_g_tilde(cplx(p, 0)).real();
    CHECK(kap > prev_kappa);
    CHECK(pg >= prev_pg - 1e-14);
    CHECK(pg >= -1e-15);
    // bounded by rho c0 J'(0+)/2 = 1/2
    CHECK(pg <= 0.5 + 1e-12);
    prev_kappa = kap;
    prev_pg = pg;
  }
  // kappa(p)/p -> 1/c0
  CHECK(k.kappa(cplx(1e8, 0)).real() / 1e8 == doctest::Approx(1.0).epsilon(1e-6));
}
