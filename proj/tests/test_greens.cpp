#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "vewave/cm_checks.hpp"
#include "vewave/greens.hpp"

using namespace vewave;

TEST_CASE("wavefront kernel: power-law closed form across tau and r") {
  auto k = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
  for (double r : {0.5, 1.0, 2.0}) {
    for (double tau : geomspace(1e-3, 10.0, 14)) {
      double ln_ref = oracles::log_erfc(r / (2.0 * std::sqrt(tau)));
      double ln_got = kernel_H_scaled(k, r, tau).log_value();
      CHECK(std::abs(ln_got - ln_ref) < 1e-7);
    }
  }
}

TEST_CASE("wavefront kernel: elastic medium is the unit step") {
  auto k = AttenuationKernel::from(make_elastic(1.0, 1.0));
  for (double tau : {1e-4, 1.0, 1e3}) {
    CHECK(kernel_H_scaled(k, 1.0, tau).value() ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(kernel_H_scaled(k, 0.0, 0.5).value() == 1.0);  // r = 0
}

TEST_CASE("wavefront kernel: standard linear solid jump limit") {
  auto k = AttenuationKernel::from(make_zener(1.0, 1.0, 1.0, 1.0));
  // H(0+) = e^{-g(0+) r} = e^{-1/2}; extrapolate tau -> 0
  double h1 = kernel_H_scaled(k, 1.0, 1e-3).value();
  double h2 = kernel_H_scaled(k, 1.0, 5e-4).value();
  double extrapolated = 2.0 * h2 - h1;
  CHECK(extrapolated == doctest::Approx(std::exp(-0.5)).epsilon(1e-5));
  // monotone in tau, saturates at 1
  auto taus = geomspace(1e-3, 1e3, 25);
  auto tab = wavefront_kernel(k, 1.0, taus);
  for (std::size_t i = 1; i < tab.H.size(); ++i)
    CHECK(tab.H[i] >= tab.H[i - 1] - 1e-11);
  CHECK(tab.H.back() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tab.H.front() >= std::exp(-0.5) - 1e-9);
}

TEST_CASE("kernel bounds 0 <= H <= 1 across the catalog") {
  auto taus = geomspace(1e-3, 1e2, 21);
  for (auto m : {make_zener(1, 1, 1, 1), make_powerlaw_g(1, 1, 0.5),
                 make_log_g(1, 1, 1, 1), make_atom_g(1, 1, 1)}) {
    auto k = AttenuationKernel::from(m);
    auto tab = wavefront_kernel(k, 1.0, taus);
    for (double H : tab.H) {
      CHECK(H >= -1e-10);
      CHECK(H <= 1.0 + 1e-10);
    }
  }
}

TEST_CASE("f integral") {
  auto kp = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
  CHECK(f_integral(kp, 1.0) == doctest::Approx(1.1283791670955126).epsilon(1e-12));
  CHECK(f_integral(kp, 0.0) == 0.0);
  auto ke = AttenuationKernel::from(make_elastic(1.0));
  CHECK(f_integral(ke, 3.0) == 0.0);
  double prev = 0.0;
  for (double t : geomspace(1e-3, 10, 17)) {
    double v = f_integral(kp, t);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("greens_u: elastic limit is the scaled step") {
  auto k = AttenuationKernel::from(make_elastic(1.0, 1.0));
  CHECK(greens_u(k, 2.0, 1.0).u == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(greens_u(k, 0.5, 1.0).u == 0.0);
  CHECK(greens_u(k, 0.5, 1.0).flag == FrontFlag::pre_front);
  CHECK(greens_u(k, 1.0, 1.0).flag == FrontFlag::at_front);
  CHECK(greens_u(k, 1.0, 1.0).u == doctest::Approx(0.5).epsilon(1e-12));
  // rho scaling: 1/(2 rho)
  auto k4 = AttenuationKernel::from(make_elastic(1.0, 4.0));
  CHECK(greens_u(k4, 3.0, 1.0).u == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("greens_u_direct: elastic limit") {
  auto k = AttenuationKernel::from(make_elastic(1.0, 1.0));
  CHECK(greens_u_direct(k, 2.0, 1.0).u == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(greens_u_direct(k, 0.5, 1.0).u == 0.0);
}

TEST_CASE("standard linear solid: jump top from direct inversion") {
  auto k = AttenuationKernel::from(make_zener(1.0, 1.0, 1.0, 1.0));
  // u(tau -> 0+) = e^{-1/2}/2 = 0.30326532985631671
  double u1 = greens_u_direct(k, 1.0 + 1e-3, 1.0).u;
  double u2 = greens_u_direct(k, 1.0 + 5e-4, 1.0).u;
  double extrapolated = 2.0 * u2 - u1;
  CHECK(extrapolated == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-4));
  // flagged one-sided value exactly at the front
  auto at = greens_u_direct(k, 1.0, 1.0);
  CHECK(at.flag == FrontFlag::at_front);
  CHECK(at.u == doctest::Approx(0.5 * std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("causality: both routes vanish ahead of the front") {
  for (auto m : {make_zener(1, 1, 1, 1), make_powerlaw_g(1, 1, 0.5)}) {
    auto k = AttenuationKernel::from(m);
    for (double t : {0.2, 0.9}) {
      CHECK(greens_u(k, t, 1.0).u == 0.0);
      CHECK(greens_u_direct(k, t, 1.0).u == 0.0);
    }
  }
}

TEST_CASE("mutual oracle: convolution route vs direct inversion") {
  // grids stay away from the wavefront band (tau > 1e-3)
  SUBCASE("standard linear solid") {
    auto k = AttenuationKernel::from(make_zener(1.0, 1.0, 1.0, 1.0));
    for (double tau : {0.01, 0.1, 0.5, 2.0, 8.0}) {
      double a = greens_u(k, 1.0 + tau, 1.0).u;
      double b = greens_u_direct(k, 1.0 + tau, 1.0).u;
      CHECK(std::abs(a - b) <= 2e-6 * std::max(1.0, std::abs(b)));
    }
  }
  SUBCASE("power-law kernel") {
    auto k = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
    for (double x : {0.5, 1.0}) {
      for (double tau : {0.05, 0.4, 2.0}) {
        double a = greens_u(k, x + tau, x).u;
        double b = greens_u_direct(k, x + tau, x).u;
        CHECK(std::abs(a - b) <= 2e-6 * std::max(1.0, std::abs(b)));
      }
    }
  }
  SUBCASE("logarithmic kernel") {
    auto k = AttenuationKernel::from(make_log_g(1.0, 1.0, 1.0, 1.0, 1.0));
    for (double tau : {0.05, 0.5, 3.0}) {
      double a = greens_u(k, 1.0 + tau, 1.0).u;
      double b = greens_u_direct(k, 1.0 + tau, 1.0).u;
      CHECK(std::abs(a - b) <= 2e-6 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("greens_u is non-negative on catalog models") {
  for (auto m : {make_zener(1, 1, 1, 1), make_powerlaw_g(1, 1, 0.5),
                 make_log_g(1, 1, 1, 1)}) {
    auto k = AttenuationKernel::from(m);
    for (double tau : geomspace(1e-2, 5.0, 7))
      CHECK(greens_u(k, 1.0 + tau, 1.0).u >= -1e-10);
  }
}

TEST_CASE("convolution inequality (f * H) <= H integral f") {
  auto k = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
  double r = 1.0;
  for (double tau : {0.3, 1.0, 3.0}) {
    // (f*H)(tau) via panel quadrature; f is bounded so plain panels suffice
    int n = 4000;
    double conv = 0.0, intf = 0.0;
    double h = tau / n;
    for (int i = 0; i < n; ++i) {
      double s = (i + 0.5) * h;
      double fs = f_integral(k, s);
      conv += fs * kernel_H_scaled(k, r, tau - s + 0.5 * h).value() * h;
      intf += fs * h;
    }
    double rhs = kernel_H_scaled(k, r, tau).value() * intf;
    CHECK(conv <= rhs * (1.0 + 1e-6) + 1e-12);
  }
}

TEST_CASE("direct route at x = 0") {
  auto k = AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
  double t = 0.7;
  CHECK(greens_u_direct(k, t, 0.0).u ==
        doctest::Approx(0.5 * (1.0 + f_integral(k, t))).epsilon(1e-12));
  CHECK(greens_u(k, t, 0.0).u ==
        doctest::Approx(0.5 * (1.0 + f_integral(k, t))).epsilon(1e-6));
}
