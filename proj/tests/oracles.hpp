#pragma once

// Independent reference routines for the test suites.  Everything here is
// deliberately written against textbook formulas, not against the library
// implementation paths it is used to check.

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

// ln erfc(x) valid across the full range, including where erfc underflows:
// asymptotic series erfc(x) = e^{-x^2}/(x sqrt(pi)) (1 - 1/(2x^2) + ...)
inline double log_erfc(double x) {
  if (x < 8.0) return std::log(std::erfc(x));
  double inv2 = 1.0 / (2.0 * x * x);
  double series = 0.0, term = 1.0;
  for (int k = 1; k <= 8; ++k) {
    term *= -(2.0 * k - 1.0) * inv2;
    series += term;
  }
  return -x * x - std::log(x * std::sqrt(M_PI)) + std::log1p(series);
}

// Standard linear solid (J0=J1=tau=1, rho=1) attenuation kernel in closed
// form: g(t) = (1/2) e^{-3t/2} [I0(t/2) + I1(t/2)].
inline double zener_g_closed(double t) {
  double x = 0.5 * t;
  return 0.5 * std::exp(-1.5 * t) *
         (std::cyl_bessel_i(0.0, x) + std::cyl_bessel_i(1.0, x));
}

// Numerical Laplace transform of f at real p > 0 via the substitution
// t = e^u and wide trapezoid; handles integrable singularities at 0 and
// exponential decay transparently.
inline double quad_laplace(const std::function<double(double)>& f, double p,
                           double du = 0.03125, double u_span = 46.0) {
  double s = 0.0;
  for (double u = -u_span; u <= u_span; u += du) {
    double t = std::exp(u) / p;  // center the grid on the decay scale
    s += std::exp(-p * t) * f(t) * t * du;
  }
  return s;
}

// E1 by its power series in extended precision; reference for moderate |z|.
inline std::complex<double> e1_series_ref(std::complex<double> z) {
  using C = std::complex<long double>;
  C zl(z.real(), z.imag());
  C sum = 0.0L;
  C term = 1.0L;
  for (int k = 1; k <= 200; ++k) {
    term *= -zl / static_cast<long double>(k);
    sum += -term / static_cast<long double>(k);
    if (std::abs(term) < 1e-24L * (std::abs(sum) + 1.0L) && k > 8) break;
  }
  const long double gammaL = 0.577215664901532860606512090082402431L;
  C v = -gammaL - std::log(zl) + sum;
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// trapezoid quadrature of a real function on [a,b] with n panels
inline double trapz(const std::function<double(double)>& f, double a, double b,
                    int n) {
  double h = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * h);
  return s * h;
}

}  // namespace oracles
