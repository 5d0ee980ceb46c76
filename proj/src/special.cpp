#include "vewave/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vewave {

cplx expm1c(cplx z) {
  if (std::abs(z) < 1e-4) {
    // z + z^2/2 + z^3/6 + z^4/24
    return z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0)));
  }
  return std::exp(z) - 1.0;
}

namespace {

// Power series: e^z * (-gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)).
// Terms are all positive for z on the negative real axis, so there is no
// cancellation where the series is needed most (near the cut).
cplx exp_e1_series(cplx z) {
  cplx sum = 0.0;
  cplx term = 1.0;
  for (int k = 1; k <= 120; ++k) {
    term *= -z / static_cast<double>(k);
    cplx add = -term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum) && k > 4) break;
  }
  return std::exp(z) * (-kEulerGamma - std::log(z) + sum);
}

// Continued fraction (modified Lentz) for e^z E1(z),
//   e^z E1(z) = 1/(z+ 1/(1+ 1/(z+ 2/(1+ 2/(z+ ...)))))
// Good for Re z >= 0 away from the origin.
cplx exp_e1_cf(cplx z) {
  const double tiny = 1e-290;
  cplx b = z + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i <= 200; ++i) {
    double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    if (c == cplx(0.0)) c = tiny;
    cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

// Asymptotic series e^z E1(z) ~ (1/z) sum (-1)^k k! / z^k, truncated at the
// smallest term.
cplx exp_e1_asymptotic(cplx z) {
  cplx sum = 1.0;
  cplx term = 1.0;
  double best = std::numeric_limits<double>::max();
  for (int k = 1; k <= 40; ++k) {
    term *= -static_cast<double>(k) / z;
    double m = std::abs(term);
    if (m > best) break;
    best = m;
    sum += term;
  }
  return sum / z;
}

}  // namespace

cplx exp_e1(cplx z) {
  if (z == cplx(0.0) || (z.imag() == 0.0 && z.real() < 0.0))
    throw std::domain_error("exp_e1: argument on the branch cut");
  double m = std::abs(z);
  // The series suffers cancellation only where Re z is substantially
  // positive relative to |z|; the fraction converges everywhere off the cut
  // but slows near it.  Near the cut the series terms are essentially
  // one-signed, so it is the accurate choice there.
  if (m >= 8.0 && z.real() >= -0.3 * m) return exp_e1_cf(z);
  if (m <= 32.0) return exp_e1_series(z);
  return exp_e1_asymptotic(z);
}

cplx e1(cplx z) { return std::exp(-z) * exp_e1(z); }

}  // namespace vewave
