#pragma once

#include <complex>

namespace vewave {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// exp(z) - 1 with full relative accuracy for small |z|.
cplx expm1c(cplx z);

// e^z * E1(z) for complex z off the cut (-inf, 0].  This product stays O(1/z)
// for large |z| in any direction, so it never over/underflows where E1 or
// e^z alone would.
cplx exp_e1(cplx z);

// Exponential integral E1(z), principal branch.
cplx e1(cplx z);

}  // namespace vewave
