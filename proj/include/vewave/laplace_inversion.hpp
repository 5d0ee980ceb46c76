#pragma once

#include <functional>

#include "vewave/special.hpp"

namespace vewave {

// Transform evaluator handed to the inversion engine as log F(p).  Working
// with logarithms keeps kernels like exp(-p g~(p) r)/p evaluable where the
// transform itself underflows, and lets the quadrature normalize all terms
// to the contour peak.  Any 2*pi*i ambiguity in the log cancels when the
// engine re-exponentiates.
class LogTransform {
 public:
  explicit LogTransform(std::function<cplx(cplx)> logF) : logF_(std::move(logF)) {}

  static LogTransform from_plain(std::function<cplx(cplx)> F) {
    return LogTransform([F = std::move(F)](cplx p) { return std::log(F(p)); });
  }

  cplx operator()(cplx p) const { return logF_(p); }

 private:
  std::function<cplx(cplx)> logF_;
};

struct InversionOptions {
  int nodes = 64;            // Talbot nodes; auto-raised for steep saddles
  int node_limit = 1 << 20;  // cap on the automatic raise
  bool saddle_search = true; // shift the contour through the real-axis saddle
  double saddle_p_max = 1e15;
};

// Result in scaled form value = mantissa * exp(log_scale); value() collapses
// to a plain double (0 on underflow).
struct Inverted {
  double log_scale = 0.0;
  double mantissa = 0.0;
  bool ok = true;

  double value() const;
  // log of a positive result; -inf when the mantissa is non-positive
  double log_value() const;
};

// Numerical inverse Laplace transform at t > 0 of a transform analytic off
// the negative real axis: midpoint Talbot quadrature on
// s(theta) = sigma * theta * (cot theta + i).  The crossing sigma is the
// larger of the classical 2M/(5t) and the real-axis maximum of
// Re[log F(p)] + p t, which keeps the quadrature error relative to the
// result even deep in wavefront tails.
Inverted invert_laplace_scaled(const LogTransform& F, double t,
                               const InversionOptions& opts = {});

double invert_laplace(const LogTransform& F, double t,
                      const InversionOptions& opts = {});

}  // namespace vewave
