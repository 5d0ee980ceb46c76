#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "vewave/spectral_measure.hpp"

namespace vewave {

struct Limit {
  enum class Kind { finite, infinite, undetermined };
  Kind kind = Kind::finite;
  double value = 0.0;
  bool finite() const { return kind == Kind::finite; }
};

struct EvalResult {
  double value = 0.0;
  bool accuracy_warning = false;  // measure grid too coarse for requested t
};

// Completely monotone function on ]0,inf[, represented as a sum of closed
// form terms and/or a discretized spectral measure (Bernstein representation
// f(t) = integral e^{-rt} dnu).
//
// Closed forms carry their own Laplace transforms, antiderivatives and
// boundary data, so downstream code never has to re-derive them:
//   power_law      a t^{-alpha}/Gamma(1-alpha)      <->  p g~(p) = a p^alpha
//   exponential    w e^{-rate t}                    <->  p g~(p) = w p/(p+rate)
//   logarithmic    b ln(1/(a t) + A)                <->  closed form via E1
//   constant       c                                <->  p g~(p) = c
class CMFunction {
 public:
  struct PowerLaw { double a, alpha; };        // 0 < alpha < 1, a > 0
  struct Exponential { double w, rate; };      // w >= 0, rate > 0
  struct Logarithmic { double a, b, A; };      // a,b > 0, A >= 1
  struct Constant { double c; };               // c >= 0
  using Term =
      std::variant<PowerLaw, Exponential, Logarithmic, Constant, SpectralMeasure>;

  CMFunction() = default;

  static CMFunction zero() { return CMFunction(); }
  static CMFunction power_law(double a, double alpha);
  static CMFunction exponential_atom(double w, double rate);
  static CMFunction logarithmic(double a, double b, double A);
  static CMFunction constant(double c);
  static CMFunction from_measure(SpectralMeasure m);

  CMFunction& operator+=(const CMFunction& other);

  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  // f(t); throws std::domain_error for t <= 0
  double eval(double t) const;
  EvalResult eval_checked(double t) const;
  // df/dt (analytic per term)
  double deriv(double t) const;
  // g~(p) = integral_0^inf e^{-pt} f(t) dt; throws for Re p <= 0
  cplx laplace(cplx p) const;
  // p * g~(p), formed term-wise so the large-p regime stays well conditioned
  cplx p_laplace(cplx p) const;
  // Analytic continuation of p g~(p) to C minus the negative real axis;
  // used by deformed inversion contours and boundary-value extraction.
  cplx p_laplace_analytic(cplx p) const;
  cplx laplace_analytic(cplx p) const { return p_laplace_analytic(p) / p; }
  // F(t) = integral_0^t f;  F(0) = 0, non-decreasing
  double integral0(double t) const;
  // integral_0^t F(s) ds
  double integral00(double t) const;

  Limit limit_at_zero() const;
  double limit_at_infinity() const;

  // Total mass of the representing measure (== limit at zero when finite).
  MassReport mass() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace vewave
