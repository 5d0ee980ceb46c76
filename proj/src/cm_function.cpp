#include "vewave/cm_function.hpp"

#include <cmath>
#include <stdexcept>

namespace vewave {

namespace {

void require_time(double t) {
  if (!(t > 0.0)) throw std::domain_error("CMFunction: requires t > 0");
}

void require_right_half(cplx p) {
  if (!(p.real() > 0.0))
    throw std::domain_error(
        "CMFunction: Laplace transform requires Re p > 0 "
        "(boundary values go through the dispersion module)");
}

// integral_0^t b ln(1/(a s) + A) ds
double log_integral0(const CMFunction::Logarithmic& L, double t) {
  double x = L.a * L.A * t;
  double term1 = ((1.0 + x) * std::log1p(x) - x) / (L.a * L.A);
  double term2 = t * std::log(L.a * t) - t;
  return L.b * (term1 - term2);
}

// adaptive Simpson, used only for rarely-needed second antiderivatives
double simpson_adaptive(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double eps,
                        int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson_adaptive(f, a, m, fa, flm, fm, 0.5 * eps, depth - 1) +
         simpson_adaptive(f, m, b, fm, frm, fb, 0.5 * eps, depth - 1);
}

}  // namespace

CMFunction CMFunction::power_law(double a, double alpha) {
  if (!(a > 0.0) || !(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("power_law: need a > 0 and 0 < alpha < 1");
  CMFunction f;
  f.terms_.push_back(PowerLaw{a, alpha});
  return f;
}

CMFunction CMFunction::exponential_atom(double w, double rate) {
  if (w < 0.0 || !(rate > 0.0))
    throw std::invalid_argument("exponential_atom: need w >= 0 and rate > 0");
  CMFunction f;
  if (w > 0.0) f.terms_.push_back(Exponential{w, rate});
  return f;
}

CMFunction CMFunction::logarithmic(double a, double b, double A) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("logarithmic: need a, b > 0");
  if (!(A >= 1.0))
    throw std::invalid_argument("logarithmic: need A >= 1");
  CMFunction f;
  f.terms_.push_back(Logarithmic{a, b, A});
  return f;
}

CMFunction CMFunction::constant(double c) {
  if (c < 0.0) throw std::invalid_argument("constant: need c >= 0");
  CMFunction f;
  if (c > 0.0) f.terms_.push_back(Constant{c});
  return f;
}

CMFunction CMFunction::from_measure(SpectralMeasure m) {
  m.validate();
  CMFunction f;
  f.terms_.push_back(std::move(m));
  return f;
}

CMFunction& CMFunction::operator+=(const CMFunction& other) {
  for (const auto& t : other.terms_) terms_.push_back(t);
  return *this;
}

double CMFunction::eval(double t) const { return eval_checked(t).value; }

EvalResult CMFunction::eval_checked(double t) const {
  require_time(t);
  EvalResult res;
  for (const auto& term : terms_) {
    if (auto* pl = std::get_if<PowerLaw>(&term)) {
      res.value += pl->a * std::pow(t, -pl->alpha) / std::tgamma(1.0 - pl->alpha);
    } else if (auto* ex = std::get_if<Exponential>(&term)) {
      res.value += ex->w * std::exp(-ex->rate * t);
    } else if (auto* lg = std::get_if<Logarithmic>(&term)) {
      res.value += lg->b * (std::log1p(lg->a * lg->A * t) - std::log(lg->a * t));
    } else if (auto* c = std::get_if<Constant>(&term)) {
      res.value += c->c;
    } else {
      const auto& m = std::get<SpectralMeasure>(term);
      res.value += m.exp_moment(t);
      if (!m.nodes().empty()) {
        // the grid resolves e^{-rt} only if the decay scale 1/t lies inside it
        if (t * m.nodes().back() < 1.0 || t * m.nodes().front() > 1.0)
          res.accuracy_warning = true;
      }
    }
  }
  return res;
}

double CMFunction::deriv(double t) const {
  require_time(t);
  double d = 0.0;
  for (const auto& term : terms_) {
    if (auto* pl = std::get_if<PowerLaw>(&term)) {
      d -= pl->a * pl->alpha * std::pow(t, -pl->alpha - 1.0) /
           std::tgamma(1.0 - pl->alpha);
    } else if (auto* ex = std::get_if<Exponential>(&term)) {
      d -= ex->w * ex->rate * std::exp(-ex->rate * t);
    } else if (auto* lg = std::get_if<Logarithmic>(&term)) {
      d -= lg->b / (t * (1.0 + lg->a * lg->A * t));
    } else if (std::get_if<Constant>(&term)) {
      // zero
    } else {
      const auto& m = std::get<SpectralMeasure>(term);
      d -= m.integrate([t](double r) { return r * std::exp(-r * t); });
    }
  }
  return d;
}

cplx CMFunction::p_laplace(cplx p) const {
  require_right_half(p);
  return p_laplace_analytic(p);
}

cplx CMFunction::p_laplace_analytic(cplx p) const {
  cplx s = 0.0;
  for (const auto& term : terms_) {
    if (auto* pl = std::get_if<PowerLaw>(&term)) {
      s += pl->a * std::pow(p, pl->alpha);
    } else if (auto* ex = std::get_if<Exponential>(&term)) {
      s += ex->w * p / (p + ex->rate);
    } else if (auto* lg = std::get_if<Logarithmic>(&term)) {
      cplx z = p / (lg->a * lg->A);
      s += lg->b * (std::log(lg->A) + kEulerGamma + std::log(z) + exp_e1(z));
    } else if (auto* c = std::get_if<Constant>(&term)) {
      s += c->c;
    } else {
      s += std::get<SpectralMeasure>(term).p_stieltjes(p);
    }
  }
  return s;
}

cplx CMFunction::laplace(cplx p) const { return p_laplace(p) / p; }

double CMFunction::integral0(double t) const {
  if (t == 0.0) return 0.0;
  require_time(t);
  double s = 0.0;
  for (const auto& term : terms_) {
    if (auto* pl = std::get_if<PowerLaw>(&term)) {
      s += pl->a * std::pow(t, 1.0 - pl->alpha) /
           ((1.0 - pl->alpha) * std::tgamma(1.0 - pl->alpha));
    } else if (auto* ex = std::get_if<Exponential>(&term)) {
      s += ex->w * (-std::expm1(-ex->rate * t)) / ex->rate;
    } else if (auto* lg = std::get_if<Logarithmic>(&term)) {
      s += log_integral0(*lg, t);
    } else if (auto* c = std::get_if<Constant>(&term)) {
      s += c->c * t;
    } else {
      s += std::get<SpectralMeasure>(term).growth_moment(t);
    }
  }
  return s;
}

double CMFunction::integral00(double t) const {
  if (t == 0.0) return 0.0;
  require_time(t);
  double s = 0.0;
  for (const auto& term : terms_) {
    if (auto* pl = std::get_if<PowerLaw>(&term)) {
      s += pl->a * std::pow(t, 2.0 - pl->alpha) /
           ((2.0 - pl->alpha) * (1.0 - pl->alpha) * std::tgamma(1.0 - pl->alpha));
    } else if (auto* ex = std::get_if<Exponential>(&term)) {
      double x = ex->rate * t;
      double v = (x < 1e-4) ? t * t * (0.5 - x / 6.0 + x * x / 24.0)
                            : (t + std::expm1(-x) / ex->rate) / ex->rate;
      s += ex->w * v;
    } else if (auto* lg = std::get_if<Logarithmic>(&term)) {
      auto f = [lg](double u) { return log_integral0(*lg, u); };
      s += simpson_adaptive(f, 0.0, t, 0.0, f(0.5 * t), f(t), 1e-12 * t, 40);
    } else if (auto* c = std::get_if<Constant>(&term)) {
      s += 0.5 * c->c * t * t;
    } else {
      s += std::get<SpectralMeasure>(term).growth_moment2(t);
    }
  }
  return s;
}

Limit CMFunction::limit_at_zero() const {
  Limit lim;
  for (const auto& term : terms_) {
    if (std::get_if<PowerLaw>(&term) || std::get_if<Logarithmic>(&term)) {
      lim.kind = Limit::Kind::infinite;
      return lim;
    }
    if (auto* ex = std::get_if<Exponential>(&term)) {
      lim.value += ex->w;
    } else if (auto* c = std::get_if<Constant>(&term)) {
      lim.value += c->c;
    } else {
      auto rep = std::get<SpectralMeasure>(term).total_mass();
      if (rep.cls == MassClass::infinite) {
        lim.kind = Limit::Kind::infinite;
        return lim;
      }
      if (rep.cls == MassClass::undetermined) lim.kind = Limit::Kind::undetermined;
      lim.value += rep.value;
    }
  }
  return lim;
}

double CMFunction::limit_at_infinity() const {
  double v = 0.0;
  for (const auto& term : terms_) {
    if (auto* lg = std::get_if<Logarithmic>(&term))
      v += lg->b * std::log(lg->A);
    else if (auto* c = std::get_if<Constant>(&term))
      v += c->c;
  }
  return v;
}

MassReport CMFunction::mass() const {
  auto lim = limit_at_zero();
  MassReport rep;
  rep.value = lim.value;
  rep.cls = lim.kind == Limit::Kind::finite      ? MassClass::finite
            : lim.kind == Limit::Kind::infinite  ? MassClass::infinite
                                                 : MassClass::undetermined;
  return rep;
}

}  // namespace vewave
