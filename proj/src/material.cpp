#include "vewave/material.hpp"

#include <cmath>
#include <stdexcept>

namespace vewave {

MaterialModel make_zener(double J0, double J1, double tau, double rho) {
  if (!(J0 > 0.0) || J1 < 0.0 || !(tau > 0.0) || !(rho > 0.0))
    throw std::invalid_argument("make_zener: need J0 > 0, J1 >= 0, tau > 0, rho > 0");
  CreepCompliance J;
  J.J0 = J0;
  J.rate = CMFunction::exponential_atom(J1 / tau, 1.0 / tau);
  MaterialModel m;
  m.rho = rho;
  m.law = std::move(J);
  m.label = "zener";
  return m;
}

MaterialModel make_elastic(double J0, double rho) {
  auto m = make_zener(J0, 0.0, 1.0, rho);
  m.label = "elastic";
  return m;
}

MaterialModel make_powerlaw_g(double c0, double a, double alpha, double rho) {
  if (!(c0 > 0.0) || !(rho > 0.0))
    throw std::invalid_argument("make_powerlaw_g: need c0 > 0, rho > 0");
  DirectSpec d;
  d.c0 = c0;
  d.g = CMFunction::power_law(a, alpha);  // validates a, alpha
  MaterialModel m;
  m.rho = rho;
  m.law = std::move(d);
  m.label = "powerlaw_g";
  return m;
}

MaterialModel make_log_g(double c0, double a, double b, double A, double rho) {
  if (!(c0 > 0.0) || !(rho > 0.0))
    throw std::invalid_argument("make_log_g: need c0 > 0, rho > 0");
  DirectSpec d;
  d.c0 = c0;
  d.g = CMFunction::logarithmic(a, b, A);  // validates a, b, A >= 1
  MaterialModel m;
  m.rho = rho;
  m.law = std::move(d);
  m.label = "log_g";
  return m;
}

MaterialModel make_atom_g(double c0, double w, double rate, double rho) {
  if (!(c0 > 0.0) || !(rho > 0.0))
    throw std::invalid_argument("make_atom_g: need c0 > 0, rho > 0");
  DirectSpec d;
  d.c0 = c0;
  d.g = CMFunction::exponential_atom(w, rate);
  MaterialModel m;
  m.rho = rho;
  m.law = std::move(d);
  m.label = "atom_g";
  return m;
}

MaterialModel make_direct_g(double c0, CMFunction g, double rho,
                            std::string label) {
  if (!(c0 > 0.0) || !(rho > 0.0))
    throw std::invalid_argument("make_direct_g: need c0 > 0, rho > 0");
  DirectSpec d;
  d.c0 = c0;
  d.g = std::move(g);
  MaterialModel m;
  m.rho = rho;
  m.law = std::move(d);
  m.label = std::move(label);
  return m;
}

Limit creep_rate_limit(const CreepCompliance& J) { return J.rate.limit_at_zero(); }

}  // namespace vewave
