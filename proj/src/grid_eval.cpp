#include "vewave/grid_eval.hpp"

#include <omp.h>

#include <cmath>

namespace vewave {

CurveTable attenuation_table(const MaterialModel& m,
                             std::span<const double> omega, Exec exec) {
  auto kernel = AttenuationKernel::from(m);
  CurveTable out;
  out.c0 = kernel.c0();
  std::size_t n = omega.size();
  out.omega.assign(omega.begin(), omega.end());
  out.attenuation.resize(n);
  out.dispersion.resize(n);
  out.phase_speed.resize(n);
  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long i = 0; i < nn; ++i) {
    cplx pg = kernel.p_g_tilde(cplx(0.0, -omega[i]));
    out.attenuation[i] = pg.real();
    out.dispersion[i] = -pg.imag();
    out.phase_speed[i] = omega[i] / (out.dispersion[i] + omega[i] / out.c0);
  }
  return out;
}

CurveTable attenuation_table_serial(const MaterialModel& m,
                                    std::span<const double> omega) {
  return attenuation_table(m, omega, Exec::serial);
}

KernelTable kernel_table(const AttenuationKernel& k, double r,
                         std::span<const double> taus, Exec exec) {
  KernelTable out;
  out.r = r;
  out.tau.assign(taus.begin(), taus.end());
  std::size_t n = taus.size();
  out.H.resize(n);
  out.ok.resize(n);
  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long i = 0; i < nn; ++i) {
    Inverted v = kernel_H_scaled(k, r, taus[i]);
    out.H[i] = v.value();
    out.ok[i] = v.ok ? 1 : 0;
  }
  return out;
}

KernelTable kernel_table_serial(const AttenuationKernel& k, double r,
                                std::span<const double> taus) {
  return kernel_table(k, r, taus, Exec::serial);
}

FieldTable greens_field(const AttenuationKernel& k, std::span<const double> ts,
                        std::span<const double> xs, Exec exec) {
  FieldTable out;
  out.t.assign(ts.begin(), ts.end());
  out.x.assign(xs.begin(), xs.end());
  std::size_t n = ts.size() * xs.size();
  out.u.resize(n);
  out.tau.resize(n);
  out.flag.resize(n);
  const long nt = static_cast<long>(ts.size());
  const long nx = static_cast<long>(xs.size());
#pragma omp parallel for collapse(2) schedule(dynamic) \
    if (exec == Exec::parallel)
  for (long it = 0; it < nt; ++it) {
    for (long ix = 0; ix < nx; ++ix) {
      std::size_t idx = static_cast<std::size_t>(it) * xs.size() + ix;
      GreensValue v = greens_u(k, ts[it], xs[ix]);
      out.u[idx] = v.u;
      out.tau[idx] = ts[it] - std::abs(xs[ix]) / k.c0();
      out.flag[idx] = static_cast<std::uint8_t>(v.flag);
    }
  }
  return out;
}

FieldTable greens_field_serial(const AttenuationKernel& k,
                               std::span<const double> ts,
                               std::span<const double> xs) {
  return greens_field(k, ts, xs, Exec::serial);
}

}  // namespace vewave
