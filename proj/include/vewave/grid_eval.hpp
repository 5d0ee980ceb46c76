#pragma once

#include "vewave/greens.hpp"
#include "vewave/volterra.hpp"

namespace vewave {

// Data-parallel table builders.  Every point is an independent pure
// evaluation, so the parallel versions partition the grid statically and
// reproduce the serial results bit for bit; the serial versions are kept as
// the reference implementations for tests and benchmarks.

struct CurveTable {
  std::vector<double> omega, attenuation, dispersion, phase_speed;
  double c0 = 0.0;
};

CurveTable attenuation_table(const MaterialModel& m,
                             std::span<const double> omega,
                             Exec exec = Exec::parallel);
CurveTable attenuation_table_serial(const MaterialModel& m,
                                    std::span<const double> omega);

struct KernelTable {
  double r = 0.0;
  std::vector<double> tau, H;
  std::vector<std::uint8_t> ok;
};

KernelTable kernel_table(const AttenuationKernel& k, double r,
                         std::span<const double> taus,
                         Exec exec = Exec::parallel);
KernelTable kernel_table_serial(const AttenuationKernel& k, double r,
                                std::span<const double> taus);

struct FieldTable {
  std::vector<double> t, x;               // axes
  std::vector<double> u, tau;             // row-major [t index][x index]
  std::vector<std::uint8_t> flag;         // FrontFlag values
  std::size_t index(std::size_t it, std::size_t ix) const {
    return it * x.size() + ix;
  }
};

FieldTable greens_field(const AttenuationKernel& k, std::span<const double> ts,
                        std::span<const double> xs, Exec exec = Exec::parallel);
FieldTable greens_field_serial(const AttenuationKernel& k,
                               std::span<const double> ts,
                               std::span<const double> xs);

}  // namespace vewave
