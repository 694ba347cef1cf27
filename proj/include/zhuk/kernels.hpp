#pragma once

// Data-parallel kernels. Each has a serial reference twin with identical
// arithmetic so results can be compared bit for bit.

#include <span>
#include <vector>

#include "zhuk/zhukovsky.hpp"

namespace zhuk::kernels {

enum class Exec { serial, parallel };

// Values of H on the equiangular latitude-longitude grid of the sphere
// |J| = radius: rows + 1 latitude lines theta_i = pi i / rows (including both
// poles) times cols = 2 * rows meridians phi_j = 2 pi j / cols.
struct SphereGrid {
  int rows = 0;
  int cols = 0;
  double radius = 0.0;
  std::vector<double> values;  // (rows + 1) * cols, row major

  double at(int i, int j) const { return values[static_cast<std::size_t>(i * cols + j)]; }
};

SphereGrid sphere_field_serial(const ZhukovskyParams& p, double radius, int rows);
SphereGrid sphere_field_parallel(const ZhukovskyParams& p, double radius, int rows);
SphereGrid sphere_field(const ZhukovskyParams& p, double radius, int rows, Exec exec);

// Curve values (h(t), f(t)) at the given parameters; t must avoid the poles.
void curve_values_serial(const ZhukovskyParams& p, std::span<const double> t, std::span<double> h,
                         std::span<double> f);
void curve_values_parallel(const ZhukovskyParams& p, std::span<const double> t, std::span<double> h,
                           std::span<double> f);

}  // namespace zhuk::kernels
