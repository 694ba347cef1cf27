#include "zhuk/kernels.hpp"

#include <cmath>
#include <numbers>

#include "zhuk/error.hpp"

namespace zhuk::kernels {
namespace {

double sphere_value(const ZhukovskyParams& p, double radius, int i, int j, int rows, int cols) {
  // Poles are single points: evaluate them at phi = 0 for every j.
  if (i == 0 || i == rows) j = 0;
  const double theta = std::numbers::pi * i / rows;
  const double phi = 2.0 * std::numbers::pi * j / cols;
  const double st = (i == 0 || i == rows) ? 0.0 : std::sin(theta);
  const double ct = (i == 0) ? 1.0 : (i == rows ? -1.0 : std::cos(theta));
  const std::array<double, 6> y{radius * st * std::cos(phi), radius * st * std::sin(phi), radius * ct, 0.0, 0.0, 0.0};
  return hamiltonian(p, y);
}

SphereGrid make_grid(double radius, int rows) {
  if (rows < 2) throw Error(ErrorKind::parameter, "sphere grid needs at least 2 rows");
  SphereGrid g;
  g.rows = rows;
  g.cols = 2 * rows;
  g.radius = radius;
  g.values.resize(static_cast<std::size_t>((rows + 1) * g.cols));
  return g;
}

double curve_h_term(const ZhukovskyParams& p, double t, int i) {
  const double d = p.a[static_cast<std::size_t>(i)] - t;
  return p.a[static_cast<std::size_t>(i)] * p.lambda[static_cast<std::size_t>(i)] *
         p.lambda[static_cast<std::size_t>(i)] / (d * d);
}

void curve_value(const ZhukovskyParams& p, double t, double& h, double& f) {
  double hs = 0.0;
  double fs = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double term = curve_h_term(p, t, i);
    hs += term;
    fs += term * p.a[static_cast<std::size_t>(i)];
  }
  h = t * t * hs;
  f = fs;
}

}  // namespace

SphereGrid sphere_field_serial(const ZhukovskyParams& p, double radius, int rows) {
  SphereGrid g = make_grid(radius, rows);
  for (int i = 0; i <= rows; ++i)
    for (int j = 0; j < g.cols; ++j)
      g.values[static_cast<std::size_t>(i * g.cols + j)] = sphere_value(p, radius, i, j, rows, g.cols);
  return g;
}

SphereGrid sphere_field_parallel(const ZhukovskyParams& p, double radius, int rows) {
  SphereGrid g = make_grid(radius, rows);
  const int cols = g.cols;
  double* values = g.values.data();
#pragma omp parallel for schedule(static)
  for (int i = 0; i <= rows; ++i)
    for (int j = 0; j < cols; ++j) values[i * cols + j] = sphere_value(p, radius, i, j, rows, cols);
  return g;
}

SphereGrid sphere_field(const ZhukovskyParams& p, double radius, int rows, Exec exec) {
  return exec == Exec::parallel ? sphere_field_parallel(p, radius, rows) : sphere_field_serial(p, radius, rows);
}

void curve_values_serial(const ZhukovskyParams& p, std::span<const double> t, std::span<double> h,
                         std::span<double> f) {
  for (std::size_t k = 0; k < t.size(); ++k) curve_value(p, t[k], h[k], f[k]);
}

void curve_values_parallel(const ZhukovskyParams& p, std::span<const double> t, std::span<double> h,
                           std::span<double> f) {
  const auto n = static_cast<long>(t.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    curve_value(p, t[idx], h[idx], f[idx]);
  }
}

}  // namespace zhuk::kernels
