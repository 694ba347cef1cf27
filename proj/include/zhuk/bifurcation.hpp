#pragma once

// The parametric bifurcation curve of the moment map (H, F):
//   h(t) = t^2 sum_i a_i lambda_i^2 / (a_i - t)^2
//   f(t) =     sum_i a_i^2 lambda_i^2 / (a_i - t)^2
// Some references write k(t) for the second coordinate; it is f(t) here.
// Since h'(t) = t f'(t), cusps (t != 0) are exactly the zeros of f'.

#include <optional>
#include <string_view>
#include <vector>

#include "zhuk/kernels.hpp"
#include "zhuk/zhukovsky.hpp"

namespace zhuk {

enum class Branch { inner_low, inner_high, outer };

std::string_view to_string(Branch b) noexcept;

struct CurveSample {
  double t = 0.0;
  double h = 0.0;
  double f = 0.0;
  Branch branch = Branch::outer;
};

struct CurvePoint {
  double h = 0.0;
  double f = 0.0;
};

struct CuspData {
  double t0 = 0.0;
  double h0 = 0.0;
  double f0 = 0.0;
  double b0 = 0.0;  // +sqrt(f0)
};

template <class T>
std::pair<T, T> curve_eval(const ZhukovskyParams& p, const T& t) {
  T h = t * 0.0;
  T f = t * 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const T d = p.a[i] - t;
    const T q = 1.0 / (d * d);
    h += q * (p.a[i] * p.lambda[i] * p.lambda[i]);
    f += q * (p.a[i] * p.a[i] * p.lambda[i] * p.lambda[i]);
  }
  return {t * t * h, f};
}

CurvePoint curve_point(const ZhukovskyParams& p, double t);
// (h'(t), f'(t)) from a first-order jet.
CurvePoint curve_derivative(const ZhukovskyParams& p, double t);

// Finite branch intervals (lo, hi). With three distinct a_i there are two
// (inner_low below inner_high); in the axisymmetric case only the interval
// between the two distinct values survives, tagged inner_high.
struct BranchInterval {
  Branch branch;
  double lo;
  double hi;
};

std::vector<BranchInterval> finite_branches(const ZhukovskyParams& p);

struct SampleWindow {
  double t_min;
  double t_max;
};

// n samples on every connected parameter piece of each branch, clipped to the
// window. The default window extends the outer branch by 2 (a_max - a_min) + 1
// on both sides.
std::vector<CurveSample> sample_branches(const ZhukovskyParams& p, int n,
                                         std::optional<SampleWindow> window = std::nullopt,
                                         kernels::Exec exec = kernels::Exec::parallel);

double find_cusp_numeric(const ZhukovskyParams& p, Branch branch);

CuspData cusp_closed_form(const AxiParams& p);

enum class FiberType { empty, graph_of_projection, circle_product };

std::string_view to_string(FiberType f) noexcept;

FiberType classify_fiber(double f, double b);

// Connected components of {H = h} on the sphere |J|^2 = f, by marching
// squares on a latitude-longitude grid (grid latitude cells, 2 * grid
// longitude cells) with union-find over the crossed grid edges.
int level_set_components(const ZhukovskyParams& p, double h, double f, int grid,
                         kernels::Exec exec = kernels::Exec::parallel);

}  // namespace zhuk
