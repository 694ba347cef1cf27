#include "zhuk/sweep.hpp"

#include "zhuk/bifurcation.hpp"

namespace zhuk {

std::vector<SweepPoint> expand_grid(const SweepGrid& grid) {
  std::vector<SweepPoint> points;
  for (double a1 : grid.A1)
    for (double l1 : grid.lambda1)
      for (double l2 : grid.lambda2)
        for (double fr : grid.b_fractions) points.push_back({a1, grid.A23, l1, l2, fr});
  return points;
}

SweepResult evaluate_point(const SweepPoint& point, const ParabolicityOptions& options) {
  SweepResult r;
  r.point = point;
  try {
    const AxiParams p = canonicalize(derive_params({point.A1, point.A23, point.A23}, {point.lambda1, point.lambda2, 0.0}));
    r.b0 = cusp_closed_form(p).b0;
    r.b = point.b_fraction * r.b0;
    const ParabolicityReport rep = check_parabolic(p, r.b, options);
    r.verdict = rep.verdict;
    r.rank_i = rep.cond_i.rank;
    r.rank_iii = rep.cond_iii.rank;
    r.k = rep.k;
    const ClosedFormReport cf = compare_closed_forms(p, r.b);
    r.cubic_rel_error = cf.at("cubic_magnitude").rel_error;
    r.minor_rel_error = cf.at("minor_det").rel_error;
    r.combination_rel_error = cf.at("differential_combination").rel_error;
    r.closed_forms_agree = cf.all_agree;
  } catch (const Error& e) {
    r.error = e.kind();
    r.message = e.what();
  }
  return r;
}

std::vector<SweepResult> sweep_serial(const std::vector<SweepPoint>& points, const ParabolicityOptions& options) {
  std::vector<SweepResult> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(evaluate_point(pt, options));
  return out;
}

std::vector<SweepResult> sweep_parallel(const std::vector<SweepPoint>& points, const ParabolicityOptions& options) {
  std::vector<SweepResult> out(points.size());
  const auto n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = evaluate_point(points[idx], options);
  }
  return out;
}

std::vector<SweepResult> sweep(const std::vector<SweepPoint>& points, kernels::Exec exec,
                               const ParabolicityOptions& options) {
  return exec == kernels::Exec::parallel ? sweep_parallel(points, options) : sweep_serial(points, options);
}

}  // namespace zhuk
