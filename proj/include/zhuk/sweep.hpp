#pragma once

// Parabolicity verdicts over a grid of axisymmetric parameters. Points are
// independent; the parallel variant fans them out with OpenMP and writes each
// result into its own slot, so both variants return the same vector.

#include <optional>
#include <string>
#include <vector>

#include "zhuk/error.hpp"
#include "zhuk/kernels.hpp"
#include "zhuk/parabolicity.hpp"

namespace zhuk {

struct SweepGrid {
  std::vector<double> A1;
  double A23 = 2.0;
  std::vector<double> lambda1;
  std::vector<double> lambda2;
  std::vector<double> b_fractions;  // b = fraction * b0
};

struct SweepPoint {
  double A1 = 0.0;
  double A23 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double b_fraction = 0.0;
};

struct SweepResult {
  SweepPoint point;
  double b = 0.0;
  double b0 = 0.0;
  std::optional<ErrorKind> error;
  std::string message;
  Verdict verdict = Verdict::indeterminate;
  int rank_i = 0;
  int rank_iii = 0;
  double k = 0.0;
  double cubic_rel_error = 0.0;
  double minor_rel_error = 0.0;
  double combination_rel_error = 0.0;
  bool closed_forms_agree = false;
};

// Grid order: A1 outermost, then lambda1, lambda2, b_fraction.
std::vector<SweepPoint> expand_grid(const SweepGrid& grid);

SweepResult evaluate_point(const SweepPoint& point, const ParabolicityOptions& options = {});

std::vector<SweepResult> sweep_serial(const std::vector<SweepPoint>& points, const ParabolicityOptions& options = {});
std::vector<SweepResult> sweep_parallel(const std::vector<SweepPoint>& points,
                                        const ParabolicityOptions& options = {});
std::vector<SweepResult> sweep(const std::vector<SweepPoint>& points, kernels::Exec exec,
                               const ParabolicityOptions& options = {});

}  // namespace zhuk
