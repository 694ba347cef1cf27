#pragma once

// Parabolicity criterion for a rank-1 point x of a moment map: with the
// restricted function R_0 = R|{L = L(x)} and dR(x) = k dL(x), x is parabolic
// when
//   (i)   d^2 R_0(x) has rank 1,
//   (ii)  some v in Ker d^2 R_0(x) has v^3 R_0 != 0,
//   (iii) d^2 (R - k L)(x) has rank 3 on the symplectic leaf.
// For the axisymmetric family the pair is (R, L) = (F, Phi) with
// Phi = H - alpha2^3 F; (H, F) is available for experimentation.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zhuk/jet.hpp"
#include "zhuk/singular_locus.hpp"
#include "zhuk/zhukovsky.hpp"

namespace zhuk {

// Leaf chart (J1, J2, x1, x2): x3 = +-sqrt(1 - x1^2 - x2^2) with the sign of
// the base point, J3 = (b - x1 J1 - x2 J2) / x3.
Chart build_chart_leaf(const AxiParams& p, double b, const StateR6& base);

// Chart (J2, x1, x2) on the level set {level = level_value} inside the leaf,
// J1 solved from the level equation. Without a level value the level of the
// base point is used.
Chart build_chart_q3(const AxiParams& p, double b, const StateR6& base, const Observable& level,
                     std::optional<double> level_value = std::nullopt);
// Level Phi = phi0.
Chart build_chart_q3(const AxiParams& p, double b, const StateR6& base);

struct KResult {
  double k = 0.0;
  double residual = 0.0;  // |dG1 - k dG2|
};

// Least-squares k with dG1 = k dG2.
KResult find_k(std::span<const double> dg1, std::span<const double> dg2);
KResult find_k(const Eigen::VectorXd& dg1, const Eigen::VectorXd& dg2);

inline constexpr double kRankTolerance = 1e-8;
inline constexpr double kCubicTolerance = 1e-8;

struct ConditionI {
  int rank = 0;
  Eigen::Vector3d singular_values = Eigen::Vector3d::Zero();
  bool pass = false;
};

ConditionI check_condition_i(const Eigen::Matrix3d& hessian, double tau = kRankTolerance);

struct ConditionII {
  // Binary cubic c(s, t) = (s v1 + t v2)^3 R_0 = c30 s^3 + c21 s^2 t + c12 s t^2 + c03 t^3.
  std::array<double, 4> coefficients{};
  Eigen::Vector3d chosen_v = Eigen::Vector3d::Zero();
  double value = 0.0;  // v^3 R_0 at chosen_v (unit length)
  double scale = 0.0;  // max |T_ijk|
  bool pass = false;
};

ConditionII check_condition_ii(const Derivatives& cubic, const std::array<Eigen::Vector3d, 2>& kernel,
                               double tol = kCubicTolerance);

struct ConditionIII {
  int rank = 0;
  Eigen::Vector4d singular_values = Eigen::Vector4d::Zero();
  double minor_det = 0.0;  // (J1, J2, x1) block
  double e_of_b = 0.0;     // (alpha1^3 - alpha2^3)^2 (b^2 - f0)
  bool pass = false;
};

ConditionIII check_condition_iii(const Eigen::Matrix4d& hessian, const AxiParams& p, double b,
                                 double tau = kRankTolerance);

enum class CriterionPair { f_phi, h_f };
enum class Verdict { parabolic, not_parabolic, indeterminate };

std::string_view to_string(CriterionPair pair) noexcept;
std::string_view to_string(Verdict verdict) noexcept;

struct ParabolicityOptions {
  CriterionPair pair = CriterionPair::f_phi;
  double rank_tolerance = kRankTolerance;
  double cubic_tolerance = kCubicTolerance;
  // The level function becomes L + level_shift * R; the verdict must not move.
  double level_shift = 0.0;
  // Evaluate at another point of the critical circle (see
  // point_on_critical_circle); the base point x0 when empty.
  std::optional<double> circle_angle;
};

struct ParabolicityReport {
  CriterionPair pair = CriterionPair::f_phi;
  DegeneratePoint point;
  StateR6 base;
  double k = 0.0;
  double k_residual = 0.0;
  Eigen::Matrix3d restricted_hessian = Eigen::Matrix3d::Zero();
  std::array<Eigen::Vector3d, 2> kernel{};
  Eigen::Matrix4d combined_hessian = Eigen::Matrix4d::Zero();
  ConditionI cond_i;
  ConditionII cond_ii;
  ConditionIII cond_iii;
  double cubic_first_axis = 0.0;             // (1,0,0)^3 R_0 in the (J2, x1, x2) chart
  std::optional<double> cubic_closed_form;  // 6 (a1 - a2) / (alpha1^2 alpha2 mu1^2 mu2), (F, Phi) only
  Verdict verdict = Verdict::indeterminate;
  double rank_tolerance = kRankTolerance;
  double cubic_tolerance = kCubicTolerance;
};

ParabolicityReport check_parabolic(const AxiParams& p, double b, const ParabolicityOptions& options = {});

// Closed forms against the jet pipeline at the base point x0.
struct ClosedFormComparison {
  std::string name;
  double numeric = 0.0;
  double closed_form = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool agree = false;
  bool gating = true;  // non-gating rows are reported only
};

struct ClosedFormReport {
  double b = 0.0;
  double e_of_b = 0.0;
  double e_factorized = 0.0;
  std::vector<ClosedFormComparison> comparisons;
  bool all_agree = false;  // over gating rows

  const ClosedFormComparison& at(std::string_view name) const;
};

// Rows: differential_combination, k_phi_over_f, minor_det (derived form
// -8 al1^4 al2^4 (a1 - a2) mu1^4 mu2^4 S^5 / E(b)), minor_det_product
// (8 ... S^5 E(b)^2, non-gating), cubic_magnitude.
ClosedFormReport compare_closed_forms(const AxiParams& p, double b);

// As compare_closed_forms, throwing cross_check naming the first gating row
// that disagrees.
ClosedFormReport closed_form_checks(const AxiParams& p, double b);

// E(b) as a polynomial and in factorized form (a1 - a2)^2 (b^2 - f0).
double e_polynomial(const AxiParams& p, double b);
double e_factorized(const AxiParams& p, double b);

double minor_closed_form_derived(const AxiParams& p, double b);
double minor_closed_form_product(const AxiParams& p, double b);
double cubic_closed_form(const AxiParams& p);

}  // namespace zhuk
