#include "zhuk/parabolicity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zhuk/error.hpp"

namespace zhuk {
namespace {

constexpr double kChartTolerance = 1e-8;
constexpr double kBaseTolerance = 1e-9;

double x3_sign(const StateR6& base) { return base.x(2) < 0.0 ? -1.0 : 1.0; }

void check_leaf_base(double b, const StateR6& base) {
  if (!base.finite()) throw Error(ErrorKind::parameter, "base point is not finite");
  if (!LeafSpec{b}.contains(base, kBaseTolerance)) {
    throw Error(ErrorKind::inconsistent_base, "base point is not on the leaf |x| = 1, <x, J> = " + std::to_string(b));
  }
  if (std::abs(base.x(2)) <= kChartTolerance) {
    throw Error(ErrorKind::singular_chart, "x3 = " + std::to_string(base.x(2)) + " at the base point");
  }
}

// Leaf coordinates from (J1, J2, x1, x2).
StateJets leaf_coordinates(double b, double sign, const Jet3& j1, const Jet3& j2, const Jet3& x1, const Jet3& x2) {
  const Jet3 x3 = sqrt(1.0 - x1 * x1 - x2 * x2) * sign;
  const Jet3 j3 = (b - x1 * j1 - x2 * j2) / x3;
  return {j1, j2, j3, x1, x2, x3};
}

bool near_threshold(double value, double threshold) {
  return value > threshold / 10.0 && value < threshold * 10.0;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Observable observable_sum(Observable base, Observable extra, double c) {
  if (c == 0.0) return base;
  return [base = std::move(base), extra = std::move(extra), c](const StateJets& y) { return base(y) + extra(y) * c; };
}

}  // namespace

Chart build_chart_leaf(const AxiParams& /*p*/, double b, const StateR6& base) {
  check_leaf_base(b, base);
  Chart chart;
  chart.vars = 4;
  chart.coords = leaf_coordinates(b, x3_sign(base), Jet3::variable(4, 0, base.J(0)), Jet3::variable(4, 1, base.J(1)),
                                  Jet3::variable(4, 2, base.x(0)), Jet3::variable(4, 3, base.x(1)));
  return chart;
}

Chart build_chart_q3(const AxiParams& /*p*/, double b, const StateR6& base, const Observable& level,
                     std::optional<double> level_value) {
  check_leaf_base(b, base);
  const double sign = x3_sign(base);
  const ImplicitFunction g = [&](std::span<const Jet3> u, const Jet3& w) {
    return level(leaf_coordinates(b, sign, w, u[0], u[1], u[2]));
  };
  const std::array<double, 3> u0{base.J(1), base.x(0), base.x(1)};
  double target = 0.0;
  if (level_value) {
    target = *level_value;
  } else {
    std::vector<Jet3> uc;
    for (int i = 0; i < 3; ++i) uc.push_back(Jet3::constant(1, u0[static_cast<std::size_t>(i)]));
    target = g(uc, Jet3::constant(1, base.J(0))).value();
  }
  ImplicitOptions opts;
  opts.base_tolerance = kBaseTolerance;
  opts.singular_tolerance = kChartTolerance;
  const Jet3 j1 = implicit_solve(g, target, u0, base.J(0), opts);

  Chart chart;
  chart.vars = 3;
  chart.coords = leaf_coordinates(b, sign, j1, Jet3::variable(3, 0, u0[0]), Jet3::variable(3, 1, u0[1]),
                                  Jet3::variable(3, 2, u0[2]));
  return chart;
}

Chart build_chart_q3(const AxiParams& p, double b, const StateR6& base) {
  return build_chart_q3(p, b, base, phi_observable(p), phi0_closed_form(p));
}

KResult find_k(const Eigen::VectorXd& dg1, const Eigen::VectorXd& dg2) {
  if (dg1.size() != dg2.size()) throw Error(ErrorKind::parameter, "find_k: gradient sizes differ");
  const double n1 = dg1.norm();
  const double n2 = dg2.norm();
  if (n1 == 0.0 && n2 == 0.0) throw Error(ErrorKind::rank_zero, "both differentials vanish");
  if (n2 <= 1e-14 * n1) throw Error(ErrorKind::not_rank_one, "dG2 vanishes while dG1 does not");
  KResult r;
  r.k = dg1.dot(dg2) / dg2.squaredNorm();
  r.residual = (dg1 - r.k * dg2).norm();
  if (r.residual > 1e-8 * (n1 + n2)) {
    throw Error(ErrorKind::not_rank_one, "differentials are not proportional, residual " + std::to_string(r.residual));
  }
  return r;
}

KResult find_k(std::span<const double> dg1, std::span<const double> dg2) {
  const Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(dg1.data(), static_cast<Eigen::Index>(dg1.size()));
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(dg2.data(), static_cast<Eigen::Index>(dg2.size()));
  return find_k(a, b);
}

ConditionI check_condition_i(const Eigen::Matrix3d& hessian, double tau) {
  ConditionI c;
  c.singular_values = Eigen::JacobiSVD<Eigen::Matrix3d>(hessian).singularValues();
  const double smax = c.singular_values(0);
  c.rank = 0;
  if (smax > 0.0) {
    for (int i = 0; i < 3; ++i)
      if (c.singular_values(i) > tau * smax) ++c.rank;
  }
  c.pass = c.rank == 1;
  return c;
}

ConditionII check_condition_ii(const Derivatives& d, const std::array<Eigen::Vector3d, 2>& kernel, double tol) {
  if (d.vars != 3) throw Error(ErrorKind::parameter, "condition (ii) expects a three-variable chart");
  ConditionII c;
  for (double t : d.cubic) c.scale = std::max(c.scale, std::abs(t));
  const Eigen::VectorXd v1 = kernel[0];
  const Eigen::VectorXd v2 = kernel[1];
  c.coefficients = {d.cubic_form(v1, v1, v1), 3.0 * d.cubic_form(v1, v1, v2), 3.0 * d.cubic_form(v1, v2, v2),
                    d.cubic_form(v2, v2, v2)};

  const std::array<Eigen::Vector3d, 4> candidates{kernel[0], kernel[1], (kernel[0] + kernel[1]) / std::sqrt(2.0),
                                                  (kernel[0] - kernel[1]) / std::sqrt(2.0)};
  for (const Eigen::Vector3d& v : candidates) {
    const double value = d.cubic_along(v);
    if (std::abs(value) > std::abs(c.value) || c.chosen_v.isZero()) {
      c.value = value;
      c.chosen_v = v;
    }
  }
  double cmax = 0.0;
  for (double x : c.coefficients) cmax = std::max(cmax, std::abs(x));
  c.pass = c.scale > 0.0 && cmax > tol * c.scale;
  return c;
}

double e_polynomial(const AxiParams& p, double b) {
  const AxiConstants k = axi_constants(p);
  const double m1 = k.al1 * k.al1 * k.mu1 * k.mu1;
  const double m2 = k.al2 * k.al2 * k.mu2 * k.mu2;
  return -2.0 * k.a1 * k.a2 * b * b + k.a1 * k.a1 * (b * b - k.lam1 * k.lam1) - 3.0 * m1 * m1 * m2 -
         3.0 * m1 * m2 * m2 + k.a2 * k.a2 * (b * b - k.lam2 * k.lam2);
}

double e_factorized(const AxiParams& p, double b) {
  const AxiConstants k = axi_constants(p);
  const double f0 = k.s * k.s * k.s / (k.gap * k.gap);
  return k.gap * k.gap * (b * b - f0);
}

namespace {

double minor_prefactor(const AxiConstants& k) {
  const double a = k.al1 * k.al2;
  const double m = k.mu1 * k.mu2;
  return 8.0 * a * a * a * a * k.gap * m * m * m * m * std::pow(k.s, 5);
}

}  // namespace

double minor_closed_form_derived(const AxiParams& p, double b) {
  return -minor_prefactor(axi_constants(p)) / e_factorized(p, b);
}

double minor_closed_form_product(const AxiParams& p, double b) {
  const double e = e_polynomial(p, b);
  return minor_prefactor(axi_constants(p)) * e * e;
}

double cubic_closed_form(const AxiParams& p) {
  const AxiConstants k = axi_constants(p);
  return 6.0 * k.gap / (k.al1 * k.al1 * k.al2 * k.mu1 * k.mu1 * k.mu2);
}

ConditionIII check_condition_iii(const Eigen::Matrix4d& hessian, const AxiParams& p, double b, double tau) {
  ConditionIII c;
  c.singular_values = Eigen::JacobiSVD<Eigen::Matrix4d>(hessian).singularValues();
  const double smax = c.singular_values(0);
  if (smax > 0.0) {
    for (int i = 0; i < 4; ++i)
      if (c.singular_values(i) > tau * smax) ++c.rank;
  }
  c.minor_det = hessian.topLeftCorner<3, 3>().determinant();
  c.e_of_b = e_factorized(p, b);
  c.pass = c.rank == 3;
  return c;
}

std::string_view to_string(CriterionPair pair) noexcept {
  switch (pair) {
    case CriterionPair::f_phi: return "FPhi";
    case CriterionPair::h_f: return "HF";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::parabolic: return "parabolic";
    case Verdict::not_parabolic: return "not_parabolic";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "unknown";
}

ParabolicityReport check_parabolic(const AxiParams& p, double b, const ParabolicityOptions& options) {
  ParabolicityReport rep;
  rep.pair = options.pair;
  rep.rank_tolerance = options.rank_tolerance;
  rep.cubic_tolerance = options.cubic_tolerance;
  rep.point = degenerate_point(p, b);
  rep.base = options.circle_angle ? point_on_critical_circle(rep.point, *options.circle_angle) : rep.point.state();

  Observable r_obs;
  Observable l_obs;
  if (options.pair == CriterionPair::f_phi) {
    r_obs = euler_observable();
    l_obs = phi_observable(p);
  } else {
    r_obs = hamiltonian_observable(p.params);
    l_obs = euler_observable();
  }
  l_obs = observable_sum(l_obs, r_obs, options.level_shift);

  const Chart leaf = build_chart_leaf(p, b, rep.base);
  const Derivatives dr = derivatives_of(r_obs, leaf);
  const Derivatives dl = derivatives_of(l_obs, leaf);
  const KResult k = find_k(dr.gradient, dl.gradient);
  rep.k = k.k;
  rep.k_residual = k.residual;
  rep.combined_hessian = dr.hessian - k.k * dl.hessian;
  rep.cond_iii = check_condition_iii(rep.combined_hessian, p, b, options.rank_tolerance);

  const Chart q3 = build_chart_q3(p, b, rep.base, l_obs);
  const Derivatives dq = derivatives_of(r_obs, q3);
  rep.restricted_hessian = dq.hessian;
  rep.cond_i = check_condition_i(rep.restricted_hessian, options.rank_tolerance);

  // Kernel: eigenvectors of the two eigenvalues smallest in magnitude.
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(rep.restricted_hessian);
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return std::abs(eig.eigenvalues()(i)) < std::abs(eig.eigenvalues()(j));
  });
  rep.kernel = {eig.eigenvectors().col(order[0]), eig.eigenvectors().col(order[1])};
  rep.cond_ii = check_condition_ii(dq, rep.kernel, options.cubic_tolerance);

  rep.cubic_first_axis = dq.cubic_at(0, 0, 0);
  if (options.pair == CriterionPair::f_phi) rep.cubic_closed_form = cubic_closed_form(p);

  bool borderline = false;
  const double s3 = rep.cond_i.singular_values(0);
  if (s3 > 0.0) {
    for (int i = 1; i < 3; ++i)
      borderline |= near_threshold(rep.cond_i.singular_values(i) / s3, options.rank_tolerance);
  }
  const double s4 = rep.cond_iii.singular_values(0);
  if (s4 > 0.0) {
    for (int i = 1; i < 4; ++i)
      borderline |= near_threshold(rep.cond_iii.singular_values(i) / s4, options.rank_tolerance);
  }
  if (rep.cond_ii.scale > 0.0) {
    double cmax = 0.0;
    for (double x : rep.cond_ii.coefficients) cmax = std::max(cmax, std::abs(x));
    borderline |= near_threshold(cmax / rep.cond_ii.scale, options.cubic_tolerance);
  }

  if (borderline) {
    rep.verdict = Verdict::indeterminate;
  } else if (rep.cond_i.pass && rep.cond_ii.pass && rep.cond_iii.pass) {
    rep.verdict = Verdict::parabolic;
  } else {
    rep.verdict = Verdict::not_parabolic;
  }
  return rep;
}

const ClosedFormComparison& ClosedFormReport::at(std::string_view name) const {
  for (const auto& c : comparisons)
    if (c.name == name) return c;
  throw Error(ErrorKind::parameter, "no closed-form row named " + std::string(name));
}

ClosedFormReport compare_closed_forms(const AxiParams& p, double b) {
  const AxiConstants k = axi_constants(p);
  const DegeneratePoint d = degenerate_point(p, b);
  const StateR6 base = d.state();
  const Observable phi = phi_observable(p);
  const Observable f = euler_observable();

  ClosedFormReport rep;
  rep.b = b;
  rep.e_of_b = e_polynomial(p, b);
  rep.e_factorized = e_factorized(p, b);

  auto add = [&rep](std::string name, double numeric, double closed, double rel_error, double tol, bool gating) {
    ClosedFormComparison c;
    c.name = std::move(name);
    c.numeric = numeric;
    c.closed_form = closed;
    c.rel_error = rel_error;
    c.tolerance = tol;
    c.agree = rel_error <= tol;
    c.gating = gating;
    rep.comparisons.push_back(std::move(c));
  };

  const Chart leaf = build_chart_leaf(p, b, base);
  const Derivatives dphi = derivatives_of(phi, leaf);
  const Derivatives df = derivatives_of(f, leaf);
  const double c = k.al2 * k.al2 * k.mu2 * k.mu2 * k.gap;

  const Eigen::VectorXd combo = k.s * dphi.gradient - c * df.gradient;
  const double combo_scale = k.s * dphi.gradient.norm() + std::abs(c) * df.gradient.norm();
  add("differential_combination", combo.norm(), 0.0, combo.norm() / combo_scale, 1e-10, true);

  const KResult kr = find_k(dphi.gradient, df.gradient);
  add("k_phi_over_f", kr.k, c / k.s, rel_diff(kr.k, c / k.s), 1e-8, true);

  const Eigen::MatrixXd hess = k.s * dphi.hessian - c * df.hessian;
  const double minor = hess.topLeftCorner(3, 3).determinant();
  const double derived = minor_closed_form_derived(p, b);
  add("minor_det", minor, derived, rel_diff(minor, derived), 1e-8, true);
  const double product = minor_closed_form_product(p, b);
  add("minor_det_product", minor, product, rel_diff(minor, product), 1e-8, false);

  const Chart q3 = build_chart_q3(p, b, base);
  const double cubic = derivatives_of(f, q3).cubic_at(0, 0, 0);
  const double cubic_ref = cubic_closed_form(p);
  add("cubic_magnitude", std::abs(cubic), std::abs(cubic_ref), rel_diff(std::abs(cubic), std::abs(cubic_ref)), 1e-8,
      true);
  const double e_scale = k.gap * k.gap * (b * b + d.f0);
  add("e_polynomial_vs_factorized", rep.e_of_b, rep.e_factorized, std::abs(rep.e_of_b - rep.e_factorized) / e_scale,
      1e-10, true);

  rep.all_agree = std::all_of(rep.comparisons.begin(), rep.comparisons.end(),
                              [](const ClosedFormComparison& x) { return !x.gating || x.agree; });
  return rep;
}

ClosedFormReport closed_form_checks(const AxiParams& p, double b) {
  ClosedFormReport rep = compare_closed_forms(p, b);
  for (const auto& c : rep.comparisons) {
    if (c.gating && !c.agree) {
      throw Error(ErrorKind::cross_check, c.name + ": numeric " + std::to_string(c.numeric) + " vs closed form " +
                                              std::to_string(c.closed_form) + " (relative error " +
                                              std::to_string(c.rel_error) + ")");
    }
  }
  return rep;
}

}  // namespace zhuk
