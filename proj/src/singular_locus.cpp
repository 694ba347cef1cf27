#include "zhuk/singular_locus.hpp"

#include <cmath>
#include <string>

#include "zhuk/bifurcation.hpp"
#include "zhuk/error.hpp"

namespace zhuk {
namespace {

double rel(double diff, double scale) { return std::abs(diff) / std::max(std::abs(scale), 1e-300); }

double family_derivative(const ZhukovskyParams& p, double lam) {
  // d/dlam F(J(lam)) via a first-order jet in lam.
  const Jet3 l = Jet3::variable(1, 0, lam);
  Jet3 f = Jet3::constant(1, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const Jet3 j = l * p.lambda[i] / (p.A[i] - l);
    f += j * j;
  }
  return f[1];
}

}  // namespace

Eigen::Vector3d lagrange_family(const ZhukovskyParams& p, double lam) {
  Eigen::Vector3d J;
  for (std::size_t i = 0; i < 3; ++i) {
    const double d = p.A[i] - lam;
    if (p.lambda[i] != 0.0 && std::abs(d) <= 1e-14 * std::max(1.0, p.A[i])) {
      throw Error(ErrorKind::pole, "lam = " + std::to_string(lam) + " is a pole A" + std::to_string(i + 1));
    }
    J(static_cast<int>(i)) = p.lambda[i] == 0.0 ? 0.0 : lam * p.lambda[i] / d;
  }
  return J;
}

Lambda0Residuals lambda0_residuals(const AxiParams& axi, double lam) {
  const AxiConstants k = axi_constants(axi);
  const CuspData c = cusp_closed_form(axi);
  const double d1 = 1.0 - k.a1 * lam;
  const double d2 = 1.0 - k.a2 * lam;
  const double m1_6 = k.lam1 * k.lam1;
  const double m2_6 = k.lam2 * k.lam2;

  Lambda0Residuals r;
  const double eq1_lhs = lam * lam * (k.a1 * k.a1 * m1_6 / (d1 * d1) + k.a2 * k.a2 * m2_6 / (d2 * d2));
  r.eq1 = rel(eq1_lhs - c.f0, c.f0);
  const double eq2_lhs = k.a1 * m1_6 / (d1 * d1) + k.a2 * m2_6 / (d2 * d2);
  r.eq2 = rel(eq2_lhs - c.h0, c.h0);
  const double eq3_lhs = m2_6 * (k.a2 - k.a1) / (k.a1 * (-d2) * (-d2));
  const double shift = c.h0 * (2.0 * lam - 1.0 / k.a1);
  const double eq3_rhs = c.f0 - shift - (m1_6 + m2_6);
  r.eq3 = rel(eq3_lhs - eq3_rhs, std::abs(eq3_lhs) + c.f0 + std::abs(shift) + m1_6 + m2_6);
  return r;
}

double solve_lambda0(const AxiParams& axi) {
  const AxiConstants k = axi_constants(axi);
  const double lam0 = k.s / (k.al1 * k.al1 * k.al2 * k.al2 * (k.al2 * k.mu1 * k.mu1 + k.al1 * k.mu2 * k.mu2));
  const Lambda0Residuals r = lambda0_residuals(axi, lam0);
  constexpr double tol = 1e-9;
  if (!(r.eq1 < tol && r.eq2 < tol && r.eq3 < tol)) {
    throw Error(ErrorKind::internal_inconsistency,
                "lambda0 residuals (" + std::to_string(r.eq1) + ", " + std::to_string(r.eq2) + ", " +
                    std::to_string(r.eq3) + ") exceed " + std::to_string(tol));
  }
  return lam0;
}

double solve_lambda0_numeric(const AxiParams& axi) {
  const ZhukovskyParams& p = axi.params;
  const double a_lo = std::min(p.A[0], p.A[1]);
  const double a_hi = std::max(p.A[0], p.A[1]);
  const double eps = 1e-6 * (a_hi - a_lo);
  double lo = a_lo + eps;
  double hi = a_hi - eps;
  double dlo = family_derivative(p, lo);
  const double dhi = family_derivative(p, hi);
  if ((dlo > 0.0) == (dhi > 0.0)) {
    throw Error(ErrorKind::internal_inconsistency, "d/dlam F(J(lam)) has no sign change between the poles");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double dm = family_derivative(p, mid);
    if (dm == 0.0) return mid;
    if ((dm > 0.0) == (dlo > 0.0)) {
      lo = mid;
      dlo = dm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double phi0_closed_form(const AxiParams& axi) {
  const AxiConstants k = axi_constants(axi);
  const double mu1_2 = k.mu1 * k.mu1;
  const double mu2_2 = k.mu2 * k.mu2;
  const double inner = 3.0 * k.al1 * k.al1 * k.al2 * mu1_2 * mu2_2 * mu2_2 + k.a2 * k.lam2 * k.lam2 +
                       k.a1 * (k.lam2 * k.lam2 - k.lam1 * k.lam1);
  return k.a2 * inner / k.gap;
}

Observable phi_observable(const AxiParams& axi) {
  const ZhukovskyParams p = axi.params;
  return [p](const StateJets& y) { return hamiltonian(p, y) - euler_integral(y) * p.a[1]; };
}

DegeneratePoint degenerate_point(const AxiParams& axi, double b) {
  const AxiConstants k = axi_constants(axi);
  if (!(k.mu1 > 0.0) || !(k.mu2 > 0.0)) {
    throw Error(ErrorKind::parameter, "degenerate_point expects canonical parameters (mu1 > 0, mu2 > 0)");
  }
  const CuspData c = cusp_closed_form(axi);
  if (!(std::abs(b) < c.b0)) {
    throw Error(ErrorKind::outside_regime,
                "|b| = " + std::to_string(std::abs(b)) + " is not below b0 = " + std::to_string(c.b0));
  }

  DegeneratePoint d;
  d.lambda0 = solve_lambda0(axi);
  d.b = b;
  d.J0 = Eigen::Vector3d(-k.al1 * k.mu1 * k.s / k.gap, k.al2 * k.mu2 * k.s / k.gap, 0.0);
  d.h0 = c.h0;
  d.f0 = c.f0;
  d.phi0 = phi0_closed_form(axi);
  // Foot of the perpendicular from the origin to the plane <x, J0> = b.
  const double x1 = b * d.J0(0) / c.f0;
  const double x2 = b * d.J0(1) / c.f0;
  d.x0 = Eigen::Vector3d(x1, x2, std::sqrt(1.0 - x1 * x1 - x2 * x2));
  return d;
}

double j1_branch(const AxiParams& axi, double J2, double /*x1*/, double /*x2*/) {
  const AxiConstants k = axi_constants(axi);
  const double radicand =
      2.0 * J2 * (k.a2 - k.a1) + 3.0 * k.al1 * k.al1 * k.al2 * k.mu1 * k.mu1 * k.mu2 + 2.0 * k.a2 * k.lam2;
  if (radicand < 0.0) {
    throw Error(ErrorKind::off_surface, "J1 branch radicand " + std::to_string(radicand) + " is negative");
  }
  return -(k.a1 * k.lam1 + std::sqrt(k.a2 * k.lam2) * std::sqrt(radicand)) / k.gap;
}

X20Candidates x20_candidates(const AxiParams& axi, double b) {
  const AxiConstants k = axi_constants(axi);
  const DegeneratePoint d = degenerate_point(axi, b);
  X20Candidates c;
  const double common = k.gap * b / (k.s * k.s);
  c.derived = k.al2 * k.mu2 * common;
  c.alternate = k.al1 * k.mu1 * common;
  const double x1 = d.x0(0);
  c.residual_derived = x1 * d.J0(0) + c.derived * d.J0(1) - b;
  c.residual_alternate = x1 * d.J0(0) + c.alternate * d.J0(1) - b;
  return c;
}

StateR6 point_on_critical_circle(const DegeneratePoint& d, double angle) {
  const double norm2 = d.J0.squaredNorm();
  const Eigen::Vector3d center = d.b * d.J0 / norm2;
  const double radius = std::sqrt(1.0 - d.b * d.b / norm2);
  const Eigen::Vector3d across = Eigen::Vector3d(-d.J0(1), d.J0(0), 0.0) / std::sqrt(norm2);
  StateR6 s;
  s.J = d.J0;
  s.x = center + radius * (std::cos(angle) * Eigen::Vector3d::UnitZ() + std::sin(angle) * across);
  return s;
}

}  // namespace zhuk
