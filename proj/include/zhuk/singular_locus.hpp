#pragma once

// The degenerate critical circle of the axisymmetric family: Lagrange
// multiplier family, the multiplier lambda0, the projection J0 and a base
// point x0 on the circle.

#include <Eigen/Dense>

#include "zhuk/state.hpp"
#include "zhuk/zhukovsky.hpp"

namespace zhuk {

struct DegeneratePoint {
  double lambda0 = 0.0;
  Eigen::Vector3d J0 = Eigen::Vector3d::Zero();
  Eigen::Vector3d x0 = Eigen::Vector3d::Zero();
  double b = 0.0;
  double h0 = 0.0;
  double f0 = 0.0;
  double phi0 = 0.0;

  StateR6 state() const {
    StateR6 s;
    s.J = J0;
    s.x = x0;
    return s;
  }
};

// Critical points of H on spheres |J| = const:
//   J_i(lam) = lam lambda_i / (A_i - lam) = lam a_i lambda_i / (1 - a_i lam),
// i.e. grad F = lam grad H. With this normalization F(J(lam)) and H(J(lam))
// are the left-hand sides of the lambda0 equations and J(lambda0) = J0.
Eigen::Vector3d lagrange_family(const ZhukovskyParams& p, double lam);

struct Lambda0Residuals {
  double eq1 = 0.0;  // F(J(lam)) - f0, relative
  double eq2 = 0.0;  // H(J(lam)) - h0, relative
  double eq3 = 0.0;  // combined relation, relative
};

Lambda0Residuals lambda0_residuals(const AxiParams& p, double lam);

// Closed form lambda0 = S / (alpha1^2 alpha2^2 (alpha2 mu1^2 + alpha1 mu2^2)),
// checked against the three relations above (internal_inconsistency on
// failure).
double solve_lambda0(const AxiParams& p);

// Independent route: lambda0 is the double root of F(J(lam)) = f0, found as
// the zero of d/dlam F(J(lam)) between the two poles lam = A1, A2.
double solve_lambda0_numeric(const AxiParams& p);

double phi0_closed_form(const AxiParams& p);

// Phi = H - alpha2^3 F, the level function whose level set carries the circle.
Observable phi_observable(const AxiParams& p);

DegeneratePoint degenerate_point(const AxiParams& p, double b);

// Minus-sign branch of J1 on {Phi = phi0}. x1 and x2 do not enter Phi.
double j1_branch(const AxiParams& p, double J2, double x1, double x2);

// The alternate x20 candidate carries the factor alpha1 mu1; the foot-of-perpendicular
// construction gives alpha2 mu2. Both are reported with their <x0, J0> = b
// residuals.
struct X20Candidates {
  double derived = 0.0;
  double alternate = 0.0;
  double residual_derived = 0.0;
  double residual_alternate = 0.0;
};

X20Candidates x20_candidates(const AxiParams& p, double b);

// A point of the critical circle {|x| = 1, <x, J0> = b} over J0. angle = 0
// is the base point x0 (largest x3).
StateR6 point_on_critical_circle(const DegeneratePoint& d, double angle);

}  // namespace zhuk
