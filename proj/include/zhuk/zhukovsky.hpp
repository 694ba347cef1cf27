#pragma once

// The Zhukovsky gyrostat family on e(3)*:
//   H = sum_i (J_i + lambda_i)^2 / A_i     (doubled Hamiltonian)
//   F = J1^2 + J2^2 + J3^2
// together with the derived quantities a_i = 1/A_i = alpha_i^3 and
// lambda_i = mu_i^3 used by all closed forms.

#include <array>

#include <Eigen/Dense>

#include "zhuk/jet.hpp"
#include "zhuk/state.hpp"

namespace zhuk {

using Vec3 = std::array<double, 3>;

struct ZhukovskyParams {
  Vec3 A{};       // principal moments of inertia, A_i > 0
  Vec3 lambda{};  // gyrostatic moment
  Vec3 a{};       // 1 / A_i
  Vec3 alpha{};   // real cube root of a_i
  Vec3 mu{};      // real cube root of lambda_i (sign preserving)
};

ZhukovskyParams derive_params(const Vec3& A, const Vec3& lambda);

enum class SymmetryOrder {
  distinct_smaller,  // A1 < A2 = A3, i.e. a1 > a2
  distinct_larger,   // A1 > A2 = A3, i.e. a1 < a2
};

// Axisymmetric parameters in normal position: A2 = A3 exactly, lambda3 = 0,
// lambda1 > 0, lambda2 > 0. `rotation` maps the caller's frame to the
// canonical one (J_can = rotation * J, same for x and lambda).
struct AxiParams {
  ZhukovskyParams params;
  SymmetryOrder order = SymmetryOrder::distinct_smaller;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
};

struct CanonicalizeOptions {
  // Moments within this relative distance count as equal (0 = exact test).
  double symmetry_tolerance = 0.0;
};

AxiParams canonicalize(const ZhukovskyParams& p, const CanonicalizeOptions& options = {});

// Frequently used combinations of an AxiParams.
struct AxiConstants {
  double a1, a2;          // a1 = alpha1^3, a2 = alpha2^3
  double al1, al2;        // alpha1, alpha2
  double mu1, mu2;        // mu1, mu2
  double lam1, lam2;      // lambda1 = mu1^3, lambda2 = mu2^3
  double s;               // alpha1^2 mu1^2 + alpha2^2 mu2^2
  double gap;             // a1 - a2
};

AxiConstants axi_constants(const AxiParams& p);

template <class T>
T hamiltonian(const ZhukovskyParams& p, const std::array<T, 6>& y) {
  T h = (y[0] + p.lambda[0]) * (y[0] + p.lambda[0]) * p.a[0];
  h += (y[1] + p.lambda[1]) * (y[1] + p.lambda[1]) * p.a[1];
  h += (y[2] + p.lambda[2]) * (y[2] + p.lambda[2]) * p.a[2];
  return h;
}

template <class T>
T euler_integral(const std::array<T, 6>& y) {
  return y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
}

double eval_H(const ZhukovskyParams& p, const StateR6& s);
double eval_F(const StateR6& s);

// H and F as observables for the jet machinery.
Observable hamiltonian_observable(const ZhukovskyParams& p);
Observable euler_observable();

StateR6 rotate_state(const Eigen::Matrix3d& r, const StateR6& s);
ZhukovskyParams rotate_params(const Eigen::Matrix3d& r, const ZhukovskyParams& p);

}  // namespace zhuk
