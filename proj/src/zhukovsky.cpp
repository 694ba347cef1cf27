#include "zhuk/zhukovsky.hpp"

#include <cmath>
#include <string>

#include "zhuk/error.hpp"

namespace zhuk {

ZhukovskyParams derive_params(const Vec3& A, const Vec3& lambda) {
  ZhukovskyParams p;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(A[i] > 0.0) || !std::isfinite(A[i])) {
      throw Error(ErrorKind::parameter, "moment of inertia A" + std::to_string(i + 1) + " must be positive and finite");
    }
    if (!std::isfinite(lambda[i])) {
      throw Error(ErrorKind::parameter, "gyrostatic component lambda" + std::to_string(i + 1) + " must be finite");
    }
    p.A[i] = A[i];
    p.lambda[i] = lambda[i];
    p.a[i] = 1.0 / A[i];
    p.alpha[i] = std::cbrt(p.a[i]);
    p.mu[i] = std::cbrt(lambda[i]);
  }
  return p;
}

namespace {

bool moments_equal(double x, double y, double tol) {
  if (tol <= 0.0) return x == y;
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

}  // namespace

AxiParams canonicalize(const ZhukovskyParams& p, const CanonicalizeOptions& options) {
  const double tol = options.symmetry_tolerance;
  const bool e01 = moments_equal(p.A[0], p.A[1], tol);
  const bool e02 = moments_equal(p.A[0], p.A[2], tol);
  const bool e12 = moments_equal(p.A[1], p.A[2], tol);
  const int equal_pairs = int(e01) + int(e02) + int(e12);
  if (equal_pairs == 0) {
    throw Error(ErrorKind::not_axisymmetric, "all three moments of inertia are distinct");
  }
  if (equal_pairs > 1) {
    throw Error(ErrorKind::not_axisymmetric, "all three moments of inertia are equal (a1 = a2 hypersurface)");
  }
  const int distinct = e12 ? 0 : (e02 ? 1 : 2);

  // Cyclic permutation moving the distinct axis to position 1.
  Eigen::Matrix3d perm = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 3; ++i) perm(i, (distinct + i) % 3) = 1.0;

  const Eigen::Vector3d lam = perm * Eigen::Vector3d(p.lambda[0], p.lambda[1], p.lambda[2]);
  const double radial = std::hypot(lam(1), lam(2));
  if (lam(0) == 0.0) {
    throw Error(ErrorKind::degenerate_hypersurface, "gyrostatic component along the symmetry axis vanishes");
  }
  if (radial == 0.0) {
    throw Error(ErrorKind::degenerate_hypersurface, "gyrostatic component in the symmetry plane vanishes");
  }

  Eigen::Matrix3d plane = Eigen::Matrix3d::Identity();
  const double c = lam(1) / radial;
  const double s = lam(2) / radial;
  plane(1, 1) = c;
  plane(1, 2) = s;
  plane(2, 1) = -s;
  plane(2, 2) = c;

  // mu1 > 0: half turn about axis 2 (flips axes 1 and 3, keeps lambda3 = 0).
  Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
  if (lam(0) < 0.0) {
    flip(0, 0) = -1.0;
    flip(2, 2) = -1.0;
  }

  AxiParams out;
  out.rotation = flip * plane * perm;

  const Eigen::Vector3d moments = perm * Eigen::Vector3d(p.A[0], p.A[1], p.A[2]);
  const double symmetric = moments(1) == moments(2) ? moments(1) : 0.5 * (moments(1) + moments(2));
  out.params = derive_params({moments(0), symmetric, symmetric}, {std::abs(lam(0)), radial, 0.0});
  out.order = moments(0) < symmetric ? SymmetryOrder::distinct_smaller : SymmetryOrder::distinct_larger;
  return out;
}

AxiConstants axi_constants(const AxiParams& axi) {
  const ZhukovskyParams& p = axi.params;
  AxiConstants k{};
  k.a1 = p.a[0];
  k.a2 = p.a[1];
  k.al1 = p.alpha[0];
  k.al2 = p.alpha[1];
  k.mu1 = p.mu[0];
  k.mu2 = p.mu[1];
  k.lam1 = p.lambda[0];
  k.lam2 = p.lambda[1];
  k.s = k.al1 * k.al1 * k.mu1 * k.mu1 + k.al2 * k.al2 * k.mu2 * k.mu2;
  k.gap = k.a1 - k.a2;
  return k;
}

double eval_H(const ZhukovskyParams& p, const StateR6& s) { return hamiltonian(p, s.to_array()); }

double eval_F(const StateR6& s) { return s.J.squaredNorm(); }

Observable hamiltonian_observable(const ZhukovskyParams& p) {
  return [p](const StateJets& y) { return hamiltonian(p, y); };
}

Observable euler_observable() {
  return [](const StateJets& y) { return euler_integral(y); };
}

StateR6 rotate_state(const Eigen::Matrix3d& r, const StateR6& s) {
  StateR6 out;
  out.J = r * s.J;
  out.x = r * s.x;
  return out;
}

ZhukovskyParams rotate_params(const Eigen::Matrix3d& r, const ZhukovskyParams& p) {
  const Eigen::Matrix3d inertia = r * Eigen::Vector3d(p.A[0], p.A[1], p.A[2]).asDiagonal() * r.transpose();
  const double scale = inertia.cwiseAbs().maxCoeff();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && std::abs(inertia(i, j)) > 1e-12 * scale) {
        throw Error(ErrorKind::parameter, "rotation does not map principal axes onto principal axes");
      }
  const Eigen::Vector3d lam = r * Eigen::Vector3d(p.lambda[0], p.lambda[1], p.lambda[2]);
  return derive_params({inertia(0, 0), inertia(1, 1), inertia(2, 2)}, {lam(0), lam(1), lam(2)});
}

}  // namespace zhuk
