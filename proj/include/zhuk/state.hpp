#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>

namespace zhuk {

// A point (J1, J2, J3, x1, x2, x3) of e(3)*. Index order 0..5 follows that
// coordinate list everywhere in the library.
struct StateR6 {
  Eigen::Vector3d J = Eigen::Vector3d::Zero();
  Eigen::Vector3d x = Eigen::Vector3d::Zero();

  static StateR6 from_array(const std::array<double, 6>& y) {
    StateR6 s;
    s.J = {y[0], y[1], y[2]};
    s.x = {y[3], y[4], y[5]};
    return s;
  }

  std::array<double, 6> to_array() const { return {J(0), J(1), J(2), x(0), x(1), x(2)}; }

  double operator[](int i) const { return i < 3 ? J(i) : x(i - 3); }

  bool finite() const { return J.allFinite() && x.allFinite(); }
};

// Symplectic leaf {|x|^2 = a, <x, J> = b}. The geometric Casimir is
// normalized to a = 1 throughout.
struct LeafSpec {
  static constexpr double a = 1.0;
  double b = 0.0;

  bool contains(const StateR6& s, double tol = 1e-10) const {
    const double f1 = s.x.squaredNorm();
    const double f2 = s.x.dot(s.J);
    return std::abs(f1 - a) <= tol * (1.0 + a) && std::abs(f2 - b) <= tol * (1.0 + std::abs(b));
  }
};

}  // namespace zhuk
