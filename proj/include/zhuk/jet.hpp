#pragma once

// Truncated multivariate Taylor arithmetic (total degree 3, up to 4 variables)
// and the implicit-chart machinery built on top of it.
//
// A Jet3 in n variables stores the Taylor coefficients c_m of
//   f(u) = sum_m c_m u^m,   |m| <= 3,
// expanded at the origin of the chart offsets u. Coefficients are ordered
// graded-lexicographically: by total degree, then lexicographically with the
// exponent of the first variable descending. For n = 2 this is
//   1, u1, u2, u1^2, u1 u2, u2^2, u1^3, u1^2 u2, u1 u2^2, u2^3.

#include <array>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace zhuk {

inline constexpr int kJetDegree = 3;
inline constexpr int kMaxJetVars = 4;
inline constexpr int kMaxJetCoeffs = 35;  // C(4 + 3, 3)

using MultiIndex = std::array<int, kMaxJetVars>;

int jet_coefficient_count(int vars);
const MultiIndex& jet_monomial(int vars, int index);
int jet_index(int vars, const MultiIndex& exponents);  // -1 when degree > 3
int jet_degree_begin(int vars, int degree);            // first index of a degree block

class Jet3 {
 public:
  Jet3() = default;
  explicit Jet3(int vars);

  static Jet3 constant(int vars, double value);
  static Jet3 variable(int vars, int which, double base);

  int vars() const noexcept { return vars_; }
  int size() const noexcept { return jet_coefficient_count(vars_); }

  double value() const noexcept { return c_[0]; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  double coeff(const MultiIndex& exponents) const;

  // Homogeneous part of the given degree, and the jet truncated to
  // max_degree (both keep the variable count).
  Jet3 degree_part(int degree) const;
  Jet3 truncated(int max_degree) const;

  Jet3 operator-() const;
  Jet3& operator+=(const Jet3& rhs);
  Jet3& operator-=(const Jet3& rhs);
  Jet3& operator*=(const Jet3& rhs);
  Jet3& operator/=(const Jet3& rhs);
  Jet3& operator+=(double rhs);
  Jet3& operator-=(double rhs);
  Jet3& operator*=(double rhs);
  Jet3& operator/=(double rhs);

  friend Jet3 operator+(Jet3 lhs, const Jet3& rhs) { return lhs += rhs; }
  friend Jet3 operator-(Jet3 lhs, const Jet3& rhs) { return lhs -= rhs; }
  friend Jet3 operator*(const Jet3& lhs, const Jet3& rhs);
  friend Jet3 operator/(const Jet3& lhs, const Jet3& rhs);
  friend Jet3 operator+(Jet3 lhs, double rhs) { return lhs += rhs; }
  friend Jet3 operator-(Jet3 lhs, double rhs) { return lhs -= rhs; }
  friend Jet3 operator*(Jet3 lhs, double rhs) { return lhs *= rhs; }
  friend Jet3 operator/(Jet3 lhs, double rhs) { return lhs /= rhs; }
  friend Jet3 operator+(double lhs, Jet3 rhs) { return rhs += lhs; }
  friend Jet3 operator-(double lhs, const Jet3& rhs) { return (-rhs) += lhs; }
  friend Jet3 operator*(double lhs, Jet3 rhs) { return rhs *= lhs; }
  friend Jet3 operator/(double lhs, const Jet3& rhs);

 private:
  int vars_ = 1;
  std::array<double, kMaxJetCoeffs> c_{};
};

// g(x) for a univariate g given its Taylor coefficients at x.value():
// taylor[k] = g^(k)(x0) / k!.
Jet3 compose_univariate(const Jet3& x, const std::array<double, 4>& taylor);

Jet3 reciprocal(const Jet3& x);  // throws jet_domain on a zero constant term
Jet3 sqrt(const Jet3& x);        // throws jet_domain on a nonpositive constant term

// ---------------------------------------------------------------------------
// Implicit function solving.

using ImplicitFunction = std::function<Jet3(std::span<const Jet3> u, const Jet3& w)>;

struct ImplicitOptions {
  double base_tolerance = 1e-9;      // |G(u0, w0) - c| <= tol * (1 + |c|)
  double singular_tolerance = 1e-8;  // |dG/dw| < tol * (1 + |grad G|) is singular
};

// Taylor coefficients of w(u) with G(u0 + u, w(u)) = c through degree 3,
// solved order by order: at degree m the unknown block enters linearly with
// factor dG/dw, so w_m = -[G(u, w_{<m}) - c]_m / (dG/dw).
Jet3 implicit_solve(const ImplicitFunction& g, double level, std::span<const double> u0, double w0,
                    const ImplicitOptions& options = {});

// ---------------------------------------------------------------------------
// Derivative extraction.

struct Derivatives {
  int vars = 0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
  std::vector<double> cubic;  // vars^3 entries, index (i * vars + j) * vars + k

  double cubic_at(int i, int j, int k) const {
    return cubic[static_cast<std::size_t>((i * vars + j) * vars + k)];
  }
  // Third differential along v: sum T_ijk v_i v_j v_k.
  double cubic_along(const Eigen::VectorXd& v) const;
  double cubic_form(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                    const Eigen::VectorXd& c) const;
};

Derivatives derivatives_of(const Jet3& f);

// A chart is the list of degree-3 jets of the six phase-space coordinates
// (J1, J2, J3, x1, x2, x3) as functions of the chart variables.
using StateJets = std::array<Jet3, 6>;
using Observable = std::function<Jet3(const StateJets&)>;

struct Chart {
  int vars = 0;
  StateJets coords;
};

Derivatives derivatives_of(const Observable& f, const Chart& chart);

}  // namespace zhuk
