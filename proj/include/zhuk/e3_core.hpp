#pragma once

// Lie-Poisson structure of e(3)*:
//   {J_i, J_j} = eps_ijk J_k,  {J_i, x_j} = eps_ijk x_k,  {x_i, x_j} = 0,
// with Casimirs f1 = |x|^2 and f2 = <x, J>.

#include <vector>

#include <Eigen/Dense>

#include "zhuk/jet.hpp"
#include "zhuk/state.hpp"
#include "zhuk/zhukovsky.hpp"

namespace zhuk {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using PoissonMatrix = Eigen::Matrix<double, 6, 6>;

PoissonMatrix poisson_tensor(const StateR6& s);

struct CasimirValues {
  double f1;
  double f2;
};

CasimirValues casimirs(const StateR6& s);

Observable casimir_f1_observable();
Observable casimir_f2_observable();
Observable coordinate_observable(int index);

// Gradient of an observable at s, from six first-order jets.
Vector6d gradient(const Observable& g, const StateR6& s);

// grad(g1)^T P(s) grad(g2)
double numeric_bracket(const Observable& g1, const Observable& g2, const StateR6& s);

// P(s) grad H(s)
Vector6d ham_vector_field(const ZhukovskyParams& p, const StateR6& s);

// Classical RK4 on y' = P(y) grad H(y). Returns the states at t = 0, dt, ...,
// with a final shortened step when dt does not divide T.
std::vector<StateR6> integrate_flow(const ZhukovskyParams& p, const StateR6& s0, double duration, double dt);

}  // namespace zhuk
