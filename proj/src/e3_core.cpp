#include "zhuk/e3_core.hpp"

#include <cmath>
#include <string>

#include "zhuk/error.hpp"

namespace zhuk {
namespace {

double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

}  // namespace

PoissonMatrix poisson_tensor(const StateR6& s) {
  PoissonMatrix P = PoissonMatrix::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const double e = levi_civita(i, j, k);
        if (e == 0.0) continue;
        P(i, j) += e * s.J(k);
        P(i, 3 + j) += e * s.x(k);
        P(3 + i, j) += e * s.x(k);  // {x_i, J_j} = -{J_j, x_i} = eps_ijk x_k
      }
    }
  }
  return P;
}

CasimirValues casimirs(const StateR6& s) { return {s.x.squaredNorm(), s.x.dot(s.J)}; }

Observable casimir_f1_observable() {
  return [](const StateJets& y) { return y[3] * y[3] + y[4] * y[4] + y[5] * y[5]; };
}

Observable casimir_f2_observable() {
  return [](const StateJets& y) { return y[3] * y[0] + y[4] * y[1] + y[5] * y[2]; };
}

Observable coordinate_observable(int index) {
  return [index](const StateJets& y) { return y[static_cast<std::size_t>(index)]; };
}

Vector6d gradient(const Observable& g, const StateR6& s) {
  const auto y = s.to_array();
  Vector6d grad;
  for (int i = 0; i < 6; ++i) {
    StateJets jets;
    for (int j = 0; j < 6; ++j) {
      jets[static_cast<std::size_t>(j)] = (i == j) ? Jet3::variable(1, 0, y[static_cast<std::size_t>(j)])
                                                   : Jet3::constant(1, y[static_cast<std::size_t>(j)]);
    }
    grad(i) = g(jets)[1];
  }
  return grad;
}

double numeric_bracket(const Observable& g1, const Observable& g2, const StateR6& s) {
  return gradient(g1, s).dot(poisson_tensor(s) * gradient(g2, s));
}

Vector6d ham_vector_field(const ZhukovskyParams& p, const StateR6& s) {
  return poisson_tensor(s) * gradient(hamiltonian_observable(p), s);
}

std::vector<StateR6> integrate_flow(const ZhukovskyParams& p, const StateR6& s0, double duration, double dt) {
  if (!(dt > 0.0) || !(duration > 0.0) || dt > duration) {
    throw Error(ErrorKind::parameter, "integrate_flow requires 0 < dt <= T");
  }
  const auto steps = static_cast<long>(std::ceil(duration / dt - 1e-9));
  const Observable h = hamiltonian_observable(p);
  auto rhs = [&](const Vector6d& y) {
    const StateR6 s = StateR6::from_array({y(0), y(1), y(2), y(3), y(4), y(5)});
    return Vector6d(poisson_tensor(s) * gradient(h, s));
  };

  std::vector<StateR6> out;
  out.reserve(static_cast<std::size_t>(steps + 1));
  out.push_back(s0);
  Vector6d y;
  const auto a0 = s0.to_array();
  for (int i = 0; i < 6; ++i) y(i) = a0[static_cast<std::size_t>(i)];

  double t = 0.0;
  for (long step = 0; step < steps; ++step) {
    const double h_step = std::min(dt, duration - t);
    const Vector6d k1 = rhs(y);
    const Vector6d k2 = rhs(y + 0.5 * h_step * k1);
    const Vector6d k3 = rhs(y + 0.5 * h_step * k2);
    const Vector6d k4 = rhs(y + h_step * k3);
    y += h_step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = (step + 1 == steps) ? duration : t + h_step;
    if (!y.allFinite()) {
      throw Error(ErrorKind::integration, "non-finite state at step " + std::to_string(step + 1));
    }
    out.push_back(StateR6::from_array({y(0), y(1), y(2), y(3), y(4), y(5)}));
  }
  return out;
}

}  // namespace zhuk
