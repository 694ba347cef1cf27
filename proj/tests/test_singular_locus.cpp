#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zhuk/bifurcation.hpp"
#include "zhuk/error.hpp"
#include "zhuk/singular_locus.hpp"

namespace {

const zhuk::AxiParams kPstar = zhuk::canonicalize(zhuk::derive_params({1, 2, 2}, {1, 1, 0}));

zhuk::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const zhuk::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return zhuk::ErrorKind::internal_inconsistency;
}

double phi_plain(const zhuk::AxiParams& p, const Eigen::Vector3d& J) {
  zhuk::StateR6 s;
  s.J = J;
  return zhuk::eval_H(p.params, s) - p.params.a[1] * zhuk::eval_F(s);
}

std::vector<zhuk::AxiParams> grid_params() {
  std::vector<zhuk::AxiParams> out;
  for (double A1 : {0.5, 1.0, 1.5, 3.0})
    for (double l1 : {0.25, 0.5, 1.0, 2.0, 4.0})
      for (double l2 : {0.25, 0.5, 1.0, 2.0, 4.0}) out.push_back(zhuk::canonicalize(zhuk::derive_params({A1, 2, 2}, {l1, l2, 0})));
  return out;
}

}  // namespace

TEST_CASE("lagrange_family") {
  CHECK(zhuk::lagrange_family(kPstar.params, 0.0).isZero(0.0));
  const auto J = zhuk::lagrange_family(kPstar.params, oracle::pstar::lambda0);
  CHECK(J(0) == doctest::Approx(oracle::pstar::J10).epsilon(1e-13));
  CHECK(J(1) == doctest::Approx(oracle::pstar::J20).epsilon(1e-13));
  CHECK(J(2) == 0.0);
  CHECK(kind_of([] { zhuk::lagrange_family(kPstar.params, 1.0); }) == zhuk::ErrorKind::pole);
  CHECK(kind_of([] { zhuk::lagrange_family(kPstar.params, 2.0); }) == zhuk::ErrorKind::pole);

  // grad F = lam grad H along the family, for three distinct moments too.
  const auto p = zhuk::derive_params({1, 2, 3}, {0.7, -1.1, 0.4});
  for (double lam : {-2.0, 0.3, 1.5, 2.5, 4.0}) {
    const auto Jl = zhuk::lagrange_family(p, lam);
    for (int i = 0; i < 3; ++i) {
      const double dF = 2 * Jl(i);
      const double dH = 2 * p.a[static_cast<std::size_t>(i)] * (Jl(i) + p.lambda[static_cast<std::size_t>(i)]);
      CHECK(dF == doctest::Approx(lam * dH).epsilon(1e-12));
    }
  }
}

TEST_CASE("lambda0") {
  CHECK(zhuk::solve_lambda0(kPstar) == doctest::Approx(oracle::pstar::lambda0).epsilon(1e-14));
  for (const auto& p : grid_params()) {
    const double closed = zhuk::solve_lambda0(p);
    CHECK(oracle::rel(zhuk::solve_lambda0_numeric(p), closed) < 1e-10);
    const auto r = zhuk::lambda0_residuals(p, closed);
    CHECK(r.eq1 < 1e-12);
    CHECK(r.eq2 < 1e-12);
    CHECK(r.eq3 < 1e-12);
    // A multiplier away from lambda0 misses the first relation.
    CHECK(zhuk::lambda0_residuals(p, closed * 1.01).eq1 > 1e-6);
  }
}

TEST_CASE("lambda0 is independent of the gyrostat scale") {
  const double base = zhuk::solve_lambda0(zhuk::canonicalize(zhuk::derive_params({1, 2, 2}, {0.3, 0.9, 0})));
  for (double c : {0.1, 2.0, 7.5}) {
    const auto p = zhuk::canonicalize(zhuk::derive_params({1, 2, 2}, {0.3 * c * c * c, 0.9 * c * c * c, 0}));
    CHECK(oracle::rel(zhuk::solve_lambda0(p), base) < 1e-13);
  }
}

TEST_CASE("phi0") {
  CHECK(zhuk::phi0_closed_form(kPstar) == doctest::Approx(oracle::pstar::phi0).epsilon(1e-13));
  for (const auto& p : grid_params()) {
    const auto c = zhuk::cusp_closed_form(p);
    CHECK(oracle::rel(zhuk::phi0_closed_form(p), c.h0 - p.params.a[1] * c.f0) < 1e-11);
  }
}

TEST_CASE("degenerate_point at P*") {
  const auto d = zhuk::degenerate_point(kPstar, 1.0);
  CHECK(d.lambda0 == doctest::Approx(oracle::pstar::lambda0).epsilon(1e-14));
  CHECK(d.J0(0) == doctest::Approx(oracle::pstar::J10).epsilon(1e-13));
  CHECK(d.J0(1) == doctest::Approx(oracle::pstar::J20).epsilon(1e-13));
  CHECK(d.J0(2) == 0.0);
  CHECK(d.x0(0) == doctest::Approx(oracle::pstar::x10).epsilon(1e-13));
  CHECK(d.x0(1) == doctest::Approx(oracle::pstar::x20).epsilon(1e-13));
  CHECK(d.x0(2) == doctest::Approx(oracle::pstar::x30).epsilon(1e-13));
  CHECK(d.h0 == doctest::Approx(oracle::pstar::h0).epsilon(1e-13));
  CHECK(d.f0 == doctest::Approx(oracle::pstar::f0).epsilon(1e-13));
  CHECK(d.phi0 == doctest::Approx(oracle::pstar::phi0).epsilon(1e-13));

  const auto z = zhuk::degenerate_point(kPstar, 0.0);
  CHECK(std::abs(z.x0(0)) < 1e-15);
  CHECK(std::abs(z.x0(1)) < 1e-15);
  CHECK(z.x0(2) == doctest::Approx(1.0));

  const double b0 = zhuk::cusp_closed_form(kPstar).b0;
  CHECK(kind_of([&] { zhuk::degenerate_point(kPstar, b0); }) == zhuk::ErrorKind::outside_regime);
  CHECK(kind_of([&] { zhuk::degenerate_point(kPstar, -1.5 * b0); }) == zhuk::ErrorKind::outside_regime);
}

TEST_CASE("degenerate_point invariants over the grid") {
  for (const auto& p : grid_params()) {
    const auto k = zhuk::axi_constants(p);
    const auto ok = oracle::axi_from(p.params.A[0], p.params.A[1], p.params.lambda[0], p.params.lambda[1]);
    const auto c = zhuk::cusp_closed_form(p);
    for (double frac : {-0.9, -0.3, 0.0, 0.3, 0.9}) {
      const double b = frac * c.b0;
      const auto d = zhuk::degenerate_point(p, b);
      const Eigen::Vector3d J0 = oracle::J0(ok);
      CHECK((d.J0 - J0).norm() < 1e-12 * J0.norm());
      CHECK(std::abs(d.x0.norm() - 1.0) < 1e-14);
      CHECK(std::abs(d.x0.dot(d.J0) - b) < 1e-12 * (1 + c.b0));
      CHECK(d.x0(2) >= 0.0);
      // J1 < 0 < J2 for the canonical sign choice when a1 > a2, reversed otherwise.
      if (k.gap > 0) {
        CHECK(d.J0(0) < 0.0);
        CHECK(d.J0(1) > 0.0);
      } else {
        CHECK(d.J0(0) > 0.0);
        CHECK(d.J0(1) < 0.0);
      }
      CHECK(oracle::rel(phi_plain(p, d.J0), d.phi0) < 1e-10);
      zhuk::StateR6 s = d.state();
      CHECK(oracle::rel(zhuk::eval_F(s), c.f0) < 1e-12);
      CHECK(oracle::rel(zhuk::eval_H(p.params, s), c.h0) < 1e-11);
    }
  }
}

TEST_CASE("j1_branch") {
  const double J1 = zhuk::j1_branch(kPstar, oracle::pstar::J20, 0.1, -0.2);
  CHECK(J1 == doctest::Approx(oracle::pstar::J10).epsilon(1e-12));
  CHECK(zhuk::j1_branch(kPstar, oracle::pstar::J20, 0.7, 0.3) == J1);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int t = 0; t < 100; ++t) {
    const double J2 = oracle::pstar::J20 + u(rng);
    const double v = zhuk::j1_branch(kPstar, J2, 0.0, 0.0);
    CHECK(std::abs(phi_plain(kPstar, {v, J2, 0.0}) - oracle::pstar::phi0) < 1e-12 * (1 + oracle::pstar::phi0));
    CHECK(v < -1.0 + 1e-12);  // minus branch: J1 + lambda1 <= 0 below the axis of the conic
  }
  CHECK(kind_of([] { zhuk::j1_branch(kPstar, 1e3, 0.0, 0.0); }) == zhuk::ErrorKind::off_surface);
}

TEST_CASE("x20 candidates") {
  const auto c = zhuk::x20_candidates(kPstar, 1.0);
  CHECK(c.derived == doctest::Approx(oracle::pstar::x20).epsilon(1e-13));
  CHECK(c.residual_derived < 1e-12);
  // The two coincide only when alpha1 mu1 = alpha2 mu2.
  CHECK(c.alternate != doctest::Approx(c.derived));
  CHECK(c.residual_alternate > 1e-3);
}

TEST_CASE("point_on_critical_circle") {
  const auto d = zhuk::degenerate_point(kPstar, 1.0);
  const auto s0 = zhuk::point_on_critical_circle(d, 0.0);
  CHECK((s0.x - d.x0).norm() < 1e-14);
  for (double a : {0.5, 1.0, 2.0, 3.0, 5.5}) {
    const auto s = zhuk::point_on_critical_circle(d, a);
    CHECK((s.J - d.J0).norm() == 0.0);
    CHECK(std::abs(s.x.norm() - 1.0) < 1e-14);
    CHECK(std::abs(s.x.dot(d.J0) - 1.0) < 1e-13);
    CHECK(s.x(2) < d.x0(2) + 1e-15);
  }
}
