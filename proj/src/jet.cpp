#include "zhuk/jet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "zhuk/error.hpp"

namespace zhuk {
namespace {

struct ProductTerm {
  std::uint8_t lhs, rhs, out;
};

struct MonomialTable {
  int vars = 0;
  std::vector<MultiIndex> monomials;
  std::array<int, kJetDegree + 2> degree_begin{};
  std::vector<ProductTerm> products;
};

int degree_of(const MultiIndex& m) { return m[0] + m[1] + m[2] + m[3]; }

// Exponent tuples of one total degree, first exponent descending.
void append_degree(int vars, int var, int remaining, MultiIndex& current,
                   std::vector<MultiIndex>& out) {
  if (var == vars - 1) {
    current[static_cast<std::size_t>(var)] = remaining;
    out.push_back(current);
    current[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[static_cast<std::size_t>(var)] = e;
    append_degree(vars, var + 1, remaining - e, current, out);
  }
  current[static_cast<std::size_t>(var)] = 0;
}

MonomialTable build_table(int vars) {
  MonomialTable t;
  t.vars = vars;
  for (int d = 0; d <= kJetDegree; ++d) {
    t.degree_begin[static_cast<std::size_t>(d)] = static_cast<int>(t.monomials.size());
    MultiIndex current{};
    append_degree(vars, 0, d, current, t.monomials);
  }
  t.degree_begin[kJetDegree + 1] = static_cast<int>(t.monomials.size());

  const int count = static_cast<int>(t.monomials.size());
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      MultiIndex sum{};
      for (int v = 0; v < kMaxJetVars; ++v) {
        sum[static_cast<std::size_t>(v)] = t.monomials[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] +
                                           t.monomials[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
      }
      if (degree_of(sum) > kJetDegree) continue;
      for (int k = 0; k < count; ++k) {
        if (t.monomials[static_cast<std::size_t>(k)] == sum) {
          t.products.push_back({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j),
                                static_cast<std::uint8_t>(k)});
          break;
        }
      }
    }
  }
  return t;
}

const MonomialTable& table(int vars) {
  if (vars < 1 || vars > kMaxJetVars) {
    throw Error(ErrorKind::parameter, "jet variable count must be in 1.." + std::to_string(kMaxJetVars) +
                                          ", got " + std::to_string(vars));
  }
  static const std::array<MonomialTable, kMaxJetVars> tables = [] {
    std::array<MonomialTable, kMaxJetVars> out;
    for (int n = 1; n <= kMaxJetVars; ++n) out[static_cast<std::size_t>(n - 1)] = build_table(n);
    return out;
  }();
  return tables[static_cast<std::size_t>(vars - 1)];
}

void require_same_vars(const Jet3& a, const Jet3& b) {
  if (a.vars() != b.vars()) {
    throw Error(ErrorKind::parameter, "jet variable counts differ: " + std::to_string(a.vars()) + " vs " +
                                          std::to_string(b.vars()));
  }
}

}  // namespace

int jet_coefficient_count(int vars) { return static_cast<int>(table(vars).monomials.size()); }

const MultiIndex& jet_monomial(int vars, int index) {
  return table(vars).monomials.at(static_cast<std::size_t>(index));
}

int jet_index(int vars, const MultiIndex& exponents) {
  const auto& t = table(vars);
  for (std::size_t k = 0; k < t.monomials.size(); ++k) {
    if (t.monomials[k] == exponents) return static_cast<int>(k);
  }
  return -1;
}

int jet_degree_begin(int vars, int degree) {
  return table(vars).degree_begin.at(static_cast<std::size_t>(degree));
}

Jet3::Jet3(int vars) : vars_(vars) { (void)table(vars); }

Jet3 Jet3::constant(int vars, double value) {
  Jet3 j(vars);
  j.c_[0] = value;
  return j;
}

Jet3 Jet3::variable(int vars, int which, double base) {
  if (which < 0 || which >= vars) {
    throw Error(ErrorKind::parameter, "jet variable index out of range");
  }
  Jet3 j(vars);
  j.c_[0] = base;
  j.c_[static_cast<std::size_t>(1 + which)] = 1.0;
  return j;
}

double Jet3::coeff(const MultiIndex& exponents) const {
  const int k = jet_index(vars_, exponents);
  return k < 0 ? 0.0 : c_[static_cast<std::size_t>(k)];
}

Jet3 Jet3::degree_part(int degree) const {
  const auto& t = table(vars_);
  Jet3 out(vars_);
  for (int k = t.degree_begin[static_cast<std::size_t>(degree)];
       k < t.degree_begin[static_cast<std::size_t>(degree + 1)]; ++k) {
    out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
  }
  return out;
}

Jet3 Jet3::truncated(int max_degree) const {
  const auto& t = table(vars_);
  Jet3 out(vars_);
  const int end = t.degree_begin[static_cast<std::size_t>(std::min(max_degree, kJetDegree) + 1)];
  for (int k = 0; k < end; ++k) out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
  return out;
}

Jet3 Jet3::operator-() const {
  Jet3 out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

Jet3& Jet3::operator+=(const Jet3& rhs) {
  require_same_vars(*this, rhs);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
  return *this;
}

Jet3& Jet3::operator-=(const Jet3& rhs) {
  require_same_vars(*this, rhs);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
  return *this;
}

Jet3& Jet3::operator*=(const Jet3& rhs) { return *this = *this * rhs; }
Jet3& Jet3::operator/=(const Jet3& rhs) { return *this = *this / rhs; }

Jet3& Jet3::operator+=(double rhs) {
  c_[0] += rhs;
  return *this;
}

Jet3& Jet3::operator-=(double rhs) {
  c_[0] -= rhs;
  return *this;
}

Jet3& Jet3::operator*=(double rhs) {
  for (auto& c : c_) c *= rhs;
  return *this;
}

Jet3& Jet3::operator/=(double rhs) {
  if (rhs == 0.0) throw Error(ErrorKind::jet_domain, "division of a jet by zero");
  for (auto& c : c_) c /= rhs;
  return *this;
}

Jet3 operator*(const Jet3& lhs, const Jet3& rhs) {
  require_same_vars(lhs, rhs);
  Jet3 out(lhs.vars_);
  for (const auto& p : table(lhs.vars_).products) {
    out.c_[p.out] += lhs.c_[p.lhs] * rhs.c_[p.rhs];
  }
  return out;
}

Jet3 operator/(const Jet3& lhs, const Jet3& rhs) { return lhs * reciprocal(rhs); }

Jet3 operator/(double lhs, const Jet3& rhs) { return reciprocal(rhs) * lhs; }

Jet3 compose_univariate(const Jet3& x, const std::array<double, 4>& taylor) {
  Jet3 h = x;
  h[0] = 0.0;  // nilpotent part: h^4 = 0 under truncation
  Jet3 acc = Jet3::constant(x.vars(), taylor[3]);
  for (int k = 2; k >= 0; --k) {
    acc = acc * h;
    acc[0] += taylor[static_cast<std::size_t>(k)];
  }
  return acc;
}

Jet3 reciprocal(const Jet3& x) {
  const double x0 = x.value();
  if (x0 == 0.0 || !std::isfinite(x0)) {
    throw Error(ErrorKind::jet_domain, "reciprocal of a jet with zero constant term");
  }
  const double r = 1.0 / x0;
  return compose_univariate(x, {r, -r * r, r * r * r, -r * r * r * r});
}

Jet3 sqrt(const Jet3& x) {
  const double x0 = x.value();
  if (!(x0 > 0.0)) {
    throw Error(ErrorKind::jet_domain, "sqrt of a jet with nonpositive constant term");
  }
  const double s = std::sqrt(x0);
  return compose_univariate(x, {s, 0.5 / s, -0.125 / (s * x0), 0.0625 / (s * x0 * x0)});
}

Jet3 implicit_solve(const ImplicitFunction& g, double level, std::span<const double> u0, double w0,
                    const ImplicitOptions& options) {
  const int n = static_cast<int>(u0.size());
  if (n < 1 || n + 1 > kMaxJetVars) {
    throw Error(ErrorKind::parameter, "implicit_solve supports 1..3 free variables");
  }

  // Base point check and dG/dw from one evaluation in n + 1 variables.
  std::vector<Jet3> u_ext;
  for (int i = 0; i < n; ++i) u_ext.push_back(Jet3::variable(n + 1, i, u0[static_cast<std::size_t>(i)]));
  const Jet3 g_ext = g(u_ext, Jet3::variable(n + 1, n, w0));
  const double residual = g_ext.value() - level;
  if (!(std::abs(residual) <= options.base_tolerance * (1.0 + std::abs(level)))) {
    throw Error(ErrorKind::inconsistent_base,
                "base point residual " + std::to_string(residual) + " exceeds tolerance");
  }
  double grad_norm2 = 0.0;
  for (int i = 0; i <= n; ++i) grad_norm2 += g_ext[1 + i] * g_ext[1 + i];
  const double g_w = g_ext[1 + n];
  if (std::abs(g_w) < options.singular_tolerance * (1.0 + std::sqrt(grad_norm2))) {
    throw Error(ErrorKind::singular_chart, "dG/dw = " + std::to_string(g_w) + " vanishes at the base point");
  }

  std::vector<Jet3> u;
  for (int i = 0; i < n; ++i) u.push_back(Jet3::variable(n, i, u0[static_cast<std::size_t>(i)]));
  Jet3 w = Jet3::constant(n, w0);
  for (int m = 1; m <= kJetDegree; ++m) {
    const Jet3 r = g(u, w) - level;
    const Jet3 block = r.degree_part(m);
    w -= block / g_w;
  }
  return w;
}

double Derivatives::cubic_along(const Eigen::VectorXd& v) const { return cubic_form(v, v, v); }

double Derivatives::cubic_form(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                               const Eigen::VectorXd& c) const {
  double sum = 0.0;
  for (int i = 0; i < vars; ++i)
    for (int j = 0; j < vars; ++j)
      for (int k = 0; k < vars; ++k) sum += cubic_at(i, j, k) * a(i) * b(j) * c(k);
  return sum;
}

Derivatives derivatives_of(const Jet3& f) {
  const int n = f.vars();
  Derivatives d;
  d.vars = n;
  d.gradient = Eigen::VectorXd::Zero(n);
  d.hessian = Eigen::MatrixXd::Zero(n, n);
  d.cubic.assign(static_cast<std::size_t>(n * n * n), 0.0);

  for (int k = 1; k < f.size(); ++k) {
    const MultiIndex& m = jet_monomial(n, k);
    // Expand the monomial into its variable list, e.g. u1^2 u3 -> {0, 0, 2}.
    std::vector<int> idx;
    double factorial = 1.0;
    for (int v = 0; v < n; ++v) {
      for (int e = 1; e <= m[static_cast<std::size_t>(v)]; ++e) {
        idx.push_back(v);
        factorial *= e;
      }
    }
    const double value = f[k] * factorial;
    if (idx.size() == 1) {
      d.gradient(idx[0]) = value;
    } else if (idx.size() == 2) {
      d.hessian(idx[0], idx[1]) = value;
      d.hessian(idx[1], idx[0]) = value;
    } else {
      std::array<int, 3> p{idx[0], idx[1], idx[2]};
      // All orderings of the index triple carry the same derivative.
      std::sort(p.begin(), p.end());
      do {
        d.cubic[static_cast<std::size_t>((p[0] * n + p[1]) * n + p[2])] = value;
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  return d;
}

Derivatives derivatives_of(const Observable& f, const Chart& chart) {
  return derivatives_of(f(chart.coords));
}

}  // namespace zhuk
