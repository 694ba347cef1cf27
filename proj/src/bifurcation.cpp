#include "zhuk/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zhuk/error.hpp"

namespace zhuk {
namespace {

constexpr double kPoleGuard = 1e-6;  // relative to the interval length

void require_nondegenerate(const ZhukovskyParams& p) {
  if (p.lambda[0] == 0.0 && p.lambda[1] == 0.0 && p.lambda[2] == 0.0) {
    throw Error(ErrorKind::degenerate_family, "all gyrostatic components vanish (Euler case, the curve collapses)");
  }
}

void require_off_pole(const ZhukovskyParams& p, double t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(t - p.a[i]) <= 1e-14 * std::max(1.0, std::abs(p.a[i]))) {
      throw Error(ErrorKind::pole, "t = " + std::to_string(t) + " is a pole a" + std::to_string(i + 1));
    }
  }
}

std::vector<double> distinct_a(const ZhukovskyParams& p) {
  std::vector<double> a(p.a.begin(), p.a.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Sum of |terms| of f'(t), the natural rounding scale of f'.
double derivative_scale(const ZhukovskyParams& p, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double d = p.a[i] - t;
    s += std::abs(2.0 * p.a[i] * p.a[i] * p.lambda[i] * p.lambda[i] / (d * d * d));
  }
  return s;
}

double f_prime(const ZhukovskyParams& p, double t) { return curve_derivative(p, t).f; }

// Zero of f' on [lo, hi], bisected to machine resolution.
std::optional<double> bisect_f_prime(const ZhukovskyParams& p, double lo, double hi) {
  double flo = f_prime(p, lo);
  const double fhi = f_prime(p, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f_prime(p, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::inner_low: return "inner_low";
    case Branch::inner_high: return "inner_high";
    case Branch::outer: return "outer";
  }
  return "unknown";
}

std::string_view to_string(FiberType f) noexcept {
  switch (f) {
    case FiberType::empty: return "empty";
    case FiberType::graph_of_projection: return "graph_of_projection";
    case FiberType::circle_product: return "circle_product";
  }
  return "unknown";
}

CurvePoint curve_point(const ZhukovskyParams& p, double t) {
  require_nondegenerate(p);
  require_off_pole(p, t);
  const auto [h, f] = curve_eval(p, t);
  return {h, f};
}

CurvePoint curve_derivative(const ZhukovskyParams& p, double t) {
  require_nondegenerate(p);
  require_off_pole(p, t);
  const auto [h, f] = curve_eval(p, Jet3::variable(1, 0, t));
  return {h[1], f[1]};
}

std::vector<BranchInterval> finite_branches(const ZhukovskyParams& p) {
  const auto a = distinct_a(p);
  if (a.size() == 1) throw Error(ErrorKind::parameter, "all moments of inertia are equal");
  if (a.size() == 2) return {{Branch::inner_high, a[0], a[1]}};
  return {{Branch::inner_low, a[0], a[1]}, {Branch::inner_high, a[1], a[2]}};
}

std::vector<CurveSample> sample_branches(const ZhukovskyParams& p, int n, std::optional<SampleWindow> window,
                                         kernels::Exec exec) {
  if (n < 2) throw Error(ErrorKind::parameter, "sample_branches needs n >= 2");
  require_nondegenerate(p);
  const auto a = distinct_a(p);
  if (a.size() == 1) throw Error(ErrorKind::parameter, "all moments of inertia are equal");
  const double span = a.back() - a.front();
  const SampleWindow w = window.value_or(SampleWindow{a.front() - 2.0 * span - 1.0, a.back() + 2.0 * span + 1.0});
  if (!(w.t_min < w.t_max)) throw Error(ErrorKind::parameter, "sample window needs t_min < t_max");

  struct Piece {
    Branch branch;
    double lo, hi;  // open interval between poles (may be infinite)
  };
  std::vector<Piece> pieces;
  pieces.push_back({Branch::outer, -INFINITY, a.front()});
  for (const auto& b : finite_branches(p)) pieces.push_back({b.branch, b.lo, b.hi});
  pieces.push_back({Branch::outer, a.back(), INFINITY});

  std::vector<double> ts;
  std::vector<Branch> tags;
  for (const auto& piece : pieces) {
    const double guard = kPoleGuard * (std::isfinite(piece.hi - piece.lo) ? piece.hi - piece.lo : span);
    double lo = std::isfinite(piece.lo) ? piece.lo + guard : w.t_min;
    double hi = std::isfinite(piece.hi) ? piece.hi - guard : w.t_max;
    lo = std::max(lo, w.t_min);
    hi = std::min(hi, w.t_max);
    if (!(lo < hi)) continue;
    for (int k = 0; k < n; ++k) {
      ts.push_back(lo + (hi - lo) * k / (n - 1));
      tags.push_back(piece.branch);
    }
  }

  std::vector<double> h(ts.size());
  std::vector<double> f(ts.size());
  if (exec == kernels::Exec::parallel) {
    kernels::curve_values_parallel(p, ts, h, f);
  } else {
    kernels::curve_values_serial(p, ts, h, f);
  }
  std::vector<CurveSample> out(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) out[k] = {ts[k], h[k], f[k], tags[k]};
  return out;
}

double find_cusp_numeric(const ZhukovskyParams& p, Branch branch) {
  require_nondegenerate(p);
  const auto a = distinct_a(p);
  if (a.size() == 1) throw Error(ErrorKind::parameter, "all moments of inertia are equal");

  std::vector<std::pair<double, double>> brackets;
  if (branch == Branch::outer) {
    const double span = a.back() - a.front();
    const double reach = 10.0 * (1.0 + span);
    const double guard = kPoleGuard * span;
    brackets.emplace_back(a.back() + guard, a.back() + reach);
    brackets.emplace_back(a.front() - reach, a.front() - guard);
  } else {
    for (const auto& b : finite_branches(p)) {
      if (b.branch != branch) continue;
      const double guard = kPoleGuard * (b.hi - b.lo);
      brackets.emplace_back(b.lo + guard, b.hi - guard);
    }
    if (brackets.empty()) {
      throw Error(ErrorKind::no_cusp, std::string("branch ") + std::string(to_string(branch)) + " is absent");
    }
  }

  for (const auto& [lo, hi] : brackets) {
    const auto root = bisect_f_prime(p, lo, hi);
    if (!root) continue;
    const double t = *root;
    const CurvePoint d = curve_derivative(p, t);
    const double scale = derivative_scale(p, t);
    if (std::abs(d.f) <= 1e-10 * scale && std::abs(d.h) <= 1e-10 * scale * std::max(1.0, std::abs(t))) return t;
    throw Error(ErrorKind::no_cusp, "f' changes sign at t = " + std::to_string(t) + " but does not vanish there");
  }
  throw Error(ErrorKind::no_cusp, std::string("f' has no sign change on branch ") + std::string(to_string(branch)));
}

CuspData cusp_closed_form(const AxiParams& axi) {
  const AxiConstants k = axi_constants(axi);
  if (k.gap == 0.0) throw Error(ErrorKind::degenerate_hypersurface, "alpha1 = alpha2");
  const double mixed = k.al2 * k.mu1 * k.mu1 + k.al1 * k.mu2 * k.mu2;
  CuspData c;
  c.t0 = k.al1 * k.al1 * k.al2 * k.al2 * mixed / k.s;
  c.h0 = k.a1 * k.a2 * mixed * mixed * mixed / (k.gap * k.gap);
  c.f0 = k.s * k.s * k.s / (k.gap * k.gap);
  c.b0 = std::sqrt(c.f0);
  return c;
}

FiberType classify_fiber(double f, double b) {
  const double b2 = b * b;
  const double tol = 1e-12 * (1.0 + b2);
  if (f < b2 - tol) return FiberType::empty;
  if (f <= b2 + tol) return FiberType::graph_of_projection;
  return FiberType::circle_product;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

int level_set_components(const ZhukovskyParams& p, double h, double f, int grid, kernels::Exec exec) {
  if (!(f > 0.0)) throw Error(ErrorKind::parameter, "level_set_components needs f > 0");
  if (grid < 64) throw Error(ErrorKind::parameter, "level_set_components needs grid >= 64");

  const kernels::SphereGrid g = kernels::sphere_field(p, std::sqrt(f), grid, exec);
  const int rows = g.rows;
  const int cols = g.cols;
  auto above = [&](int i, int j) { return g.at(i, (j % cols + cols) % cols) >= h; };

  // Edge ids: parallels (i, j) -> (i, j+1) for i = 0..rows; meridians
  // (i, j) -> (i+1, j) for i = 0..rows-1. Pole parallels are degenerate and
  // never crossed, so the polar caps close up through their meridians.
  const auto parallel_id = [&](int i, int j) { return static_cast<std::size_t>(i * cols + (j % cols)); };
  const auto meridian_id = [&](int i, int j) {
    return static_cast<std::size_t>((rows + 1) * cols + i * cols + (j % cols));
  };
  const auto parallel_crossed = [&](int i, int j) { return above(i, j) != above(i, j + 1); };
  const auto meridian_crossed = [&](int i, int j) { return above(i, j) != above(i + 1, j); };

  DisjointSets sets(static_cast<std::size_t>((2 * rows + 1) * cols));
  std::vector<char> crossed(static_cast<std::size_t>((2 * rows + 1) * cols), 0);

  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const bool bottom = parallel_crossed(i, j);
      const bool top = parallel_crossed(i + 1, j);
      const bool left = meridian_crossed(i, j);
      const bool right = meridian_crossed(i, j + 1);
      const std::size_t eb = parallel_id(i, j);
      const std::size_t et = parallel_id(i + 1, j);
      const std::size_t el = meridian_id(i, j);
      const std::size_t er = meridian_id(i, j + 1);
      if (bottom) crossed[eb] = 1;
      if (top) crossed[et] = 1;
      if (left) crossed[el] = 1;
      if (right) crossed[er] = 1;

      const int count = int(bottom) + int(top) + int(left) + int(right);
      if (count == 2) {
        std::array<std::size_t, 2> hit{};
        int k = 0;
        if (bottom) hit[static_cast<std::size_t>(k++)] = eb;
        if (top) hit[static_cast<std::size_t>(k++)] = et;
        if (left) hit[static_cast<std::size_t>(k++)] = el;
        if (right) hit[static_cast<std::size_t>(k++)] = er;
        sets.unite(hit[0], hit[1]);
      } else if (count == 4) {
        // Saddle cell: the bilinear centre value decides which corners are
        // cut off.
        const double center = 0.25 * (g.at(i, j) + g.at(i, (j + 1) % cols) + g.at(i + 1, j) +
                                       g.at(i + 1, (j + 1) % cols));
        if ((center >= h) == above(i, j)) {
          sets.unite(eb, er);  // around corner (i, j+1)
          sets.unite(el, et);  // around corner (i+1, j)
        } else {
          sets.unite(eb, el);  // around corner (i, j)
          sets.unite(et, er);  // around corner (i+1, j+1)
        }
      }
    }
  }

  int components = 0;
  for (std::size_t e = 0; e < crossed.size(); ++e) {
    if (crossed[e] && sets.find(e) == e) ++components;
  }
  if (components == 0) {
    throw Error(ErrorKind::empty_level, "H = " + std::to_string(h) + " does not meet the sphere |J|^2 = " +
                                            std::to_string(f));
  }
  return components;
}

}  // namespace zhuk
