#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zhuk/bifurcation.hpp"
#include "zhuk/e3_core.hpp"
#include "zhuk/error.hpp"
#include "zhuk/parabolicity.hpp"
#include "zhuk/singular_locus.hpp"

namespace zhuk::cli {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& msg) { throw zhuk::Error(ErrorKind::config, msg); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    config_error(std::string("malformed JSON: ") + e.what());
  }
}

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) config_error(where + " must be a JSON object");
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) config_error("unknown field '" + where + item.key() + "'");
  }
}

double number_field(const nlohmann::json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) config_error("missing field '" + where + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number()) config_error("field '" + where + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) config_error("field '" + where + key + "' must be finite");
  return d;
}

std::vector<double> number_list(const nlohmann::json& obj, const std::string& key) {
  if (!obj.contains(key)) config_error("missing field '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_array() || v.empty()) config_error("field '" + key + "' must be a nonempty array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) config_error("field '" + key + "' must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Vec3 triple(const nlohmann::json& obj, const std::string& key) {
  const std::vector<double> v = number_list(obj, key);
  if (v.size() != 3) config_error("field '" + key + "' must have exactly 3 entries");
  return {v[0], v[1], v[2]};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }
json vec_json(const Eigen::Vector3d& v) { return json::array({v(0), v(1), v(2)}); }

json params_json(const ZhukovskyParams& p) {
  json j;
  j["A"] = vec_json(p.A);
  j["lambda"] = vec_json(p.lambda);
  j["a"] = vec_json(p.a);
  j["alpha"] = vec_json(p.alpha);
  j["mu"] = vec_json(p.mu);
  return j;
}

json config_json(const Config& c, const ZhukovskyParams& p) {
  json j;
  j["params"] = params_json(p);
  j["b"] = c.b;
  j["tolerances"] = {{"rank", c.tolerances.rank}, {"cubic", c.tolerances.cubic}};
  return j;
}

json canonical_json(const AxiParams& axi) {
  json j = params_json(axi.params);
  j["symmetry"] = axi.order == SymmetryOrder::distinct_smaller ? "A1<A2=A3" : "A1>A2=A3";
  json rot = json::array();
  for (int r = 0; r < 3; ++r) rot.push_back(json::array({axi.rotation(r, 0), axi.rotation(r, 1), axi.rotation(r, 2)}));
  j["rotation"] = rot;
  return j;
}

json state_json(const StateR6& s) { return json::array({s.J(0), s.J(1), s.J(2), s.x(0), s.x(1), s.x(2)}); }

void emit_json(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw zhuk::Error(ErrorKind::parameter, "cannot write '" + path + "'");
  f << text;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw zhuk::Error(ErrorKind::parameter, "cannot write '" + path + "'");
  return f;
}

struct Loaded {
  Config config;
  ZhukovskyParams params;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.config = load_config(path);
  l.params = derive_params(l.config.A, l.config.lambda);
  return l;
}

// --- cusp ---------------------------------------------------------------

int run_cusp(const std::string& config_path, const std::string& json_path, std::ostream& out) {
  const Loaded l = load(config_path);
  json j = config_json(l.config, l.params);
  bool found = false;
  std::optional<AxiParams> axi;
  try {
    axi = canonicalize(l.params);
  } catch (const zhuk::Error& e) {
    if (e.kind() != ErrorKind::not_axisymmetric) throw;
  }
  if (axi) {
    const CuspData c = cusp_closed_form(*axi);
    j["canonical"] = canonical_json(*axi);
    j["t0"] = c.t0;
    j["h0"] = c.h0;
    j["f0"] = c.f0;
    j["b0"] = c.b0;
    found = true;
  }
  json numeric = json::array();
  const std::vector<BranchInterval> branches = finite_branches(axi ? axi->params : l.params);
  for (const auto& br : branches) {
    json n;
    n["branch"] = std::string(to_string(br.branch));
    try {
      const double t = find_cusp_numeric(axi ? axi->params : l.params, br.branch);
      const CurvePoint cp = curve_point(axi ? axi->params : l.params, t);
      n["t"] = t;
      n["h"] = cp.h;
      n["f"] = cp.f;
      found = true;
    } catch (const zhuk::Error& e) {
      if (e.kind() != ErrorKind::no_cusp) throw;
      n["error"] = e.what();
    }
    numeric.push_back(n);
  }
  j["numeric"] = numeric;
  emit_json(j, json_path, out);
  return found ? kSuccess : kCheckFailed;
}

// --- diagram ------------------------------------------------------------

struct CuspMark {
  double h;
  double f;
};

void write_svg(const std::string& path, const ZhukovskyParams& p, const std::vector<CurveSample>& samples,
               const std::vector<CuspMark>& cusps) {
  double hmin = samples.front().h, hmax = hmin, fmin = samples.front().f, fmax = fmin;
  for (const auto& s : samples) {
    hmin = std::min(hmin, s.h);
    hmax = std::max(hmax, s.h);
    fmin = std::min(fmin, s.f);
    fmax = std::max(fmax, s.f);
  }
  if (hmax <= hmin) hmax = hmin + 1.0;
  if (fmax <= fmin) fmax = fmin + 1.0;
  constexpr double width = 640.0, height = 480.0, margin = 40.0;
  auto sx = [&](double h) { return margin + (h - hmin) / (hmax - hmin) * (width - 2 * margin); };
  auto sy = [&](double f) { return height - margin - (f - fmin) / (fmax - fmin) * (height - 2 * margin); };

  std::ofstream svg = open_out(path);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  svg << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  svg << "<text x=\"320\" y=\"470\" font-size=\"12\" text-anchor=\"middle\">h</text>\n";
  svg << "<text x=\"12\" y=\"240\" font-size=\"12\">f</text>\n";

  auto crosses_pole = [&](double t0, double t1) {
    for (double a : p.a)
      if ((t0 - a) * (t1 - a) <= 0.0) return true;
    return false;
  };
  std::string points;
  auto flush = [&] {
    if (!points.empty()) svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"" << points
                             << "\"/>\n";
    points.clear();
  };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i > 0 && (samples[i].branch != samples[i - 1].branch || crosses_pole(samples[i - 1].t, samples[i].t) ||
                  samples[i].t < samples[i - 1].t))
      flush();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(samples[i].h), sy(samples[i].f));
    points += buf;
  }
  flush();
  for (const auto& c : cusps) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"red\"/>\n", sx(c.h), sy(c.f));
    svg << buf;
  }
  svg << "</svg>\n";
}

int run_diagram(const std::string& config_path, int samples, std::optional<double> t_min,
                std::optional<double> t_max, const std::string& csv_path, const std::string& svg_path) {
  const Loaded l = load(config_path);
  std::optional<SampleWindow> window;
  if (t_min || t_max) {
    if (!(t_min && t_max)) throw zhuk::Error(ErrorKind::parameter, "--t-min and --t-max go together");
    window = SampleWindow{*t_min, *t_max};
  }
  const std::vector<CurveSample> s = sample_branches(l.params, samples, window);

  std::ofstream csv = open_out(csv_path);
  csv << "t,h,f,branch\n";
  for (const auto& x : s) csv << fmt(x.t) << ',' << fmt(x.h) << ',' << fmt(x.f) << ',' << to_string(x.branch) << '\n';

  std::vector<CuspMark> cusps;
  for (const auto& br : finite_branches(l.params)) {
    try {
      const CurvePoint cp = curve_point(l.params, find_cusp_numeric(l.params, br.branch));
      cusps.push_back({cp.h, cp.f});
    } catch (const zhuk::Error& e) {
      if (e.kind() != ErrorKind::no_cusp) throw;
    }
  }
  if (!svg_path.empty() && !s.empty()) write_svg(svg_path, l.params, s, cusps);
  return kSuccess;
}

// --- locate -------------------------------------------------------------

int run_locate(const std::string& config_path, const std::string& json_path, std::ostream& out) {
  const Loaded l = load(config_path);
  const AxiParams axi = canonicalize(l.params);
  const DegeneratePoint d = degenerate_point(axi, l.config.b);
  const X20Candidates x20 = x20_candidates(axi, l.config.b);
  json j = config_json(l.config, l.params);
  j["canonical"] = canonical_json(axi);
  j["lambda0"] = d.lambda0;
  j["lambda0_numeric"] = solve_lambda0_numeric(axi);
  j["J0"] = vec_json(d.J0);
  j["x0"] = vec_json(d.x0);
  j["h0"] = d.h0;
  j["f0"] = d.f0;
  j["phi0"] = d.phi0;
  j["x20_candidates"] = {{"derived", x20.derived},
                         {"derived_residual", x20.residual_derived},
                         {"alternate", x20.alternate},
                         {"alternate_residual", x20.residual_alternate}};
  // The same point in the caller's frame.
  const StateR6 input_frame = rotate_state(axi.rotation.transpose(), d.state());
  j["state_input_frame"] = state_json(input_frame);
  emit_json(j, json_path, out);
  return kSuccess;
}

// --- check --------------------------------------------------------------

json report_json(const ParabolicityReport& r) {
  json j;
  j["pair"] = std::string(to_string(r.pair));
  j["verdict"] = std::string(to_string(r.verdict));
  j["base_state"] = state_json(r.base);
  j["k"] = r.k;
  j["k_residual"] = r.k_residual;
  j["cond_i"] = {{"rank", r.cond_i.rank},
                 {"singular_values", vec_json(Eigen::Vector3d(r.cond_i.singular_values))},
                 {"pass", r.cond_i.pass}};
  json kernel = json::array();
  for (const auto& v : r.kernel) kernel.push_back(vec_json(v));
  json cii;
  cii["kernel"] = kernel;
  cii["coefficients"] = json::array(
      {r.cond_ii.coefficients[0], r.cond_ii.coefficients[1], r.cond_ii.coefficients[2], r.cond_ii.coefficients[3]});
  cii["chosen_v"] = vec_json(r.cond_ii.chosen_v);
  cii["value"] = r.cond_ii.value;
  cii["tensor_scale"] = r.cond_ii.scale;
  cii["value_along_first_axis"] = r.cubic_first_axis;
  if (r.cubic_closed_form) cii["closed_form"] = *r.cubic_closed_form;
  cii["pass"] = r.cond_ii.pass;
  j["cond_ii"] = cii;
  const auto& s4 = r.cond_iii.singular_values;
  j["cond_iii"] = {{"rank", r.cond_iii.rank},
                   {"singular_values", json::array({s4(0), s4(1), s4(2), s4(3)})},
                   {"minor_det", r.cond_iii.minor_det},
                   {"E_of_b", r.cond_iii.e_of_b},
                   {"pass", r.cond_iii.pass}};
  j["tolerances"] = {{"rank", r.rank_tolerance}, {"cubic", r.cubic_tolerance}};
  return j;
}

int run_check(const std::string& config_path, const std::string& json_path, const std::string& pair,
              std::ostream& out) {
  const Loaded l = load(config_path);
  const AxiParams axi = canonicalize(l.params);
  ParabolicityOptions opts;
  opts.pair = pair == "HF" ? CriterionPair::h_f : CriterionPair::f_phi;
  opts.rank_tolerance = l.config.tolerances.rank;
  opts.cubic_tolerance = l.config.tolerances.cubic;
  const ParabolicityReport r = check_parabolic(axi, l.config.b, opts);
  json j = config_json(l.config, l.params);
  j["canonical"] = canonical_json(axi);
  j["report"] = report_json(r);
  j["closed_form_checks"] = json::array();
  if (opts.pair == CriterionPair::f_phi) {
    const ClosedFormReport cf = compare_closed_forms(axi, l.config.b);
    for (const auto& c : cf.comparisons) {
      j["closed_form_checks"].push_back({{"name", c.name},
                                         {"numeric", c.numeric},
                                         {"closed_form", c.closed_form},
                                         {"rel_error", c.rel_error},
                                         {"tolerance", c.tolerance},
                                         {"agree", c.agree},
                                         {"gating", c.gating}});
    }
  }
  emit_json(j, json_path, out);
  return r.verdict == Verdict::parabolic ? kSuccess : kCheckFailed;
}

// --- verify -------------------------------------------------------------

int run_verify(const std::string& config_path, std::ostream& out) {
  const Loaded l = load(config_path);
  const AxiParams axi = canonicalize(l.params);
  const ClosedFormReport cf = compare_closed_forms(axi, l.config.b);
  const double lam0 = solve_lambda0(axi);
  const Lambda0Residuals res = lambda0_residuals(axi, lam0);
  const double lam_num = solve_lambda0_numeric(axi);
  const CuspData c = cusp_closed_form(axi);
  const CurvePoint cp = curve_point(axi.params, c.t0);
  const double curve_h = std::abs(cp.h - c.h0) / c.h0;
  const double curve_f = std::abs(cp.f - c.f0) / c.f0;
  const double lam_rel = std::abs(lam_num - lam0) / lam0;

  bool ok = cf.all_agree;
  json j = config_json(l.config, l.params);
  j["canonical"] = canonical_json(axi);
  json rows = json::array();
  for (const auto& x : cf.comparisons) {
    rows.push_back({{"name", x.name},
                    {"numeric", x.numeric},
                    {"closed_form", x.closed_form},
                    {"rel_error", x.rel_error},
                    {"tolerance", x.tolerance},
                    {"agree", x.agree},
                    {"gating", x.gating}});
  }
  auto row = [&](const std::string& name, double value, double tol) {
    const bool agree = value <= tol;
    ok = ok && agree;
    rows.push_back({{"name", name}, {"rel_error", value}, {"tolerance", tol}, {"agree", agree}, {"gating", true}});
  };
  row("lambda0_eq1", res.eq1, 1e-9);
  row("lambda0_eq2", res.eq2, 1e-9);
  row("lambda0_eq3", res.eq3, 1e-9);
  row("lambda0_numeric", lam_rel, 1e-10);
  row("curve_point_h0", curve_h, 1e-10);
  row("curve_point_f0", curve_f, 1e-10);
  j["lambda0"] = lam0;
  j["checks"] = rows;
  j["all_agree"] = ok;
  emit_json(j, "", out);
  return ok ? kSuccess : kCheckFailed;
}

// --- flow ---------------------------------------------------------------

int run_flow(const std::string& config_path, const std::vector<double>& state, double duration, double dt,
             const std::string& csv_path) {
  const Loaded l = load(config_path);
  if (state.size() != 6) throw zhuk::Error(ErrorKind::parameter, "--state needs 6 comma-separated values");
  const StateR6 s0 = StateR6::from_array({state[0], state[1], state[2], state[3], state[4], state[5]});
  const std::vector<StateR6> traj = integrate_flow(l.params, s0, duration, dt);
  std::ofstream csv = open_out(csv_path);
  csv << "t,J1,J2,J3,x1,x2,x3,H,F,f1,f2\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = std::min(static_cast<double>(i) * dt, duration);
    const StateR6& s = traj[i];
    const CasimirValues cv = casimirs(s);
    csv << fmt(t);
    for (int k = 0; k < 6; ++k) csv << ',' << fmt(s[k]);
    csv << ',' << fmt(eval_H(l.params, s)) << ',' << fmt(eval_F(s)) << ',' << fmt(cv.f1) << ',' << fmt(cv.f2) << '\n';
  }
  return kSuccess;
}

// --- fibers -------------------------------------------------------------

int run_fibers(const std::string& config_path, double h, double f, int grid, std::ostream& out) {
  const Loaded l = load(config_path);
  json j = config_json(l.config, l.params);
  j["h"] = h;
  j["f"] = f;
  j["grid"] = grid;
  j["fiber_type"] = std::string(to_string(classify_fiber(f, l.config.b)));
  try {
    j["components"] = level_set_components(l.params, h, f, grid);
  } catch (const zhuk::Error& e) {
    if (e.kind() != ErrorKind::empty_level) throw;
    j["components"] = 0;
    j["note"] = e.what();
  }
  emit_json(j, "", out);
  return kSuccess;
}

// --- sweep --------------------------------------------------------------

int run_sweep(const std::string& spec_path, const std::string& csv_path, std::ostream& out) {
  const SweepGrid grid = parse_grid_spec(read_file(spec_path));
  const std::vector<SweepResult> results = sweep_parallel(expand_grid(grid));
  std::ofstream csv = open_out(csv_path);
  csv << "A1,A23,lambda1,lambda2,b_fraction,b,b0,verdict,rank_i,rank_iii,k,cubic_rel_error,minor_rel_error,"
         "combination_rel_error,error\n";
  int parabolic = 0, failed = 0, excluded = 0;
  for (const auto& r : results) {
    const auto& p = r.point;
    csv << fmt(p.A1) << ',' << fmt(p.A23) << ',' << fmt(p.lambda1) << ',' << fmt(p.lambda2) << ','
        << fmt(p.b_fraction) << ',';
    if (r.error) {
      csv << ",,error,,,,,,," << to_string(*r.error) << '\n';
      if (*r.error == ErrorKind::not_axisymmetric) {
        ++excluded;
      } else {
        ++failed;
      }
      continue;
    }
    csv << fmt(r.b) << ',' << fmt(r.b0) << ',' << to_string(r.verdict) << ',' << r.rank_i << ',' << r.rank_iii << ','
        << fmt(r.k) << ',' << fmt(r.cubic_rel_error) << ',' << fmt(r.minor_rel_error) << ','
        << fmt(r.combination_rel_error) << ",\n";
    if (r.verdict == Verdict::parabolic) {
      ++parabolic;
    } else {
      ++failed;
    }
  }
  out << "points " << results.size() << ", parabolic " << parabolic << ", not parabolic or failed " << failed
      << ", excluded (not axisymmetric) " << excluded << '\n';
  return failed == 0 ? kSuccess : kCheckFailed;
}

}  // namespace

Config parse_config(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  reject_unknown(j, {"A", "lambda", "b", "tolerances"}, "");
  Config c;
  c.A = triple(j, "A");
  for (int i = 0; i < 3; ++i) {
    if (!(c.A[static_cast<std::size_t>(i)] > 0.0)) config_error("field 'A' entries must be positive");
  }
  c.lambda = triple(j, "lambda");
  c.b = number_field(j, "b", "");
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    reject_unknown(t, {"rank", "cubic"}, "tolerances.");
    if (t.contains("rank")) c.tolerances.rank = number_field(t, "rank", "tolerances.");
    if (t.contains("cubic")) c.tolerances.cubic = number_field(t, "cubic", "tolerances.");
    if (!(c.tolerances.rank > 0.0)) config_error("field 'tolerances.rank' must be positive");
    if (!(c.tolerances.cubic > 0.0)) config_error("field 'tolerances.cubic' must be positive");
  }
  return c;
}

Config load_config(const std::string& path) { return parse_config(read_file(path)); }

SweepGrid parse_grid_spec(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  reject_unknown(j, {"A1", "A23", "lambda1", "lambda2", "b_fractions"}, "");
  SweepGrid g;
  g.A1 = number_list(j, "A1");
  g.A23 = number_field(j, "A23", "");
  g.lambda1 = number_list(j, "lambda1");
  g.lambda2 = number_list(j, "lambda2");
  g.b_fractions = number_list(j, "b_fractions");
  return g;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bifurcation curves, degenerate circles and parabolicity checks for the axisymmetric Zhukovsky family",
               "zhukcli"};
  app.require_subcommand(1);

  std::string config, json_out, csv_out, svg_out, pair = "FPhi", grid_spec;
  int samples = 400, grid = 128;
  std::optional<double> t_min, t_max;
  double h = 0.0, f = 0.0, duration = 0.0, dt = 0.0;
  std::vector<double> state;

  auto* cusp = app.add_subcommand("cusp", "Cusp of the bifurcation curve (closed form and numeric)");
  cusp->add_option("--config", config, "Config JSON")->required();
  cusp->add_option("--json", json_out, "Write the report here instead of stdout");

  auto* diagram = app.add_subcommand("diagram", "Sample the curve branches to CSV (and SVG)");
  diagram->add_option("--config", config, "Config JSON")->required();
  diagram->add_option("--samples", samples, "Samples per branch piece")->check(CLI::PositiveNumber);
  diagram->add_option("--t-min", t_min, "Lower end of the parameter window");
  diagram->add_option("--t-max", t_max, "Upper end of the parameter window");
  diagram->add_option("--out", csv_out, "CSV output")->required();
  diagram->add_option("--svg", svg_out, "SVG output");

  auto* locate = app.add_subcommand("locate", "Degenerate point on the critical circle");
  locate->add_option("--config", config, "Config JSON")->required();
  locate->add_option("--json", json_out, "Write the report here instead of stdout");

  auto* check = app.add_subcommand("check", "Parabolicity report at the degenerate point");
  check->add_option("--config", config, "Config JSON")->required();
  check->add_option("--json", json_out, "Write the report here instead of stdout");
  check->add_option("--pair", pair, "Restricted/level pair")->check(CLI::IsMember({"FPhi", "HF"}));

  auto* verify = app.add_subcommand("verify", "Closed forms against the numerical pipeline");
  verify->add_option("--config", config, "Config JSON")->required();

  auto* flow = app.add_subcommand("flow", "Integrate the Hamiltonian flow with conservation columns");
  flow->add_option("--config", config, "Config JSON")->required();
  flow->add_option("--state", state, "J1,J2,J3,x1,x2,x3")->required()->delimiter(',')->expected(6);
  flow->add_option("--time", duration, "Duration")->required();
  flow->add_option("--dt", dt, "Step")->required();
  flow->add_option("--out", csv_out, "CSV output")->required();

  auto* fibers = app.add_subcommand("fibers", "Fiber type and level-set component count");
  fibers->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  fibers->add_option("--config", config, "Config JSON")->required();
  fibers->add_option("--h", h, "Value of H")->required();
  fibers->add_option("--f", f, "Value of F")->required();
  fibers->add_option("--grid", grid, "Latitude cells (>= 64)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Parabolicity verdicts over a parameter grid");
  sweep_cmd->add_option("--grid-spec", grid_spec, "Grid spec JSON")->required();
  sweep_cmd->add_option("--out", csv_out, "CSV output")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kRuntimeError;
  }

  try {
    if (*cusp) return run_cusp(config, json_out, out);
    if (*diagram) return run_diagram(config, samples, t_min, t_max, csv_out, svg_out);
    if (*locate) return run_locate(config, json_out, out);
    if (*check) return run_check(config, json_out, pair, out);
    if (*verify) return run_verify(config, out);
    if (*flow) return run_flow(config, state, duration, dt, csv_out);
    if (*fibers) return run_fibers(config, h, f, grid, out);
    if (*sweep_cmd) return run_sweep(grid_spec, csv_out, out);
  } catch (const zhuk::Error& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kRuntimeError;
}

}  // namespace zhuk::cli
