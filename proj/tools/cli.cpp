/*
 * This source file is part of the skin project.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "handles.hpp"
#include "json.hpp"

namespace skin::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> alpha, omega, omega1, nu1;

  double x_min = 1e-3;
  double x_max = 30.0;
  int x_points = 200;
  std::string x_scale = "log";
  double x = 0.0;  // depth for the distribution command

  std::optional<double> mu_min, mu_max;
  int mu_points = 201;

  double tau_min = 0.0;
  double tau_max = 6.0;
  int tau_points = 61;
  std::vector<std::string> z;

  std::string plane = "alpha-omega";
  int points = 200;

  double alpha_min = 0.1, alpha_max = 1e3;
  double omega_min = 0.1, omega_max = 2e3;
  int alpha_points = 5, omega_points = 5;
  std::string spacing = "log";

  std::optional<double> nu, ell, c_light, omega_field;

  std::optional<double> rel_tol, abs_tol, tail_cut, pv_excision;
  std::optional<int> max_depth;

  std::string format = "csv";
  std::string output;
  std::string fig;
  std::string out_dir = ".";
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

json cjson(cplx v) { return json::array({v.real(), v.imag()}); }

// ---------------------------------------------------------------- output

struct Table {
  std::string comment;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t) {
  std::ostringstream os;
  os << "# " << t.comment << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open " + tmp.string() + " for writing");
    f << text;
    if (!f.flush()) throw UsageError("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

struct Result {
  Table table;
  json doc;
};

std::string tool_tag() { return std::string("skin ") + skin_version(); }

// ---------------------------------------------------------------- inputs

Params make_params(const Options& o) {
  const bool ao = o.alpha || o.omega;
  const bool fr = o.omega1 || o.nu1;
  if (ao && fr) {
    throw UsageError("give either --alpha/--omega or --omega1/--nu1, not both");
  }
  skin_params* p = nullptr;
  if (ao) {
    if (!o.alpha || !o.omega) {
      throw UsageError("--alpha and --omega must be given together");
    }
    check(skin_params_create(*o.alpha, *o.omega, &p));
  } else if (fr) {
    if (!o.omega1 || !o.nu1) {
      throw UsageError("--omega1 and --nu1 must be given together");
    }
    check(skin_params_from_frequencies(*o.omega1, *o.nu1, &p));
  } else {
    throw UsageError(
        "this command needs parameters: --alpha/--omega or --omega1/--nu1");
  }
  return Params(p);
}

std::pair<double, double> alpha_omega(const skin_params* p) {
  double a = 0.0, w = 0.0;
  check(skin_params_get(p, &a, &w, nullptr, nullptr));
  return {a, w};
}

skin_quad_config make_quad(const Options& o) {
  skin_quad_config q = skin_quad_config_default();
  if (o.rel_tol) q.rel_tol = *o.rel_tol;
  if (o.abs_tol) q.abs_tol = *o.abs_tol;
  if (o.tail_cut) q.tail_cut = *o.tail_cut;
  if (o.pv_excision) q.pv_excision = *o.pv_excision;
  if (o.max_depth) q.max_depth = *o.max_depth;
  return q;
}

json quad_json(const skin_quad_config& q) {
  return {{"rel_tol", q.rel_tol},
          {"abs_tol", q.abs_tol},
          {"max_depth", q.max_depth},
          {"tail_cut", q.tail_cut},
          {"pv_excision", q.pv_excision}};
}

std::string params_comment(const skin_params* p, const skin_quad_config* q) {
  const auto [a, w] = alpha_omega(p);
  std::string s = tool_tag() + " alpha=" + num(a) + " Omega=" + num(w);
  if (q) {
    s += " rel_tol=" + num(q->rel_tol) + " tail_cut=" + num(q->tail_cut);
  }
  return s;
}

json params_json(const skin_params* p) {
  const auto [a, w] = alpha_omega(p);
  return {{"alpha", a}, {"omega", w}};
}

std::vector<double> linear_grid(double lo, double hi, int n,
                                const std::string& what) {
  if (n < 1) throw UsageError(what + " needs at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw UsageError(what + " bounds must be finite");
  }
  if (n == 1) return {lo};
  if (!(hi > lo)) throw UsageError(what + " needs max > min");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, int n,
                             const std::string& what) {
  if (!(lo > 0.0)) throw UsageError(what + " needs a positive lower bound");
  std::vector<double> g = linear_grid(std::log(lo), std::log(hi), n, what);
  for (double& v : g) v = std::exp(v);
  g.front() = lo;
  if (n > 1) g.back() = hi;
  return g;
}

std::vector<double> x_grid(const Options& o) {
  if (o.x_points < 1) throw UsageError("--x-points must be at least 1");
  if (!(o.x_max > 0.0)) throw UsageError("--x-max must be positive");
  std::vector<double> g{0.0};
  if (o.x_scale == "log") {
    if (!(o.x_min < o.x_max)) throw UsageError("--x-min must be below --x-max");
    for (double v : log_grid(o.x_min, o.x_max, o.x_points, "x grid")) {
      g.push_back(v);
    }
  } else if (o.x_scale == "linear") {
    for (int i = 1; i <= o.x_points; ++i) g.push_back(o.x_max * i / o.x_points);
  } else {
    throw UsageError("--x-scale must be log or linear");
  }
  return g;
}

std::vector<double> mu_grid(const Options& o, double lo, double hi) {
  return linear_grid(o.mu_min.value_or(lo), o.mu_max.value_or(hi),
                     o.mu_points, "mu grid");
}

cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) throw UsageError("");
    const double re = std::stod(s.substr(0, comma), &used);
    if (used != comma) throw UsageError("");
    const std::string tail = s.substr(comma + 1);
    const double im = std::stod(tail, &used);
    if (used != tail.size()) throw UsageError("");
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("complex value '" + s + "' must look like RE,IM");
  }
}

// -------------------------------------------------------------- commands

Result cmd_lambda(const Options& o) {
  const Params p = make_params(o);
  Result r;
  r.table.comment = params_comment(p.get(), nullptr);
  r.doc["params"] = params_json(p.get());
  if (!o.z.empty()) {
    r.table.columns = {"Re_z", "Im_z", "Re_lambda", "Im_lambda",
                       "Re_lambda_prime", "Im_lambda_prime"};
    json samples = json::array();
    for (const std::string& s : o.z) {
      const cplx z = parse_complex(s);
      const double zz[2] = {z.real(), z.imag()};
      double l[2], lp[2];
      check(skin_lambda(p.get(), zz, l));
      check(skin_lambda_prime(p.get(), zz, lp));
      r.table.rows.push_back({num(zz[0]), num(zz[1]), num(l[0]), num(l[1]),
                              num(lp[0]), num(lp[1])});
      samples.push_back({{"z", cjson(z)},
                         {"lambda", cjson(to_cplx(l))},
                         {"lambda_prime", cjson(to_cplx(lp))}});
    }
    r.doc["samples"] = samples;
    return r;
  }
  if (o.tau_min < 0.0) throw UsageError("--tau-min must be nonnegative");
  r.table.columns = {"tau", "Re_lambda_plus", "Im_lambda_plus",
                     "Re_lambda_minus", "Im_lambda_minus"};
  json values = json::array();
  for (double t : linear_grid(o.tau_min, o.tau_max, o.tau_points, "tau grid")) {
    double lp[2], lm[2];
    check(skin_lambda_boundary(p.get(), t, lp, lm));
    r.table.rows.push_back({num(t), num(lp[0]), num(lp[1]), num(lm[0]),
                            num(lm[1])});
    values.push_back({{"eta", t},
                      {"lambda_plus", cjson(to_cplx(lp))},
                      {"lambda_minus", cjson(to_cplx(lm))}});
  }
  r.doc["boundary_values"] = values;
  return r;
}

Result cmd_zeros(const Options& o) {
  const Params p = make_params(o);
  int pairs = 0;
  double winding = 0.0;
  check(skin_winding(p.get(), &pairs, &winding));
  skin_spectrum* raw = nullptr;
  check(skin_spectrum_create(p.get(), &raw));
  const Spectrum s(raw);
  const std::string cls = pairs == 1 ? "two_zeros" : "four_zeros";

  Result r;
  r.table.comment = params_comment(p.get(), nullptr) + " classification=" + cls;
  r.table.columns = {"k",        "Re_eta",          "Im_eta",
                     "residual", "Re_lambda_prime", "Im_lambda_prime"};
  json zeros = json::array(), residuals = json::array(), lps = json::array();
  for (std::size_t k = 0; k < skin_spectrum_size(s.get()); ++k) {
    double eta[2], lp[2], res = 0.0;
    check(skin_spectrum_zero(s.get(), k, eta, lp, &res));
    r.table.rows.push_back({std::to_string(k), num(eta[0]), num(eta[1]),
                            num(res), num(lp[0]), num(lp[1])});
    zeros.push_back(cjson(to_cplx(eta)));
    residuals.push_back(res);
    lps.push_back(cjson(to_cplx(lp)));
  }
  r.doc = {{"params", params_json(p.get())},
           {"classification", cls},
           {"domain", pairs == 1 ? "D-" : "D+"},
           {"pairs", pairs},
           {"winding", winding},
           {"zeros", zeros},
           {"residuals", residuals},
           {"lambda_prime", lps}};
  return r;
}

skin_plane parse_plane(const std::string& s) {
  if (s == "alpha-omega") return SKIN_PLANE_ALPHA_OMEGA;
  if (s == "omega1-nu1") return SKIN_PLANE_OMEGA1_NU1;
  throw UsageError("--plane must be alpha-omega or omega1-nu1");
}

Result domain_table(skin_plane plane, double mu_min, double mu_max,
                    int points) {
  skin_boundary* raw = nullptr;
  check(skin_boundary_trace(plane, mu_min, mu_max, points, &raw));
  const Boundary b(raw);
  const bool ao = plane == SKIN_PLANE_ALPHA_OMEGA;
  Result r;
  r.table.comment = tool_tag() + " plane=" + (ao ? "alpha-omega" : "omega1-nu1") +
                    " mu_min=" + num(mu_min) + " mu_max=" + num(mu_max);
  r.table.columns = {"mu", ao ? "alpha" : "omega1", ao ? "Omega" : "nu1",
                     "residual"};
  json pts = json::array(), mus = json::array(), res = json::array();
  for (std::size_t k = 0; k < skin_boundary_size(b.get()); ++k) {
    double x, y, mu, e;
    check(skin_boundary_point(b.get(), k, &x, &y, &mu, &e));
    r.table.rows.push_back({num(mu), num(x), num(y), num(e)});
    pts.push_back({x, y});
    mus.push_back(mu);
    res.push_back(e);
  }
  r.doc = {{"plane", ao ? "alpha_omega" : "omega1_nu1"},
           {"points", pts},
           {"mu_values", mus},
           {"residuals", res},
           {"skipped", skin_boundary_skipped(b.get())}};
  return r;
}

Result cmd_domain(const Options& o) {
  return domain_table(parse_plane(o.plane), o.mu_min.value_or(-4.0),
                      o.mu_max.value_or(4.0), o.points);
}

Solution make_solution(const skin_params* p, const skin_quad_config& q) {
  skin_solution* raw = nullptr;
  check(skin_solution_create(p, &q, &raw));
  return Solution(raw);
}

struct FieldData {
  std::vector<double> x;
  std::vector<cplx> ed, ec;
  std::vector<int> converged;
};

FieldData field_data(const skin_solution* s, std::vector<double> x) {
  FieldData f;
  const std::size_t n = x.size();
  std::vector<double> ed(2 * n), ec(2 * n);
  f.converged.assign(n, 1);
  check(skin_solution_field(s, x.data(), n, ed.data(), ec.data(),
                            f.converged.data()));
  for (std::size_t i = 0; i < n; ++i) {
    f.ed.emplace_back(ed[2 * i], ed[2 * i + 1]);
    f.ec.emplace_back(ec[2 * i], ec[2 * i + 1]);
  }
  f.x = std::move(x);
  return f;
}

Result cmd_field(const Options& o, std::ostream& err) {
  const Params p = make_params(o);
  const skin_quad_config q = make_quad(o);
  const std::vector<double> grid = x_grid(o);
  const Solution s = make_solution(p.get(), q);
  const FieldData f = field_data(s.get(), grid);

  Result r;
  r.table.comment = params_comment(p.get(), &q);
  r.table.columns = {"x",    "Re_e_d", "Im_e_d", "Re_e_c",
                     "Im_e_c", "Re_e",   "Im_e",   "abs_e"};
  json ed = json::array(), ec = json::array(), et = json::array(),
       conv = json::array();
  std::size_t unconverged = 0;
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    const cplx e = f.ed[i] + f.ec[i];
    r.table.rows.push_back({num(f.x[i]), num(f.ed[i].real()),
                            num(f.ed[i].imag()), num(f.ec[i].real()),
                            num(f.ec[i].imag()), num(e.real()), num(e.imag()),
                            num(std::abs(e))});
    ed.push_back(cjson(f.ed[i]));
    ec.push_back(cjson(f.ec[i]));
    et.push_back(cjson(e));
    conv.push_back(f.converged[i] != 0);
    if (!f.converged[i]) ++unconverged;
  }
  if (unconverged) {
    err << "warning: quadrature missed tolerance at " << unconverged
        << " depth point(s)\n";
  }
  r.doc = {{"params", params_json(p.get())},
           {"quadrature", quad_json(q)},
           {"x_grid", f.x},
           {"e_discrete", ed},
           {"e_continuous", ec},
           {"e_total", et},
           {"converged", conv}};
  return r;
}

struct DistributionData {
  std::vector<double> mu;
  std::vector<cplx> hd, hc;
  std::vector<int> flagged;
};

DistributionData distribution_data(const skin_solution* s, double x,
                                   std::vector<double> mu) {
  DistributionData d;
  const std::size_t n = mu.size();
  std::vector<double> hd(2 * n), hc(2 * n);
  d.flagged.assign(n, 0);
  check(skin_solution_distribution(s, x, mu.data(), n, hd.data(), hc.data(),
                                   d.flagged.data()));
  for (std::size_t i = 0; i < n; ++i) {
    d.hd.emplace_back(hd[2 * i], hd[2 * i + 1]);
    d.hc.emplace_back(hc[2 * i], hc[2 * i + 1]);
  }
  d.mu = std::move(mu);
  return d;
}

Result cmd_distribution(const Options& o) {
  const Params p = make_params(o);
  const skin_quad_config q = make_quad(o);
  if (!std::isfinite(o.x) || o.x < 0.0) {
    throw UsageError("--x must be finite and nonnegative");
  }
  const std::vector<double> grid = mu_grid(o, -1.0, 1.0);
  const Solution s = make_solution(p.get(), q);
  const DistributionData d = distribution_data(s.get(), o.x, grid);

  Result r;
  r.table.comment = params_comment(p.get(), &q) + " x=" + num(o.x);
  r.table.columns = {"mu",   "Re_h_d", "Im_h_d", "Re_h_c",
                     "Im_h_c", "Re_h",   "Im_h",   "flagged"};
  json hd = json::array(), hc = json::array(), ht = json::array(),
       fl = json::array();
  for (std::size_t i = 0; i < d.mu.size(); ++i) {
    const cplx h = d.hd[i] + d.hc[i];
    r.table.rows.push_back({num(d.mu[i]), num(d.hd[i].real()),
                            num(d.hd[i].imag()), num(d.hc[i].real()),
                            num(d.hc[i].imag()), num(h.real()), num(h.imag()),
                            std::to_string(d.flagged[i])});
    hd.push_back(cjson(d.hd[i]));
    hc.push_back(cjson(d.hc[i]));
    ht.push_back(cjson(h));
    fl.push_back(d.flagged[i] != 0);
  }
  r.doc = {{"params", params_json(p.get())},
           {"quadrature", quad_json(q)},
           {"x", o.x},
           {"mu_grid", d.mu},
           {"h_discrete", hd},
           {"h_continuous", hc},
           {"h_total", ht},
           {"flagged", fl}};
  return r;
}

std::optional<skin_physical_scales> physical_scales(const Options& o) {
  const int given = (o.nu ? 1 : 0) + (o.ell ? 1 : 0) + (o.c_light ? 1 : 0) +
                    (o.omega_field ? 1 : 0);
  if (given == 0) return std::nullopt;
  if (given != 4) {
    throw UsageError(
        "physical impedance needs all of --nu, --ell, --c-light, --omega-field");
  }
  return skin_physical_scales{*o.nu, *o.ell, *o.c_light, *o.omega_field};
}

Result cmd_impedance(const Options& o) {
  const Params p = make_params(o);
  const skin_quad_config q = make_quad(o);
  const std::optional<skin_physical_scales> scales = physical_scales(o);
  const Solution s = make_solution(p.get(), q);
  double I[2], ep[2], zr[2], zp[2] = {kNaN, kNaN};
  check(skin_solution_I(s.get(), I));
  check(skin_solution_impedance(s.get(), scales ? &*scales : nullptr, ep, zr,
                                zp));
  const double consistency = std::abs(to_cplx(zr) * to_cplx(ep) - 1.0);

  Result r;
  r.table.comment = params_comment(p.get(), &q);
  r.table.columns = {"Re_I",         "Im_I",         "Re_e_prime",
                     "Im_e_prime",   "Re_z_reduced", "Im_z_reduced",
                     "consistency",  "Re_z_physical", "Im_z_physical"};
  r.table.rows.push_back({num(I[0]), num(I[1]), num(ep[0]), num(ep[1]),
                          num(zr[0]), num(zr[1]), num(consistency), num(zp[0]),
                          num(zp[1])});
  r.doc = {{"params", params_json(p.get())},
           {"quadrature", quad_json(q)},
           {"I", cjson(to_cplx(I))},
           {"e_prime_at_0", cjson(to_cplx(ep))},
           {"z_reduced", cjson(to_cplx(zr))},
           {"consistency", consistency},
           {"z_physical", scales ? cjson(to_cplx(zp)) : json(nullptr)}};
  return r;
}

Result cmd_sweep(const Options& o, std::ostream& err, bool& any_failed) {
  const skin_quad_config q = make_quad(o);
  std::vector<double> alphas, omegas;
  if (o.spacing == "log") {
    alphas = log_grid(o.alpha_min, o.alpha_max, o.alpha_points, "alpha grid");
    omegas = log_grid(o.omega_min, o.omega_max, o.omega_points, "Omega grid");
  } else if (o.spacing == "linear") {
    alphas = linear_grid(o.alpha_min, o.alpha_max, o.alpha_points, "alpha grid");
    omegas = linear_grid(o.omega_min, o.omega_max, o.omega_points, "Omega grid");
  } else {
    throw UsageError("--spacing must be log or linear");
  }

  Result r;
  r.table.comment = tool_tag() + " sweep rel_tol=" + num(q.rel_tol) +
                    " tail_cut=" + num(q.tail_cut);
  r.table.columns = {"alpha",  "Omega",  "status", "pairs",
                     "Re_eta0", "Im_eta0", "Re_eta1", "Im_eta1",
                     "Re_I",   "Im_I",   "Re_z_reduced", "Im_z_reduced",
                     "e0_residual"};
  json points = json::array();
  any_failed = false;
  for (double a : alphas) {
    for (double w : omegas) {
      std::vector<std::string> row{num(a), num(w)};
      json entry = {{"alpha", a}, {"omega", w}};
      try {
        skin_params* raw = nullptr;
        check(skin_params_create(a, w, &raw));
        const Params p(raw);
        const Solution s = make_solution(p.get(), q);
        const skin_spectrum* spec = skin_solution_spectrum(s.get());
        const std::size_t pairs = skin_spectrum_size(spec);
        cplx eta[2] = {{kNaN, kNaN}, {kNaN, kNaN}};
        json zeros = json::array();
        for (std::size_t k = 0; k < pairs && k < 2; ++k) {
          double e[2];
          check(skin_spectrum_zero(spec, k, e, nullptr, nullptr));
          eta[k] = to_cplx(e);
          zeros.push_back(cjson(eta[k]));
        }
        double I[2], zr[2];
        check(skin_solution_I(s.get(), I));
        check(skin_solution_impedance(s.get(), nullptr, nullptr, zr, nullptr));
        const FieldData f = field_data(s.get(), {0.0});
        const double e0 = std::abs(f.ed[0] + f.ec[0] - 1.0);
        row.insert(row.end(),
                   {"ok", std::to_string(pairs), num(eta[0].real()),
                    num(eta[0].imag()), num(eta[1].real()), num(eta[1].imag()),
                    num(I[0]), num(I[1]), num(zr[0]), num(zr[1]), num(e0)});
        entry.update({{"status", "ok"},
                      {"pairs", pairs},
                      {"zeros", zeros},
                      {"I", cjson(to_cplx(I))},
                      {"z_reduced", cjson(to_cplx(zr))},
                      {"e0_residual", e0}});
      } catch (const ApiFailure& e) {
        any_failed = true;
        err << "sweep point alpha=" << num(a) << " Omega=" << num(w) << ": "
            << e.what() << '\n';
        const std::string status =
            e.status() == SKIN_ERR_NUMERIC ? "numeric" : "invalid";
        row.push_back(status);
        row.push_back("0");
        for (int k = 0; k < 9; ++k) row.push_back("nan");
        entry.update({{"status", status}, {"error", e.what()}});
      }
      r.table.rows.push_back(std::move(row));
      points.push_back(std::move(entry));
    }
  }
  r.doc = {{"quadrature", quad_json(q)}, {"points", points}};
  return r;
}

// ---------------------------------------------------------------- figures

struct Bundle {
  fs::path dir;
  std::string format;
  json curves = json::array();

  void add(const std::string& file, const std::string& label, const Table& t,
           json extra = json::object()) {
    write_file(dir / file, to_csv(t));
    json c = {{"file", file},
              {"label", label},
              {"columns", t.columns},
              {"rows", t.rows.size()}};
    c.update(extra);
    curves.push_back(std::move(c));
  }
};

std::string preset_tag(double a, double w) {
  return "alpha" + num(a) + "_omega" + num(w);
}

Params preset(double a, double w) {
  skin_params* raw = nullptr;
  check(skin_params_create(a, w, &raw));
  return Params(raw);
}

Table column_table(const std::string& comment, const std::string& xname,
                   const std::vector<double>& x, const std::string& yname,
                   const std::vector<double>& y) {
  Table t;
  t.comment = comment;
  t.columns = {xname, yname};
  for (std::size_t i = 0; i < x.size(); ++i) {
    t.rows.push_back({num(x[i]), num(y[i])});
  }
  return t;
}

void figure_domain(Bundle& b, const Options& o, skin_plane plane,
                   const std::string& id) {
  const Result r = domain_table(plane, o.mu_min.value_or(-4.0),
                                o.mu_max.value_or(4.0), o.points);
  b.add("fig" + id + "_boundary.csv", "boundary of D+", r.table);
}

void figure_distribution(Bundle& b, const Options& o,
                         const skin_quad_config& q) {
  const Params p = preset(1.0, 333.0);
  const Solution s = make_solution(p.get(), q);
  const DistributionData d = distribution_data(s.get(), 0.0, mu_grid(o, -1.0, 1.0));
  std::vector<double> re, im;
  for (std::size_t i = 0; i < d.mu.size(); ++i) {
    const cplx h = d.hd[i] + d.hc[i];
    re.push_back(h.real());
    im.push_back(h.imag());
  }
  const std::string c = params_comment(p.get(), &q) + " x=0";
  const json where = {{"alpha", 1.0}, {"omega", 333.0}};
  b.add("fig2_re_h.csv", "Re h(0,mu)", column_table(c, "mu", d.mu, "Re_h", re),
        where);
  b.add("fig2_im_h.csv", "Im h(0,mu)", column_table(c, "mu", d.mu, "Im_h", im),
        where);
}

void figure_components(Bundle& b, const Options& o, const skin_quad_config& q) {
  for (const auto& [a, w] : std::vector<std::pair<double, double>>{
           {900.0, 1000.0}, {100.0, 333.0}, {11.0, 111.0}}) {
    const Params p = preset(a, w);
    const Solution s = make_solution(p.get(), q);
    const FieldData f = field_data(s.get(), x_grid(o));
    const std::string c = params_comment(p.get(), &q);
    const std::vector<std::pair<std::string, std::function<double(std::size_t)>>>
        parts = {
            {"Re_e_d", [&](std::size_t i) { return f.ed[i].real(); }},
            {"Im_e_d", [&](std::size_t i) { return f.ed[i].imag(); }},
            {"Re_e_c", [&](std::size_t i) { return f.ec[i].real(); }},
            {"Im_e_c", [&](std::size_t i) { return f.ec[i].imag(); }},
        };
    for (const auto& [name, get] : parts) {
      std::vector<double> y;
      for (std::size_t i = 0; i < f.x.size(); ++i) y.push_back(get(i));
      std::string lower = name;
      for (char& ch : lower) ch = static_cast<char>(std::tolower(ch));
      b.add("fig3_" + preset_tag(a, w) + "_" + lower + ".csv",
            name + " alpha=" + num(a) + " Omega=" + num(w),
            column_table(c, "x", f.x, name, y), {{"alpha", a}, {"omega", w}});
    }
  }
}

void figure_modulus(Bundle& b, const Options& o, const skin_quad_config& q) {
  for (const auto& [a, w] :
       std::vector<std::pair<double, double>>{{5.0, 1666.0}, {100.0, 333.0}}) {
    const Params p = preset(a, w);
    const Solution s = make_solution(p.get(), q);
    const FieldData f = field_data(s.get(), x_grid(o));
    std::vector<double> y;
    for (std::size_t i = 0; i < f.x.size(); ++i) {
      y.push_back(std::abs(f.ed[i] + f.ec[i]));
    }
    b.add("fig4_" + preset_tag(a, w) + "_abs_e.csv",
          "|e| alpha=" + num(a) + " Omega=" + num(w),
          column_table(params_comment(p.get(), &q), "x", f.x, "abs_e", y),
          {{"alpha", a}, {"omega", w}});
  }
}

int cmd_figure(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, int> known = {
      {"1a", 0}, {"1b", 1}, {"2", 2}, {"3", 3}, {"4", 4}};
  const auto it = known.find(o.fig);
  if (it == known.end()) throw UsageError("--fig must be one of 1a, 1b, 2, 3, 4");
  const skin_quad_config q = make_quad(o);
  Bundle b;
  b.dir = o.out_dir;
  std::error_code ec;
  fs::create_directories(b.dir, ec);
  if (ec) throw UsageError("cannot create " + b.dir.string() + ": " + ec.message());

  json manifest = {{"figure", o.fig},
                   {"tool", "skin"},
                   {"version", skin_version()},
                   {"tolerances", quad_json(q)}};
  int code = kOk;
  try {
    switch (it->second) {
      case 0:
        figure_domain(b, o, SKIN_PLANE_ALPHA_OMEGA, "1a");
        break;
      case 1:
        figure_domain(b, o, SKIN_PLANE_OMEGA1_NU1, "1b");
        break;
      case 2:
        figure_distribution(b, o, q);
        break;
      case 3:
        figure_components(b, o, q);
        break;
      default:
        figure_modulus(b, o, q);
        break;
    }
    manifest["status"] = "complete";
  } catch (const ApiFailure& e) {
    manifest["status"] = "partial";
    manifest["error"] = e.what();
    err << "error: " << e.what() << '\n';
    code = e.status() == SKIN_ERR_NUMERIC || e.status() == SKIN_ERR_INTERNAL
               ? kNumeric
               : kUsage;
  }
  manifest["curves"] = b.curves;
  const fs::path mpath = b.dir / ("fig" + o.fig + "_manifest.json");
  write_file(mpath, manifest.dump(2) + "\n");
  out << mpath.string() << '\n';
  return code;
}

// ------------------------------------------------------------------ setup

void add_options(CLI::App& app, Options& o) {
  const auto positive = CLI::PositiveNumber;
  app.add_option("--alpha", o.alpha, "anomaly parameter alpha (> 0)");
  app.add_option("--omega", o.omega, "reduced frequency Omega (>= 0)");
  app.add_option("--omega1", o.omega1, "omega/omega_p");
  app.add_option("--nu1", o.nu1, "nu/omega_p");

  app.add_option("--x-min", o.x_min, "smallest positive depth on a log grid")
      ->capture_default_str();
  app.add_option("--x-max", o.x_max, "largest depth")->capture_default_str();
  app.add_option("--x-points", o.x_points, "depth points besides x = 0")
      ->capture_default_str();
  app.add_option("--x-scale", o.x_scale, "log or linear")->capture_default_str();
  app.add_option("--x", o.x, "depth for the distribution command")
      ->capture_default_str();

  app.add_option("--mu-min", o.mu_min, "mu grid lower bound");
  app.add_option("--mu-max", o.mu_max, "mu grid upper bound");
  app.add_option("--mu-points", o.mu_points, "mu grid size")
      ->capture_default_str();

  app.add_option("--tau-min", o.tau_min, "tau grid lower bound")
      ->capture_default_str();
  app.add_option("--tau-max", o.tau_max, "tau grid upper bound")
      ->capture_default_str();
  app.add_option("--tau-points", o.tau_points, "tau grid size")
      ->capture_default_str();
  app.add_option("--z", o.z, "complex point RE,IM (repeatable)");

  app.add_option("--plane", o.plane, "alpha-omega or omega1-nu1")
      ->capture_default_str();
  app.add_option("--points", o.points, "boundary trace points")
      ->capture_default_str();

  app.add_option("--alpha-min", o.alpha_min)->capture_default_str();
  app.add_option("--alpha-max", o.alpha_max)->capture_default_str();
  app.add_option("--alpha-points", o.alpha_points)->capture_default_str();
  app.add_option("--omega-min", o.omega_min)->capture_default_str();
  app.add_option("--omega-max", o.omega_max)->capture_default_str();
  app.add_option("--omega-points", o.omega_points)->capture_default_str();
  app.add_option("--spacing", o.spacing, "sweep spacing, log or linear")
      ->capture_default_str();

  app.add_option("--nu", o.nu, "collision frequency (physical impedance)");
  app.add_option("--ell", o.ell, "mean free path (physical impedance)");
  app.add_option("--c-light", o.c_light, "speed of light (physical impedance)");
  app.add_option("--omega-field", o.omega_field,
                 "field angular frequency (physical impedance)");

  app.add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance")
      ->check(positive);
  app.add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance")
      ->check(positive);
  app.add_option("--tail-cut", o.tail_cut, "Gaussian tail cut")->check(positive);
  app.add_option("--pv-excision", o.pv_excision, "principal value excision")
      ->check(positive);
  app.add_option("--max-depth", o.max_depth, "quadrature bisection depth");

  app.add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "write to PATH instead of stdout");
  app.add_option("--fig", o.fig, "figure id: 1a, 1b, 2, 3, 4");
  app.add_option("--out-dir", o.out_dir, "figure bundle directory")
      ->capture_default_str();
  app.set_config("--config", "", "read key=value defaults; flags override");
}

void emit(const Options& o, const Result& r, std::ostream& out) {
  const std::string text =
      o.format == "json" ? r.doc.dump(2) + "\n" : to_csv(r.table);
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Kinetic skin effect in a plasma half-space", "skin"};
  app.set_version_flag("--version", skin_version());
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  add_options(app, o);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"lambda", "dispersion function on a tau grid or at --z points"},
      {"zeros", "discrete zeros and domain classification"},
      {"domain", "boundary of the four-zero domain"},
      {"field", "electric field profile e(x)"},
      {"distribution", "distribution function h(x, mu)"},
      {"impedance", "normalization integral and surface impedance"},
      {"sweep", "zeros, I and impedance over an (alpha, Omega) grid"},
      {"figure", "write the curve bundle for one figure"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "figure") return cmd_figure(o, out, err);
    Result r;
    int code = kOk;
    if (cmd == "lambda") {
      r = cmd_lambda(o);
    } else if (cmd == "zeros") {
      r = cmd_zeros(o);
    } else if (cmd == "domain") {
      r = cmd_domain(o);
    } else if (cmd == "field") {
      r = cmd_field(o, err);
    } else if (cmd == "distribution") {
      r = cmd_distribution(o);
    } else if (cmd == "impedance") {
      r = cmd_impedance(o);
    } else {
      bool failed = false;
      r = cmd_sweep(o, err, failed);
      if (failed) code = kNumeric;
    }
    emit(o, r, out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ApiFailure& e) {
    err << "error: " << e.what() << '\n';
    return e.status() == SKIN_ERR_NUMERIC || e.status() == SKIN_ERR_INTERNAL
               ? kNumeric
               : kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace skin::cli
