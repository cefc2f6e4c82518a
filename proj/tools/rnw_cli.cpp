#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "config.hpp"
#include "rnw/errors.hpp"
#include "rnw/limits.hpp"
#include "rnw/massive.hpp"
#include "rnw/massless.hpp"
#include "rnw/verify.hpp"

using namespace rnw;
using namespace rnw::cli;
using nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kCert = 3 };

void apply_thread_cap() {
  if (const char* s = std::getenv("RNW_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || n < 1) throw ConfigError("RNW_THREADS must be a positive integer");
    omp_set_num_threads(static_cast<int>(n));
  }
}

MassiveModel build_massive_cfg(const RunConfig& cfg) {
  const Family f = parse_family(cfg.family);
  const double m = *cfg.mass;
  const double threshold = f == Family::massive_nw ? kNWCertifiedMass : kMTCertifiedMass;
  const bool mass_ok = f == Family::massive_nw ? m >= threshold : m > threshold;
  if (!mass_ok && !cfg.allow_uncertified) {
    std::ostringstream os;
    os << cfg.family << ": m = " << m << " is below the certified threshold " << threshold
       << " (use --allow-uncertified to build anyway)";
    throw CertificationError(os.str());
  }
  BuildOptions opt;
  opt.eps_sin = cfg.eps_sin;
  opt.allow_uncertified = cfg.allow_uncertified;
  const GridSpec g = resolve_grid(cfg, default_massive_grid());
  return f == Family::massive_nw ? build_massive(m, g, opt) : build_moses_tuan(m, g, opt);
}

MasslessFamily massless_cfg(const RunConfig& cfg) {
  return make_massless(parse_family(cfg.family) == Family::massless_even ? Parity::even : Parity::odd,
                       *cfg.nu);
}

void write_json(const std::string& path, const ordered_json& j) { write_atomic(path, j.dump(2) + "\n"); }

int cmd_build(const RunConfig& cfg) {
  const Family f = parse_family(cfg.family);
  std::string csv;
  ordered_json meta;
  meta["family"] = cfg.family;
  if (is_massive(f)) {
    const MassiveModel M = build_massive_cfg(cfg);
    std::string s = "x,g,h,f,u,V,imV\n";
    s.reserve(M.grid.N * 140);
    for (std::size_t j = 0; j < M.grid.N; ++j) {
      s += fmt(M.grid.x(j)) + ',' + fmt(M.g.values[j].real()) + ',' + fmt(M.h.values[j].real()) + ',' +
           fmt(M.f.values[j].real()) + ',' + fmt(M.u.values[j].real()) + ',' +
           fmt(M.V.values[j].real()) + ',' + fmt(M.imV[j]) + '\n';
    }
    csv = std::move(s);
    meta["m"] = M.m;
    meta["lambda"] = M.lambda;
    meta["grid"] = to_json(M.grid);
    meta["certified"] = M.certified;
  } else {
    GridSpec g;
    std::function<double(double)> eig, V;
    bool half_line = false;
    if (is_massless(f)) {
      const MasslessFamily fam = massless_cfg(cfg);
      g = resolve_grid(cfg, default_massless_grid());
      eig = [fam](double x) { return fam.eig(x); };
      V = [fam](double x) { return fam.V(x); };
      meta["nu"] = fam.nu;
      meta["classification"] = to_string(fam.classification);
    } else {
      g = resolve_grid(cfg, make_grid(64.0L, std::size_t{1} << 16));
      const bool mt = f == Family::classical_mt;
      eig = mt ? u_MT : u_NW;
      V = mt ? V_MT : V_NW;
      half_line = true;
    }
    std::string s = "x,eig,V\n";
    s.reserve(g.N * 60);
    for (std::size_t j = half_line ? g.N / 2 + 1 : 0; j < g.N; ++j) {
      const double x = g.x(j);
      s += fmt(x) + ',' + fmt(eig(x)) + ',' + fmt(V(x)) + '\n';
    }
    csv = std::move(s);
    meta["grid"] = to_json(g);
    meta["certified"] = true;
  }
  write_atomic(cfg.out, csv);
  if (!cfg.report.empty())
    write_json(cfg.report, meta);
  else if (!cfg.out.empty())
    write_json(cfg.out + ".json", meta);
  return kPass;
}

int cmd_verify(const RunConfig& cfg) {
  const Family f = parse_family(cfg.family);
  const Window w = parse_window(cfg.window);
  VerificationReport r;
  if (is_massive(f)) {
    r = verify_massive(build_massive_cfg(cfg), w);
  } else if (is_massless(f)) {
    const MasslessFamily fam = massless_cfg(cfg);
    r = verify_massless(fam, resolve_grid(cfg, default_massless_grid()), w);
  } else {
    r = verify_classical(f == Family::classical_mt);
  }
  write_json(cfg.report, to_json(r));
  return r.pass ? kPass : kFail;
}

int cmd_bounds(const RunConfig& cfg) {
  if (!is_massive(parse_family(cfg.family))) throw ConfigError("bounds needs a massive family");
  const MassiveModel M = build_massive_cfg(cfg);
  const auto checks = bounds_suite(M);
  ordered_json arr = ordered_json::array();
  bool ok = true;
  for (const auto& c : checks) {
    arr.push_back({{"id", c.id}, {"anchor", c.anchor}, {"margin", c.margin}, {"certified", c.certified},
                   {"passed", c.passed}});
    if (c.certified && !c.passed) ok = false;
  }
  write_json(cfg.report, {{"model", cfg.family}, {"m", M.m}, {"certified", M.certified}, {"checks", arr}});
  return ok ? kPass : kFail;
}

int cmd_limit_scan(const RunConfig& cfg) {
  if (parse_family(cfg.family) != Family::massive_nw) throw ConfigError("limit-scan runs on massive-nw");
  const double m = *cfg.mass;
  const auto cs = cfg.c_values.empty() ? default_c_values(m) : cfg.c_values;
  for (double c : cs)
    if (!(c > 0.0)) throw ConfigError("c values must be > 0");
  const GridSpec g = resolve_grid(cfg, default_limit_grid());
  const LimitScan S = limit_scan(m, cs, g, cfg.allow_uncertified);
  std::string csv = "c,e0,e1,e2,lambda_err,V_err\n";
  bool ok = true;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < S.rows.size(); ++i) {
    const auto& r = S.rows[i];
    csv += fmt(r.c) + ',' + fmt(r.e0) + ',' + fmt(r.e1) + ',' + fmt(r.e2) + ',' + fmt(r.lambda_err) + ',' +
           fmt(r.V_err) + '\n';
    rows.push_back({{"c", r.c}, {"e0", r.e0}, {"e1", r.e1}, {"e2", r.e2}, {"lambda_err", r.lambda_err},
                    {"V_err", r.V_err}, {"V_err_plus", r.V_err_plus}, {"V_err_minus", r.V_err_minus}});
    if (i > 0) {
      const auto& p = S.rows[i - 1];
      ok = ok && r.e0 < p.e0 && r.e1 < p.e1 && r.e2 < p.e2 && r.lambda_err < p.lambda_err;
    }
  }
  write_atomic(cfg.out, csv);
  ordered_json j;
  j["m"] = m;
  j["grid"] = to_json(g);
  j["rate"] = S.rate;
  j["matching_limit"] = S.matching_sign == LimitSign::plus ? "(1/2m)(1 + u''/u)" : "(1/2m)(1 - u''/u)";
  j["certified"] = std::all_of(cs.begin(), cs.end(), [m](double c) { return c * m > kNWCertifiedMass; });
  j["decreasing"] = ok;
  j["rows"] = rows;
  if (!cfg.report.empty()) write_json(cfg.report, j);
  else if (!cfg.out.empty()) write_json(cfg.out + ".json", j);
  return ok ? kPass : kFail;
}

// minimal CSV reader: header line, comma separated numbers
void read_columns(const std::string& path, const std::string& col, std::vector<double>& x,
                  std::vector<double>& v) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read '" + path + "'");
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty CSV '" + path + "'");
  std::vector<std::string> head;
  {
    std::stringstream ss(line);
    std::string h;
    while (std::getline(ss, h, ',')) head.push_back(h);
  }
  const auto ix = std::find(head.begin(), head.end(), "x") - head.begin();
  const auto iv = std::find(head.begin(), head.end(), col) - head.begin();
  if (ix == static_cast<long>(head.size()) || iv == static_cast<long>(head.size()))
    throw ConfigError("CSV lacks column 'x' or '" + col + "'");
  while (std::getline(is, line)) {
    std::stringstream ss(line);
    std::string cell;
    double xv = 0.0, vv = 0.0;
    for (long k = 0; std::getline(ss, cell, ','); ++k) {
      if (k == ix) xv = std::strtod(cell.c_str(), nullptr);
      if (k == iv) vv = std::strtod(cell.c_str(), nullptr);
    }
    x.push_back(xv);
    v.push_back(vv);
  }
}

int cmd_decay_fit(const RunConfig& cfg) {
  const Window w = parse_window(cfg.window);
  const FitModel model = cfg.fit_model == "power" ? FitModel::power : FitModel::power_log;
  DecayFit d;
  if (!cfg.input.empty()) {
    std::vector<double> x, v;
    read_columns(cfg.input, cfg.column, x, v);
    double xmax = 0.0;
    for (double t : x) xmax = std::max(xmax, std::abs(t));
    if (w.x_max > 0.5 * xmax) throw ConfigError("window leaves the guard region |x| <= L/2 of the input");
    d = decay_fit_points(x, v, w, model);
  } else {
    const Family f = parse_family(cfg.family);
    if (is_massive(f)) {
      const MassiveModel M = build_massive_cfg(cfg);
      d = decay_fit(from_real(M.grid, M.V.real_part()), w, model);
    } else if (is_massless(f)) {
      const MasslessFamily fam = massless_cfg(cfg);
      d = decay_fit(sample_V(fam, resolve_grid(cfg, default_massless_grid())), w, model);
    } else {
      throw ConfigError("decay-fit on a classical family needs --input");
    }
  }
  std::string csv = "x_min,x_max,model,exponent,log_coeff,residual\n";
  csv += fmt(d.window.x_min) + ',' + fmt(d.window.x_max) + ',' + to_string(d.model) + ',' + fmt(d.exponent) +
         ',' + (d.log_coeff ? fmt(*d.log_coeff) : std::string()) + ',' + fmt(d.residual) + '\n';
  write_atomic(cfg.out, csv);
  if (!cfg.report.empty()) write_json(cfg.report, to_json(d));
  return kPass;
}

int cmd_coupling_scan(const RunConfig& cfg) {
  if (parse_family(cfg.family) != Family::massless_even) throw ConfigError("coupling-scan runs on massless-even");
  if (cfg.couplings.empty()) throw ConfigError("--couplings is empty");
  const GridSpec g = resolve_grid(cfg, make_grid(256.0L, 4096));
  const CouplingScan S = coupling_scan(*cfg.nu, cfg.couplings, g);
  std::string csv = "lambda,e0_estimate\n";
  bool monotone = true, converged = true;
  for (std::size_t i = 0; i < S.points.size(); ++i) {
    csv += fmt(S.points[i].lambda) + ',' + fmt(S.points[i].e0) + '\n';
    converged = converged && S.points[i].converged;
    if (i > 0 && S.points[i].lambda > S.points[i - 1].lambda && S.points[i].e0 > S.points[i - 1].e0)
      monotone = false;
  }
  write_atomic(cfg.out, csv);
  if (!cfg.report.empty()) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : S.points)
      pts.push_back({{"lambda", p.lambda}, {"e0_estimate", p.e0}, {"converged", p.converged}, {"error", p.error}});
    write_json(cfg.report, {{"nu", S.nu}, {"grid", to_json(g)}, {"delta_grid", S.delta_grid},
                            {"monotone_non_increasing", monotone}, {"points", pts}});
  }
  return converged && monotone ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-energy and embedded-eigenvalue potentials for relativistic Schroedinger operators"};
  app.set_config("--config", "", "TOML/INI file with option values; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::size_t N = 0;
  std::string L;
  double mass = 0.0, nu = 0.0;
  app.add_option("--family", cfg.family, "massive-nw, moses-tuan, massless-even, massless-odd, classical-nw3d, classical-mt");
  auto* om = app.add_option("--mass", mass, "mass m (massive families)");
  auto* on = app.add_option("--nu", nu, "exponent nu (massless families)");
  auto* oL = app.add_option("--L", L, "grid half-width, e.g. 512 or 256pi");
  auto* oN = app.add_option("--N", N, "number of grid nodes (power of two)");
  app.add_option("--eps-sin", cfg.eps_sin, "seam threshold on |sin x|");
  app.add_option("--window", cfg.window, "decay window a:b");
  app.add_option("--fit-model", cfg.fit_model, "power or power_log");
  app.add_option("--out", cfg.out, "CSV output path (default stdout)");
  app.add_option("--report", cfg.report, "JSON output path");
  app.add_option("--input", cfg.input, "CSV input for decay-fit");
  app.add_option("--column", cfg.column, "CSV column fitted by decay-fit");
  app.add_option("--c-values", cfg.c_values, "speed-of-light values for limit-scan")->delimiter(',');
  app.add_option("--couplings", cfg.couplings, "couplings for coupling-scan")->delimiter(',');
  app.add_flag("--allow-uncertified", cfg.allow_uncertified, "build below the proven mass thresholds");

  const std::pair<const char*, const char*> commands[] = {
      {"build", "sample a model (CSV: x and its fields)"},
      {"verify", "run the full check suite and write a JSON report"},
      {"limit-scan", "non-relativistic limit table over c"},
      {"decay-fit", "fit the power-law decay of V"},
      {"coupling-scan", "lowest eigenvalue of |p| + lambda V_nu on a lattice"},
      {"bounds", "inequality checks only"}};
  for (const auto& [name, desc] : commands) app.add_subcommand(name, desc)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    apply_thread_cap();
    cfg.command = app.get_subcommands().front()->get_name();
    if (om->count()) cfg.mass = mass;
    if (on->count()) cfg.nu = nu;
    if (oL->count()) cfg.L = L;
    if (oN->count()) cfg.N = N;
    validate(cfg);
    if (cfg.command == "build") return cmd_build(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "bounds") return cmd_bounds(cfg);
    if (cfg.command == "limit-scan") return cmd_limit_scan(cfg);
    if (cfg.command == "decay-fit") return cmd_decay_fit(cfg);
    if (cfg.command == "coupling-scan") return cmd_coupling_scan(cfg);
  } catch (const CertificationError& e) {
    std::cerr << "certification error: " << e.what() << "\n";
    return kCert;
  } catch (const InsufficientData& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::logic_error& e) {
    // DomainError, UnsupportedParameters, InvalidSize
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kConfig;
}
