#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rnw/errors.hpp"
#include "rnw/limits.hpp"
#include "rnw/spectral.hpp"
#include "rnw/verify.hpp"

namespace rnw {

using nlohmann::ordered_json;

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::bound: return "bound";
    case CheckKind::residual: return "residual";
    case CheckKind::decay: return "decay";
    case CheckKind::diagnostic: return "diagnostic";
  }
  return "?";
}

BoundCheck make_check(std::string id, std::string anchor, std::string domain, double margin,
                      CheckKind kind, double tol_abs) {
  BoundCheck c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.domain = std::move(domain);
  c.kind = kind;
  c.margin = margin;
  c.tol_abs = tol_abs;
  c.passed = std::isfinite(margin) && margin >= -tol_abs;
  return c;
}

double eigen_residual(const MassiveModel& model, bool masked) {
  const GridSpec& g = model.grid;
  const auto wu = apply_multiplier(model.u, make_symbol(SymbolName::omega, model.m));
  const double guard = model.guard_fraction * g.L();
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < g.N; ++j) {
    if (std::abs(g.x(j)) > guard) continue;
    if (masked && !off_singular(model, j)) continue;
    const double u = model.u.values[j].real();
    const cplx r = wu.values[j] + (model.V.values[j].real() - model.lambda) * u;
    num += std::norm(r);
    den += u * u;
  }
  return std::sqrt(num / den);
}

VerificationReport assemble_report(ordered_json model, std::vector<BoundCheck> checks,
                                   ordered_json residuals, std::vector<DecayFit> decay,
                                   ordered_json diagnostics) {
  VerificationReport r;
  std::stable_sort(checks.begin(), checks.end(),
                   [](const BoundCheck& a, const BoundCheck& b) { return a.id < b.id; });
  r.model = std::move(model);
  r.checks = std::move(checks);
  r.residuals = std::move(residuals);
  r.decay = std::move(decay);
  r.diagnostics = std::move(diagnostics);
  if (r.checks.empty()) {
    r.pass = false;
    r.reason = "no checks";
    return r;
  }
  for (const auto& c : r.checks)
    if (c.certified && !c.passed) r.failing.push_back(c.id);
  r.pass = r.failing.empty();
  r.reason = r.pass ? "all certified checks passed" : "certified checks failed";
  return r;
}

ordered_json to_json(const GridSpec& g) { return {{"L", g.L()}, {"N", g.N}}; }

ordered_json to_json(const DecayFit& d) {
  ordered_json j;
  j["window"] = {d.window.x_min, d.window.x_max};
  j["model"] = to_string(d.model);
  j["exponent"] = d.exponent;
  if (d.log_coeff) j["log_coeff"] = *d.log_coeff;
  j["residual"] = d.residual;
  j["masked_fraction"] = d.masked_fraction;
  j["clamped"] = d.clamped;
  return j;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["model"] = r.model;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["kind"] = to_string(c.kind);
    cj["domain"] = c.domain;
    cj["margin"] = std::isfinite(c.margin) ? ordered_json(c.margin) : ordered_json(nullptr);
    cj["tol_abs"] = c.tol_abs;
    cj["certified"] = c.certified;
    cj["passed"] = c.passed;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["residuals"] = r.residuals;
  ordered_json decay = ordered_json::array();
  for (const auto& d : r.decay) decay.push_back(to_json(d));
  j["decay"] = std::move(decay);
  j["diagnostics"] = r.diagnostics;
  j["verdict"] = {{"pass", r.pass}, {"failing", r.failing}, {"reason", r.reason}};
  return j;
}

namespace {

BoundCheck residual_check(const std::string& id, const std::string& what, double value, double tol) {
  std::ostringstream os;
  os << what << " <= " << tol;
  return make_check(id, os.str(), "|x| <= L/2", tol - value, CheckKind::residual, 0.0);
}

BoundCheck exponent_check(const std::string& id, double got, double expected, double tol) {
  std::ostringstream os;
  os << "fitted exponent within " << expected << " +- " << tol;
  return make_check(id, os.str(), "decay window", tol - std::abs(got - expected), CheckKind::decay, 0.0);
}

// sup/inf of |v| |x| / log|x| over the window
double log_corrected_ratio(const SampledFunction& v, Window w) {
  double lo = HUGE_VAL, hi = 0.0;
  const GridSpec& g = v.grid;
  for (std::size_t j = 0; j < g.N; ++j) {
    const double ax = std::abs(g.x(j));
    if (ax < w.x_min || ax > w.x_max) continue;
    const double q = std::abs(v.values[j]) * ax / std::log(ax);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  return hi / lo;
}

}  // namespace

VerificationReport verify_massive(const MassiveModel& M, Window window) {
  const bool nw = M.family == MassiveFamily::neumann_wigner;
  ordered_json model;
  model["family"] = to_string(M.family);
  model["m"] = M.m;
  model["lambda"] = M.lambda;
  model["grid"] = to_json(M.grid);
  model["eps_sin"] = M.eps_sin;
  model["scale"] = M.scale;
  model["mass_certified"] = M.mass_certified;
  model["certified"] = M.certified;

  auto checks = bounds_suite(M);

  const double res = eigen_residual(M, true);
  const double res_all = eigen_residual(M, false);
  checks.push_back(residual_check("Residual-eigen", "relative L2 residual of H u = lambda u", res,
                                  nw ? 1e-6 : 1e-5));

  const double sup = M.sup_V;
  checks.push_back(make_check("Diagnostic-imag", "max |Im V| <= 1e-7 sup |V|", "|x| <= L/2",
                              1e-7 - M.imag_diagnostic / sup, CheckKind::diagnostic, 0.0));
  {
    auto c = make_check("Diagnostic-seam", "|V_A - V_B| <= 1e-6 sup |V| on eps <= |sin x| <= 2 eps",
                        "seam band, |x| <= L/2", 1e-6 - M.seam_diagnostic / sup,
                        CheckKind::diagnostic, 0.0);
    // h~ is only C^2, which caps the agreement of the two formulas
    c.certified = nw;
    checks.push_back(c);
  }
  double worst_at_pi = 0.0;
  bool finite = true;
  for (int k = 1; k <= 3; ++k) {
    const std::size_t j = M.grid.index_of(k * std::numbers::pi / M.scale);
    const double v = M.V.values[j].real();
    finite = finite && std::isfinite(v);
    worst_at_pi = std::max(worst_at_pi, std::abs(v));
  }
  checks.push_back(make_check("Diagnostic-V-finite-at-zeros", "V finite at x = pi, 2pi, 3pi",
                              "3 nodes", finite ? 1.0 : -1.0, CheckKind::diagnostic, 0.0));

  std::vector<DecayFit> fits;
  double exponent = std::nan("");
  try {
    const auto Vr = from_real(M.grid, M.V.real_part());
    fits.push_back(decay_fit(Vr, window, FitModel::power));
    exponent = fits.back().exponent;
  } catch (const std::exception&) {
  }
  checks.push_back(exponent_check("Decay-V", exponent, -1.0, 0.1));

  ordered_json residuals{{"eigen", res}, {"eigen_unmasked", res_all}};
  ordered_json diag;
  diag["imag"] = M.imag_diagnostic;
  diag["imag_rel"] = M.imag_diagnostic / sup;
  diag["seam"] = M.seam_diagnostic;
  diag["seam_rel"] = M.seam_diagnostic / sup;
  diag["sup_V"] = sup;
  diag["f_bound_margin"] = M.f_bound_margin;
  diag["max_abs_V_at_pi_multiples"] = worst_at_pi;
  return assemble_report(std::move(model), std::move(checks), std::move(residuals), std::move(fits),
                         std::move(diag));
}

VerificationReport verify_massless(const MasslessFamily& fam, const GridSpec& grid, Window window) {
  const bool odd = fam.parity == Parity::odd;
  ordered_json model;
  model["family"] = odd ? "massless-odd" : "massless-even";
  model["nu"] = fam.nu;
  model["grid"] = to_json(grid);
  model["classification"] = to_string(fam.classification);
  model["decay_class"] = fam.decay_class;

  std::vector<BoundCheck> checks;
  ordered_json residuals, diag;

  const double rs = odd ? residual_odd(fam.nu, grid) : residual_even(fam.nu, grid);
  residuals["spectral"] = rs;
  checks.push_back(residual_check("Residual-zero-energy", "relative L2 residual of (|p| + V) u", rs, 1e-4));
  if (std::abs(fam.nu - 1.0) < 1e-12) {
    ResidualOptions ro;
    ro.mode = ResidualMode::analytic;
    const double ra = odd ? residual_odd(1.0, grid, ro) : residual_even(1.0, grid, ro);
    residuals["analytic"] = ra;
    checks.push_back(residual_check("Residual-analytic-nu1", "closed-form |p| u_1 residual", ra, 1e-9));
  }

  const auto V = sample_V(fam, grid);
  std::vector<DecayFit> fits;
  if (fam.decay_exponent != 0.0 || fam.log_corrected) {
    double exponent = std::nan("");
    try {
      fits.push_back(decay_fit(V, window, fam.log_corrected ? FitModel::power_log : FitModel::power));
      exponent = fits.back().exponent;
    } catch (const std::exception&) {
    }
    checks.push_back(exponent_check("Decay-V", exponent, fam.log_corrected ? -1.0 : fam.decay_exponent, 0.1));
    if (fam.log_corrected) {
      Window w = window;
      w.x_max = std::min(w.x_max, 0.5 * grid.L());
      const double ratio = log_corrected_ratio(V, w);
      diag["log_corrected_ratio"] = ratio;
      checks.push_back(make_check("Decay-log-bounded", "sup/inf of |V| |x| / log|x| <= 1.25",
                                  "decay window", 1.25 - ratio, CheckKind::decay, 0.0));
    }
  }
  if (!odd && fam.nu < 0.5) {
    Window w = window;
    w.x_max = std::min(w.x_max, 0.5 * grid.L());
    const double est = plateau_estimate(fam.nu, w.x_min, w.x_max);
    const double want = plateau_constant(fam.nu);
    diag["plateau_estimate"] = est;
    diag["plateau_constant"] = want;
    checks.push_back(make_check("Decay-plateau", "|x| V(x) -> Gamma-ratio constant within 5%",
                                "decay window", 0.05 - std::abs(est / want - 1.0), CheckKind::decay, 0.0));
  }

  const auto growth = l2_window_growth(odd ? fam.nu - 0.5 : fam.nu);
  diag["l2_increment_ratio"] = growth.increment_ratio;
  const bool eig = fam.classification == Classification::eigenvalue;
  checks.push_back(make_check("Remark-classification", "eigenfunction in L2 iff classified eigenvalue",
                              "window doubling from 100", growth.converges == eig ? 1.0 : -1.0,
                              CheckKind::diagnostic, 0.0));

  if (!odd) {
    const auto ss = sign_structure(fam, 0.5 * grid.L());
    diag["zero_count"] = ss.zero_count;
    diag["last_zero"] = ss.last_zero;
    checks.push_back(make_check("Remark-positive-tail", "V > 0 beyond its last zero",
                                "0 <= x <= L/2", ss.positive_tail ? 1.0 : -1.0,
                                CheckKind::diagnostic, 0.0));
  } else if (fam.nu > 1.0) {
    const double e = derivative_relation_error(fam.nu, grid);
    diag["derivative_relation_error"] = e;
    auto c = make_check("Diagnostic-derivative-relation", "v_nu = (2-2nu)^-1 u_(nu-1)' to 1e-7",
                        "|x| <= L/2", 1e-7 - e, CheckKind::diagnostic, 0.0);
    checks.push_back(c);
  }
  return assemble_report(std::move(model), std::move(checks), std::move(residuals), std::move(fits),
                         std::move(diag));
}

VerificationReport verify_classical(bool moses_tuan) {
  ordered_json model{{"family", moses_tuan ? "classical-mt" : "classical-nw3d"}};
  std::vector<BoundCheck> checks;
  ordered_json residuals, diag;
  const std::vector<double> radii = moses_tuan ? std::vector<double>{0.7, 1.9, 5.3}
                                               : std::vector<double>{0.7, 1.9, 5.3, 12.1};
  const double res = moses_tuan ? classical_mt_identity(radii) : classical_nw_identity(radii);
  residuals["identity"] = res;
  checks.push_back(make_check("Identity-classical", "(-Laplace + V) u = u residual <= 1e-5",
                              "listed radii", 1e-5 - res, CheckKind::residual, 0.0));
  const double u0 = moses_tuan ? u_MT(1e-6) : u_NW(1e-6);
  checks.push_back(make_check("Limit-u-at-origin", "u(r) -> 1 as r -> 0", "r = 1e-6",
                              1e-6 - std::abs(u0 - 1.0), CheckKind::diagnostic, 0.0));
  std::vector<DecayFit> fits;
  if (!moses_tuan) {
    double lo = HUGE_VAL, hi = 0.0;
    for (double r : {50.0, 100.0, 200.0, 400.0}) {
      const double q = r * nw_asymptote_envelope(r);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    diag["asymptote_C_min"] = lo;
    diag["asymptote_C_max"] = hi;
    checks.push_back(make_check("Asymptote-NW", "max |r V_NW + 8 sin 2r| <= C/r (C spread <= 25%)",
                                "r in {50, 100, 200, 400}", 1.25 - hi / lo, CheckKind::decay, 0.0));
  } else {
    std::vector<double> x, v;
    for (int i = 0; i <= 200000; ++i) {
      const double r = 50.0 + 350.0 * i / 200000.0;
      x.push_back(r);
      v.push_back(V_MT(r));
    }
    fits.push_back(decay_fit_points(x, v, {50.0, 400.0}, FitModel::power));
    checks.push_back(exponent_check("Decay-V", fits.back().exponent, -1.0, 0.1));
  }
  return assemble_report(std::move(model), std::move(checks), std::move(residuals), std::move(fits),
                         std::move(diag));
}

}  // namespace rnw
