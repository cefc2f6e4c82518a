// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rnw/limits.hpp"
#include "rnw/massive.hpp"
#include "rnw/massless.hpp"
#include "rnw/spectral.hpp"
#include "rnw/verify.hpp"

using namespace rnw;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const BoundCheck* find(const std::vector<BoundCheck>& cs, const std::string& id) {
  for (const auto& c : cs)
    if (c.id == id) return &c;
  return nullptr;
}

// shared by criteria 4 and 5
const MassiveModel& nw146() {
  static const MassiveModel M = build_massive(146.0, default_massive_grid());
  return M;
}

Outcome gauss_value() {
  double worst = 0.0;
  for (double nu : {0.1, 0.3, 0.45}) {
    const double ref = static_cast<double>(oracle::gamma_ref(0.5L) * oracle::gamma_ref(0.5L - nu) /
                                           oracle::gamma_ref(-nu));
    worst = std::max(worst, std::abs(hyp2f1(0.5 + nu, -0.5, 0.5, 1.0) / ref - 1.0));
  }
  return {worst <= 1e-9, "max rel err " + num(worst)};
}

Outcome bessel_sandwich() {
  const auto [lo, hi] = bessel_sandwich_margins(100);
  return {lo >= 0.0 && hi >= 0.0, "margins lower " + num(lo) + ", upper " + num(hi)};
}

Outcome poisson() {
  const GridSpec g = default_massless_grid();
  MultiplierOptions opt;
  opt.boundary = Boundary::free;
  const auto absk = make_symbol(SymbolName::abs_k);
  const auto e = apply_multiplier(sample([](double x) { return 1 / (1 + x * x); }, g), absk, opt);
  const auto o = apply_multiplier(sample([](double x) { return x / (1 + x * x); }, g), absk, opt);
  double de = 0.0, dodd = 0.0;
  for (std::size_t j = 0; j < g.N; ++j) {
    const double x = g.x(j), q = (1 + x * x) * (1 + x * x);
    if (std::abs(x) > 0.5 * g.L()) continue;
    de = std::max(de, std::abs(e[j] - (1 - x * x) / q));
    dodd = std::max(dodd, std::abs(o[j] - 2 * x / q));
  }
  return {de <= 1e-6 && dodd <= 1e-6, "sup err even " + num(de) + ", odd " + num(dodd)};
}

Outcome massive_nw() {
  const MassiveModel& M = nw146();
  const bool a = M.f_bound_margin >= 0.0;
  const bool b = M.imag_diagnostic <= 1e-7 * M.sup_V;
  bool c = true;
  for (double x : {pi, 2 * pi, 3 * pi}) c = c && std::isfinite(M.V[M.grid.index_of(x)].real());
  const double res = eigen_residual(M);
  const auto fit = decay_fit(from_real(M.grid, M.V.real_part()), {}, FitModel::power);
  const bool d = res <= 1e-6, e = std::abs(fit.exponent + 1.0) <= 0.1;
  return {a && b && c && d && e,
          "f<x>^2-2 min " + num(M.f_bound_margin) + ", Im/sup " + num(M.imag_diagnostic / M.sup_V) +
              ", V finite at pi,2pi,3pi " + (c ? "yes" : "no") + ", residual " + num(res) + ", exponent " +
              num(fit.exponent)};
}

Outcome seam() {
  const MassiveModel& M = nw146();
  const double r = M.seam_diagnostic / M.sup_V;
  return {r <= 1e-6, "|V_A - V_B|/sup|V| " + num(r)};
}

Outcome moses_tuan() {
  const MassiveModel M = build_moses_tuan(40.0, default_massive_grid());
  const auto checks = bounds_suite(M);
  bool ok = true;
  std::string failed;
  for (const auto& c : checks) {
    if (c.id.rfind("Lemma-lubound", 0) != 0 && c.id != "Prop-lf-of-fMT") continue;
    if (!c.passed) {
      ok = false;
      failed += " " + c.id + " (margin " + num(c.margin) + ")";
    }
  }
  const auto fit = decay_fit(from_real(M.grid, M.V.real_part()), {}, FitModel::power);
  const bool e = std::abs(fit.exponent + 1.0) <= 0.1;
  const auto* lf = find(checks, "Prop-lf-of-fMT");
  return {ok && e, "f~<x>-2 min " + num(lf ? lf->margin : NAN) + ", exponent " + num(fit.exponent) +
                       (failed.empty() ? "" : ", failing:" + failed)};
}

Outcome nonrel_limit() {
  const auto S = limit_scan(1.0, {160, 320, 640, 1280}, default_limit_grid());
  bool ok = true;
  std::string ratios;
  for (std::size_t i = 1; i < S.rows.size(); ++i) {
    const auto &p = S.rows[i - 1], &r = S.rows[i];
    const double q = p.e0 / r.e0;
    ratios += (i > 1 ? "," : "") + num(q);
    ok = ok && q >= 3.2 && q <= 4.8 && r.lambda_err < p.lambda_err && r.e1 < p.e1 && r.e2 < p.e2;
  }
  return {ok, "e0 ratios " + ratios + ", rate " + num(S.rate)};
}

Outcome classical() {
  const double nw = classical_nw_identity({0.7, 1.9, 5.3, 12.1});
  const double mt = classical_mt_identity({0.7, 1.9, 5.3});
  return {nw <= 1e-5 && mt <= 1e-5, "NW " + num(nw) + ", MT " + num(mt)};
}

Outcome massless_decay() {
  const GridSpec g = default_massless_grid();
  struct Row {
    Parity p;
    double nu, want;
  };
  bool ok = true;
  std::string d;
  for (const Row& r : {Row{Parity::even, 0.3, -1.0}, Row{Parity::even, 0.75, -0.5}, Row{Parity::odd, 1.0, -2.0},
                       Row{Parity::odd, 1.75, -0.5}}) {
    const auto fit = decay_fit(sample_V(make_massless(r.p, r.nu), g), {}, FitModel::power);
    ok = ok && std::abs(fit.exponent - r.want) <= 0.1;
    d += to_string(r.p) + " " + num(r.nu) + ": " + num(fit.exponent) + ", ";
  }
  // |V| |x| / log|x| stays within a factor 1.25 over the window
  for (const auto& fam : {make_massless(Parity::even, 0.5), make_massless(Parity::odd, 1.5)}) {
    const auto V = sample_V(fam, g);
    double lo = HUGE_VAL, hi = 0.0;
    for (std::size_t j = 0; j < g.N; ++j) {
      const double ax = std::abs(g.x(j));
      if (ax < 50.0 || ax > 400.0) continue;
      const double q = std::abs(V[j]) * ax / std::log(ax);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    ok = ok && hi / lo <= 1.25;
    d += to_string(fam.parity) + " " + num(fam.nu) + " log ratio " + num(hi / lo) + ", ";
  }
  d.resize(d.size() - 2);
  return {ok, d};
}

Outcome zero_energy() {
  const GridSpec g = default_massless_grid();
  ResidualOptions an;
  an.mode = ResidualMode::analytic;
  const double a1 = residual_even(1.0, g, an), a2 = residual_odd(1.0, g, an);
  const double s1 = residual_even(0.75, g), s2 = residual_odd(1.5, g);
  return {a1 <= 1e-6 && a2 <= 1e-6 && s1 <= 1e-4 && s2 <= 1e-4,
          "analytic " + num(a1) + ", " + num(a2) + "; spectral even 0.75 " + num(s1) + ", odd 1.5 " + num(s2)};
}

Outcome coupling() {
  const auto S = coupling_scan(0.75, {0.0, 0.5, 1.0, 1.5, 2.0});
  bool mono = true;
  std::string e;
  for (std::size_t i = 0; i < S.points.size(); ++i) {
    if (i > 0 && S.points[i].e0 > S.points[i - 1].e0) mono = false;
    e += (i ? "," : "") + num(S.points[i].e0);
  }
  const double dg = S.delta_grid;
  const bool at05 = S.points[1].e0 >= -dg, at15 = S.points[3].e0 < -dg;
  return {mono && at05 && at15, "E0 " + e + ", delta " + num(dg) + ", monotone " + (mono ? "yes" : "no") +
                                    ", >= -delta at 0.5 " + (at05 ? "yes" : "no") + ", < -delta at 1.5 " +
                                    (at15 ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1  Gauss value of 2F1 at z = 1", gauss_value},
      {"2  Bessel K0 sandwich", bessel_sandwich},
      {"3  Poisson-kernel multiplier oracles", poisson},
      {"4  Neumann-Wigner model m = 146", massive_nw},
      {"5  two-formula seam", seam},
      {"6  Moses-Tuan model m = 40", moses_tuan},
      {"7  non-relativistic limit m = 1", nonrel_limit},
      {"8  classical identities", classical},
      {"9  massless decay table", massless_decay},
      {"10 zero-energy residuals", zero_energy},
      {"11 coupling scan nu = 0.75", coupling},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-40s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), s, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
