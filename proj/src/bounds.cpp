#include <algorithm>
#include <cmath>
#include <numbers>

#include "rnw/kernels.hpp"
#include "rnw/spectral.hpp"
#include "rnw/specfun.hpp"
#include "rnw/verify.hpp"

namespace rnw {

namespace {

constexpr double kPi = std::numbers::pi;

double jb(double x) { return japanese(x); }

// min over |x| <= L/2 of fn(j)
template <class F>
double min_guard(const GridSpec& g, F fn) {
  const double guard = 0.5 * g.L();
  double m = HUGE_VAL;
  for (std::size_t j = 0; j < g.N; ++j)
    if (std::abs(g.x(j)) <= guard) m = std::min(m, fn(j));
  return m;
}

template <class F>
double min_all(const GridSpec& g, F fn) {
  double m = HUGE_VAL;
  for (std::size_t j = 0; j < g.N; ++j) m = std::min(m, fn(j));
  return m;
}

// nodes nearest to n log-spaced x in [1e-2, L/2], plus x = 0
std::vector<std::size_t> kernel_nodes(const GridSpec& g, int n) {
  std::vector<std::size_t> nodes{g.N / 2};
  const double lo = std::log(1e-2), hi = std::log(0.5 * g.L());
  for (int i = 0; i < n; ++i) {
    const double x = std::exp(lo + (hi - lo) * i / (n - 1));
    nodes.push_back(g.index_of(x));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::vector<double> abs_of(const SampledFunction& s) {
  std::vector<double> a(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) a[j] = std::abs(s.values[j]);
  return a;
}

// |(omega_pm - lambda_0) h| <= omega_0^-1 |(p^2 pm 2p) h|, normalised by sup RHS
double iter_rule_margin(const SampledFunction& h, double m, int sign) {
  const double lam0 = std::sqrt(1.0 + m * m);
  const double s = sign;
  const auto lhs = apply_symbol(h, [&](double k) {
    const double w = std::sqrt((k + s) * (k + s) + m * m);
    return cplx((k * k + 2.0 * s * k) / (w + lam0));
  });
  const auto q = apply_symbol(h, [s](double k) { return cplx(k * k + 2.0 * s * k); });
  const auto rhs = apply_multiplier(from_real(h.grid, abs_of(q)), make_symbol(SymbolName::inv_omega0, m));
  double sup = 0.0;
  for (const auto& v : rhs.values) sup = std::max(sup, std::abs(v.real()));
  return min_guard(h.grid, [&](std::size_t j) {
           return rhs.values[j].real() - std::abs(lhs.values[j]);
         }) /
         sup;
}

void add(std::vector<BoundCheck>& out, const std::string& id, const std::string& anchor,
         const std::string& domain, double margin, bool certified = true) {
  auto c = make_check(id, anchor, domain, margin);
  c.certified = certified;
  out.push_back(std::move(c));
}

}  // namespace

std::pair<double, double> bessel_sandwich_margins(int n, double z_lo, double z_hi) {
  const double a = std::sqrt(2.0 / kPi);
  double lo = HUGE_VAL, up = HUGE_VAL;
  for (int i = 0; i < n; ++i) {
    const double z = std::exp(std::log(z_lo) + (std::log(z_hi) - std::log(z_lo)) * i / (n - 1));
    const double mid = a * bessel_k(0.0, z);
    const double lower = a * (1.0 - std::exp(-1.0)) * std::exp(-z) / std::sqrt(1.0 + 2.0 * z);
    const double upper = std::exp(-z) / std::sqrt(z);
    lo = std::min(lo, mid / lower - 1.0);
    up = std::min(up, upper / mid - 1.0);
  }
  return {lo, up};
}

std::vector<std::string> bound_ids(MassiveFamily family) {
  if (family == MassiveFamily::neumann_wigner)
    return {"Lemma-bh-h1-lower", "Lemma-bh-h1-upper", "Lemma-bh-h2",       "Lemma-bh-h3",
            "Lemma-bome-lower",  "Lemma-bome-upper",  "Lemma-lbomeh",      "Lemma-ubomeh",
            "Lemma-ub-p2sqh",    "Lemma-lb-of-ome-h", "Prop-lb-of-f",      "Prop-f-decay",
            "Lemma-iter-rule1",  "Lemma-iter-rule2"};
  return {"Lemma-lubound-lower", "Lemma-lubound-upper", "Lemma-lubound-j1", "Lemma-lubound-j2",
          "Lemma-lubound-j3",    "Lemma-bome-lower",    "Lemma-bome-upper", "Lemma-lbMT",
          "Lemma-ubMT",          "Lemma-ubppMT",        "Lemma-lbMT2",      "Prop-lf-of-fMT"};
}

std::vector<BoundCheck> bounds_suite(const MassiveModel& model, const BoundsOptions& opt) {
  const GridSpec& g = model.grid;
  const double m = model.m;
  const SampledFunction& h = model.h;
  const auto& hv = h.values;
  const auto& fv = model.f.values;
  std::vector<BoundCheck> out;
  const std::string all = "all grid nodes";
  const std::string guard = "|x| <= L/2";
  const std::string knodes = std::to_string(opt.kernel_points) + " log-spaced x in [1e-2, L/2] and x = 0";

  const auto [bl, bu] = bessel_sandwich_margins(opt.bessel_points);
  const std::string bdom = std::to_string(opt.bessel_points) + " log-spaced m|x| in [1e-2, 50]";

  // omega_0^-1 h by product integration against the K0 kernel
  const auto nodes = kernel_nodes(g, opt.kernel_points);
  const auto kw = k0_weights(m, g.dx());
  const auto inv_h = convolve_at(hv.data(), g.N, kw, nodes);
  auto kernel_min = [&](auto fn) {
    double r = HUGE_VAL;
    for (std::size_t i = 0; i < nodes.size(); ++i) r = std::min(r, fn(g.x(nodes[i]), inv_h[i].real()));
    return r;
  };

  const auto w0h = apply_multiplier(h, make_symbol(SymbolName::omega0, m));
  const auto p2h = apply_symbol(h, [m](double k) { return cplx(k * k / std::sqrt(k * k + m * m)); });

  if (model.family == MassiveFamily::neumann_wigner) {
    add(out, "Lemma-bh-h1-lower", "(1/6)/(1+x^2) < h(x)", all,
        min_all(g, [&](std::size_t j) { const double x = g.x(j); return hv[j].real() * (1 + x * x) - 1.0 / 6.0; }));
    add(out, "Lemma-bh-h1-upper", "h(x) < 1/(x^2+2/3)", all,
        min_all(g, [&](std::size_t j) { const double x = g.x(j); return 1.0 - hv[j].real() * (x * x + 2.0 / 3.0); }));
    add(out, "Lemma-bh-h2", "|h'(x)| <= 8 h(x)^(3/2)", all, min_all(g, [&](std::size_t j) {
          const double x = g.x(j);
          return 8.0 - std::abs(eval_h1(x)) / std::pow(eval_h(x), 1.5);
        }));
    add(out, "Lemma-bh-h3", "|h''(x)| <= 120 h(x)^(3/2)", all, min_all(g, [&](std::size_t j) {
          const double x = g.x(j);
          return 120.0 - std::abs(eval_h2(x)) / std::pow(eval_h(x), 1.5);
        }));
    add(out, "Lemma-bome-lower", "sqrt(2/pi)(1-1/e) e^-z/sqrt(1+2z) <= sqrt(2/pi) K0(z), z = m|x|", bdom, bl);
    add(out, "Lemma-bome-upper", "sqrt(2/pi) K0(z) <= e^-z/sqrt(z), z = m|x|", bdom, bu);
    add(out, "Lemma-lbomeh", "omega_0^-1 h >= <x>^-2/(25m)  (m > 18)", knodes,
        kernel_min([&](double x, double v) { return 25.0 * m * v * (1 + x * x) - 1.0; }), m > 18);
    add(out, "Lemma-ubomeh", "omega_0^-1 h <= (3+4m^2)/(sqrt2 m^3) <x>^-2", knodes,
        kernel_min([&](double x, double v) {
          return 1.0 - v * (1 + x * x) * std::sqrt(2.0) * m * m * m / (3 + 4 * m * m);
        }));
    add(out, "Lemma-ub-p2sqh", "|omega_0^-1 p^2 h| <= (700/m) <x>^-3  (m > 10)", guard,
        min_guard(g, [&](std::size_t j) {
          const double x = g.x(j);
          return 1.0 - std::abs(p2h.values[j]) * std::pow(jb(x), 3) * m / 700.0;
        }),
        m > 10);
    add(out, "Lemma-lb-of-ome-h", "omega_0 h >= <x>^-2  (m >= 146)", guard,
        min_guard(g, [&](std::size_t j) { const double x = g.x(j); return w0h.values[j].real() * (1 + x * x) - 1.0; }),
        m >= 146);
    add(out, "Prop-lb-of-f", "f >= 2 <x>^-2  (m >= 146)", all,
        min_all(g, [&](std::size_t j) { const double x = g.x(j); return fv[j].real() * (1 + x * x) - 2.0; }),
        m >= 146);
    {
      // |x| r(x) with r = |(omega_+ - lambda_0) f| / f stays bounded: its sup on
      // [200, 400] does not exceed 1.25 times its sup on [50, 200]
      const double lam0 = std::sqrt(1.0 + m * m);
      const auto wf = apply_symbol(model.f, [&](double k) {
        return cplx((k * k + 2 * k) / (std::sqrt((k + 1) * (k + 1) + m * m) + lam0));
      });
      const double xmax = std::min(400.0, 0.5 * g.L());
      double s1 = 0.0, s2 = 0.0;
      for (std::size_t j = 0; j < g.N; ++j) {
        const double ax = std::abs(g.x(j));
        if (ax < 50.0 || ax > xmax) continue;
        const double v = ax * std::abs(wf.values[j]) / fv[j].real();
        if (ax <= 200.0)
          s1 = std::max(s1, v);
        else
          s2 = std::max(s2, v);
      }
      add(out, "Prop-f-decay", "|(omega_+ - lambda_0) f| / f = O(|x|^-1)  (m >= 146)",
          "50 <= |x| <= min(400, L/2)", s1 > 0 ? 1.25 - s2 / s1 : -1.0, m >= 146);
    }
    add(out, "Lemma-iter-rule1", "|(omega_+ - lambda_0) h| <= omega_0^-1 |(p^2+2p) h|", guard,
        iter_rule_margin(h, m, +1));
    add(out, "Lemma-iter-rule2", "|(omega_- - lambda_0) h| <= omega_0^-1 |(p^2-2p) h|", guard,
        iter_rule_margin(h, m, -1));
  } else {
    add(out, "Lemma-lubound-lower", "c1 <x>^-1 <= h~(x), c1 = 0.26", all,
        min_all(g, [&](std::size_t j) { return hv[j].real() * jb(g.x(j)) - kMT_c1; }));
    add(out, "Lemma-lubound-upper", "h~(x) <= c2 <x>^-1, c2 = 1.02", all,
        min_all(g, [&](std::size_t j) { return kMT_c2 - hv[j].real() * jb(g.x(j)); }));
    for (int d = 1; d <= 3; ++d) {
      double mg = min_all(g, [&](std::size_t j) {
        const double x = g.x(j);
        return kMT_c3 - std::abs(eval_h_tilde_derivative(x, d)) * (1 + x * x);
      });
      // both one-sided values at the kink
      mg = std::min(mg, kMT_c3 - std::abs(eval_h_tilde_derivative(0.0, d, false)));
      add(out, "Lemma-lubound-j" + std::to_string(d),
          "|h~^(" + std::to_string(d) + ")(x)| <= c3 <x>^-2, c3 = 2.2", all + " and x = 0+-", mg);
    }
    add(out, "Lemma-bome-lower", "sqrt(2/pi)(1-1/e) e^-z/sqrt(1+2z) <= sqrt(2/pi) K0(z), z = m|x|", bdom, bl);
    add(out, "Lemma-bome-upper", "sqrt(2/pi) K0(z) <= e^-z/sqrt(z), z = m|x|", bdom, bu);
    add(out, "Lemma-lbMT", "omega_0^-1 h~ >= c1/(10m) <x>^-1  (m > 20)", knodes,
        kernel_min([&](double x, double v) { return v * jb(x) * 10.0 * m / kMT_c1 - 1.0; }), m > 20);
    add(out, "Lemma-ubMT", "omega_0^-1 h~ <= c2 (2/m + 1/m^2) <x>^-1", knodes,
        kernel_min([&](double x, double v) { return 1.0 - v * jb(x) / (kMT_c2 * (2.0 / m + 1.0 / (m * m))); }));
    add(out, "Lemma-ubppMT", "|omega_0^-1 p^2 h~| <= (c3 sqrt2/m)(2 + 3/(4m^2)) <x>^-2", guard,
        min_guard(g, [&](std::size_t j) {
          const double x = g.x(j);
          const double rhs = kMT_c3 * std::sqrt(2.0) / m * (2.0 + 3.0 / (4.0 * m * m));
          return 1.0 - std::abs(p2h.values[j]) * (1 + x * x) / rhs;
        }));
    add(out, "Lemma-lbMT2", "omega_0 h~ >= <x>^-1  (m > 34)", guard,
        min_guard(g, [&](std::size_t j) { return w0h.values[j].real() * jb(g.x(j)) - 1.0; }), m > 34);
    add(out, "Prop-lf-of-fMT", "f~ >= 2 <x>^-1  (m > 34)", all,
        min_all(g, [&](std::size_t j) { return fv[j].real() * jb(g.x(j)) - 2.0; }), m > 34);
  }
  return out;
}

}  // namespace rnw
