#include "rnw/massive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rnw/errors.hpp"
#include "rnw/spectral.hpp"

namespace rnw {

std::string to_string(MassiveFamily f) {
  return f == MassiveFamily::neumann_wigner ? "massive-nw" : "moses-tuan";
}

double eval_g(double x) { return 2.0 * x - std::sin(2.0 * x); }

double eval_h(double x) {
  const double g = eval_g(x);
  return 1.0 / (1.0 + g * g);
}

double eval_h1(double x) {
  const double g = eval_g(x), g1 = 4.0 * std::sin(x) * std::sin(x), h = eval_h(x);
  return -2.0 * g * g1 * h * h;
}

double eval_h2(double x) {
  const double g = eval_g(x), s = std::sin(x);
  const double g1 = 4.0 * s * s, g2 = 4.0 * std::sin(2.0 * x), h = eval_h(x);
  return 6.0 * g1 * g1 * h * h - 2.0 * g * g2 * h * h - 8.0 * g1 * g1 * h * h * h;
}

double eval_h_tilde(double x) { return 1.0 / (1.0 + eval_g(std::abs(x))); }

double eval_h_tilde_derivative(double x, int j, bool right_side) {
  const double a = std::abs(x);
  const double G = eval_g(a), s = std::sin(a);
  const double G1 = 4.0 * s * s, G2 = 4.0 * std::sin(2.0 * a), G3 = 8.0 * std::cos(2.0 * a);
  const double h = 1.0 / (1.0 + G);
  double d = 0.0;
  switch (j) {
    case 0: return h;
    case 1: d = -G1 * h * h; break;
    case 2: d = -G2 * h * h + 2.0 * G1 * G1 * h * h * h; break;
    case 3: d = -G3 * h * h + 6.0 * G1 * G2 * h * h * h - 6.0 * G1 * G1 * G1 * h * h * h * h; break;
    default: throw std::invalid_argument("eval_h_tilde_derivative: j must be 0..3");
  }
  // even function: the j-th derivative picks up (-1)^j on the left
  const bool left = (x < 0.0) || (x == 0.0 && !right_side);
  return (left && (j % 2 == 1)) ? -d : d;
}

GridSpec default_massive_grid() {
  return make_grid(256.0L * std::numbers::pi_v<long double>, std::size_t{1} << 20);
}

namespace {

using R = long double;

MassiveModel build_impl(MassiveFamily fam, double m, const GridSpec& grid, const BuildOptions& opt) {
  if (!(m > 0.0)) throw DomainError("mass must be > 0");
  if (!(opt.eps_sin > 0.0 && opt.eps_sin < 0.5)) throw DomainError("eps_sin must be in (0, 0.5)");
  const std::size_t N = grid.N;
  const bool nw = fam == MassiveFamily::neumann_wigner;
  SpectralWork<R> W(grid);

  std::vector<R> g(N), h(N), s(N);
  for (std::size_t j = 0; j < N; ++j) {
    const R x = W.x[j];
    const R ax = nw ? x : std::abs(x);
    g[j] = 2 * ax - std::sin(2 * ax);
    h[j] = nw ? 1 / (1 + g[j] * g[j]) : 1 / (1 + g[j]);
    s[j] = std::sin(x);
  }

  const R mm = m;
  const R lam0 = std::sqrt(1 + mm * mm);
  const R lam = 1 / (lam0 + mm);
  auto wplus = [mm](R k) { return std::sqrt((k + 1) * (k + 1) + mm * mm); };
  auto wminus = [mm](R k) { return std::sqrt((k - 1) * (k - 1) + mm * mm); };

  const auto fc = W.apply(W.forward(h), [&](R k) { return wplus(k) + wminus(k); });
  std::vector<R> f(N), u(N);
  for (std::size_t j = 0; j < N; ++j) {
    f[j] = fc[j].real();
    u[j] = f[j] * s[j];
  }

  // formula A: lambda - omega(p)u / u
  const auto omu = W.apply(W.forward(u), [mm](R k) { return k * k / (std::sqrt(k * k + mm * mm) + mm); });
  // formula B: -(omega_+ - lambda_0) f / f - (regular second term)
  const auto wpf = W.apply(W.forward(f), [&](R k) { return (k * k + 2 * k) / (wplus(k) + lam0); });

  MassiveModel M;
  M.family = fam;
  M.m = m;
  M.lambda = static_cast<double>(lam);
  M.grid = grid;
  M.eps_sin = opt.eps_sin;
  M.guard_fraction = opt.guard_fraction;

  std::vector<cplx> gv(N), hv(N), fv(N), uv(N), Vv(N);
  M.imV.assign(N, 0.0);
  const R eps = opt.eps_sin;
  const double guard = opt.guard_fraction * grid.L();
  double imag = 0.0, seam = 0.0, supv = 0.0;
  double fmargin = HUGE_VAL;
  for (std::size_t j = 0; j < N; ++j) {
    const R x = W.x[j];
    const R as = std::abs(s[j]);
    std::complex<R> VA(0), VB(0);
    const bool needA = as >= eps;
    const bool needB = as <= 2 * eps;
    if (needA) VA = lam - omu[j] / u[j];
    if (needB) {
      const std::complex<R> phase(std::cos(x), -std::sin(x));
      const std::complex<R> second =
          nw ? R(16) * phase * g[j] * h[j] * h[j] * s[j] / f[j]
             : R(8) * h[j] * h[j] * phase * std::sin(std::abs(x)) / f[j];
      VB = -wpf[j] / f[j] - second;
    }
    const std::complex<R> V = needA ? VA : VB;
    gv[j] = static_cast<double>(g[j]);
    hv[j] = static_cast<double>(h[j]);
    fv[j] = static_cast<double>(f[j]);
    uv[j] = static_cast<double>(u[j]);
    Vv[j] = static_cast<double>(V.real());
    M.imV[j] = static_cast<double>(V.imag());

    const double xd = static_cast<double>(x);
    const double fb = nw ? static_cast<double>(f[j]) * (1.0 + xd * xd) - 2.0
                         : static_cast<double>(f[j]) * std::sqrt(1.0 + xd * xd) - 2.0;
    fmargin = std::min(fmargin, fb);
    if (std::abs(xd) <= guard) {
      imag = std::max(imag, std::abs(static_cast<double>(V.imag())));
      supv = std::max(supv, std::abs(static_cast<double>(V.real())));
      if (needA && needB) seam = std::max(seam, static_cast<double>(std::abs(VA - VB)));
    }
  }
  M.g = {grid, std::move(gv)};
  M.h = {grid, std::move(hv)};
  M.f = {grid, std::move(fv)};
  M.u = {grid, std::move(uv)};
  M.V = {grid, std::move(Vv)};
  M.imag_diagnostic = imag;
  M.seam_diagnostic = seam;
  M.sup_V = supv;
  M.f_bound_margin = fmargin;
  M.mass_certified = nw ? m >= kNWCertifiedMass : m > kMTCertifiedMass;
  // the grid check carries the same 1e-7 slack as every bound check
  const bool f_ok = fmargin >= -1e-7;
  M.certified = M.mass_certified && f_ok;
  if (M.mass_certified && !f_ok && !opt.allow_uncertified) {
    std::ostringstream os;
    os << to_string(fam) << ": f lower bound fails on the grid (min margin " << fmargin
       << ") although m = " << m << " is above the proven threshold";
    throw CertificationError(os.str());
  }
  return M;
}

}  // namespace

MassiveModel build_massive(double m, const GridSpec& grid, const BuildOptions& opt) {
  return build_impl(MassiveFamily::neumann_wigner, m, grid, opt);
}

MTModel build_moses_tuan(double m, const GridSpec& grid, const BuildOptions& opt) {
  return build_impl(MassiveFamily::moses_tuan, m, grid, opt);
}

MassiveModel rescale(const MassiveModel& model, double a) {
  if (!(a > 0.0)) throw DomainError("rescale: a must be > 0");
  MassiveModel r = model;
  r.m = a * model.m;
  r.lambda = a * model.lambda;
  r.scale = model.scale * a;
  r.grid = make_grid(model.grid.half_width / a, model.grid.N);
  const double sa = std::sqrt(a);
  for (auto* fn : {&r.g, &r.h, &r.f, &r.u, &r.V}) fn->grid = r.grid;
  for (auto& v : r.V.values) v *= a;
  for (auto& v : r.u.values) v *= sa;
  for (auto& v : r.imV) v *= a;
  r.imag_diagnostic *= a;
  r.seam_diagnostic *= a;
  r.sup_V *= a;
  const double thr = model.family == MassiveFamily::neumann_wigner ? kNWCertifiedMass : kMTCertifiedMass;
  r.mass_certified = model.family == MassiveFamily::neumann_wigner ? r.m >= thr : r.m > thr;
  r.certified = r.mass_certified && model.f_bound_margin >= -1e-7;
  return r;
}

bool off_singular(const MassiveModel& model, std::size_t j) {
  const long double xo = model.grid.x_ext(j) * static_cast<long double>(model.scale);
  return std::abs(std::sin(xo)) >= static_cast<long double>(model.eps_sin);
}

RadialLift radial_lift(const MassiveModel& model) {
  const GridSpec& g = model.grid;
  const double c = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  RadialLift R;
  const auto du = spectral_derivative(model.u, 1);
  R.v0 = du.values[g.N / 2].real() * c;
  const double dx = g.dx();
  for (std::size_t j = g.N / 2 + 1; j < g.N; ++j) {
    const double r = g.x(j);
    const double u = model.u.values[j].real();
    R.r.push_back(r);
    R.v.push_back(u * c / r);
    R.W.push_back(model.V.values[j].real());
    R.norm3d += 4.0 * std::numbers::pi * r * r * R.v.back() * R.v.back() * dx;
    R.norm1d += u * u * dx;
  }
  return R;
}

}  // namespace rnw
