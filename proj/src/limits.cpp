#include "rnw/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rnw/errors.hpp"
#include "rnw/spectral.hpp"

namespace rnw {

namespace {

using R = long double;
constexpr double kPi = std::numbers::pi;

bool off_test_set(double x) {
  const double r = std::remainder(x, kPi);
  return std::abs(r) > 0.2;
}

// 6th-order central differences
double fd1(const std::function<double(double)>& f, double r, double h) {
  return (-f(r - 3 * h) + 9 * f(r - 2 * h) - 45 * f(r - h) + 45 * f(r + h) - 9 * f(r + 2 * h) +
          f(r + 3 * h)) /
         (60 * h);
}
double fd2(const std::function<double(double)>& f, double r, double h) {
  return (2 * f(r - 3 * h) - 27 * f(r - 2 * h) + 270 * f(r - h) - 490 * f(r) + 270 * f(r + h) -
          27 * f(r + 2 * h) + 2 * f(r + 3 * h)) /
         (180 * h * h);
}

double radial_identity(const std::vector<double>& radii, double (*u)(double), double (*V)(double)) {
  const double h = 1e-4;
  double res = 0.0;
  for (double r : radii) {
    if (!(r > 0.0)) throw DomainError("radius must be > 0");
    const double q = std::remainder(r, kPi);
    if (std::abs(q) < 1e-3) throw DomainError("radius too close to pi N");
    const double lap = fd2(u, r, h) + 2.0 / r * fd1(u, r, h);
    res = std::max(res, std::abs(-lap + V(r) * u(r) - u(r)));
  }
  return res;
}

void check_cert(double m, double c, bool allow) {
  if (c * m <= kNWCertifiedMass && !allow) {
    std::ostringstream os;
    os << "c m = " << c * m << " <= 146: eigen-relation not certified";
    throw CertificationError(os.str());
  }
}

}  // namespace

double V_inf(double m, double x, LimitSign sign) {
  const double h = eval_h(x), h1 = eval_h1(x), h2 = eval_h2(x);
  // u''/u for u = h sin x
  const double upp = h2 / h + 2.0 * (h1 / h) / std::tan(x) - 1.0;
  return sign == LimitSign::plus ? (1.0 + upp) / (2.0 * m) : (1.0 - upp) / (2.0 * m);
}

GridSpec default_limit_grid() { return default_massive_grid(); }

std::vector<double> default_c_values(double m) {
  if (!(m > 0.0)) throw DomainError("mass must be > 0");
  const double base = std::ceil(kNWCertifiedMass / m);
  return {32 * base, 64 * base, 128 * base, 256 * base, 512 * base};
}

LimitModel build_limit_model(double m, double c, const GridSpec& grid, bool allow_uncertified) {
  if (!(m > 0.0 && c > 0.0)) throw DomainError("m and c must be > 0");
  check_cert(m, c, allow_uncertified);
  const std::size_t N = grid.N;
  SpectralWork<R> W(grid);
  std::vector<R> h(N), s(N);
  for (std::size_t j = 0; j < N; ++j) {
    const R x = W.x[j];
    const R g = 2 * x - std::sin(2 * x);
    h[j] = 1 / (1 + g * g);
    s[j] = std::sin(x);
  }
  const R M = static_cast<R>(m) * c, cc = c;
  // S_c - 1 in cancellation-free form
  auto sm1 = [M](R k) {
    const R wp = std::sqrt((k + 1) * (k + 1) + M * M), wm = std::sqrt((k - 1) * (k - 1) + M * M);
    return ((k + 1) * (k + 1) / (wp + M) + (k - 1) * (k - 1) / (wm + M)) / (2 * M);
  };
  const auto H = W.forward(h);
  auto dspec = H;
  for (std::size_t j = 0; j < N; ++j) dspec[j] *= sm1(W.k[j]);
  const auto d0 = W.apply(dspec, [](R) { return R(1); });

  LimitModel L;
  L.m = m;
  L.c = c;
  L.grid = grid;
  L.certified = c * m > kNWCertifiedMass;
  L.lambda_c = static_cast<double>(cc / (M + std::sqrt(1 + M * M)));

  // derivatives of d via i k and -k^2
  std::vector<std::complex<R>> s1(N), s2(N);
  for (std::size_t j = 0; j < N; ++j) {
    s1[j] = dspec[j] * std::complex<R>(0, W.k[j]);
    s2[j] = dspec[j] * (-W.k[j] * W.k[j]);
  }
  const auto dd1 = W.apply(s1, [](R) { return R(1); });
  const auto dd2 = W.apply(s2, [](R) { return R(1); });

  std::vector<R> u(N);
  std::vector<cplx> fv(N), uv(N), ui(N);
  L.d.resize(N);
  L.d1.resize(N);
  L.d2.resize(N);
  for (std::size_t j = 0; j < N; ++j) {
    const R f = h[j] + d0[j].real();
    u[j] = f * s[j];
    fv[j] = static_cast<double>(f);
    uv[j] = static_cast<double>(u[j]);
    ui[j] = static_cast<double>(h[j] * s[j]);
    L.d[j] = static_cast<double>(d0[j].real());
    L.d1[j] = static_cast<double>(dd1[j].real());
    L.d2[j] = static_cast<double>(dd2[j].real());
  }
  const auto wu = W.apply(W.forward(u), [M, cc](R k) { return cc * k * k / (std::sqrt(k * k + M * M) + M); });
  std::vector<cplx> Vv(N);
  const R lam = cc / (M + std::sqrt(1 + M * M));
  for (std::size_t j = 0; j < N; ++j) {
    // V_c is only meaningful off the zeros of sin; exact zeros get NaN
    Vv[j] = u[j] != 0 ? static_cast<double>(lam - wu[j].real() / u[j]) : std::nan("");
  }
  L.f_c = {grid, std::move(fv)};
  L.u_c = {grid, std::move(uv)};
  L.u_inf = {grid, std::move(ui)};
  L.V_c = {grid, std::move(Vv)};
  return L;
}

LimitScan limit_scan(double m, const std::vector<double>& c_values, const GridSpec& grid,
                     bool allow_uncertified) {
  for (double c : c_values) check_cert(m, c, allow_uncertified);
  LimitScan S;
  S.m = m;
  const double guard = 0.5 * grid.L();
  double plus_total = 0.0, minus_total = 0.0;
  for (double c : c_values) {
    const LimitModel L = build_limit_model(m, c, grid, true);
    LimitRow row;
    row.c = c;
    row.lambda_err = std::abs(L.lambda_c - 1.0 / (2.0 * m));
    for (std::size_t j = 0; j < grid.N; ++j) {
      const double x = grid.x(j);
      if (std::abs(x) > guard) continue;
      const double sx = std::sin(x), cx = std::cos(x);
      // product rule on (d sin)
      row.e0 = std::max(row.e0, std::abs(L.d[j] * sx));
      row.e1 = std::max(row.e1, std::abs(L.d1[j] * sx + L.d[j] * cx));
      row.e2 = std::max(row.e2, std::abs(L.d2[j] * sx + 2.0 * L.d1[j] * cx - L.d[j] * sx));
      if (off_test_set(x)) {
        const double v = L.V_c.values[j].real();
        row.V_err_plus = std::max(row.V_err_plus, std::abs(v - V_inf(m, x, LimitSign::plus)));
        row.V_err_minus = std::max(row.V_err_minus, std::abs(v - V_inf(m, x, LimitSign::minus)));
      }
    }
    plus_total += row.V_err_plus;
    minus_total += row.V_err_minus;
    S.rows.push_back(row);
  }
  S.matching_sign = plus_total <= minus_total ? LimitSign::plus : LimitSign::minus;
  for (auto& r : S.rows)
    r.V_err = S.matching_sign == LimitSign::plus ? r.V_err_plus : r.V_err_minus;
  if (S.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(S.rows.size());
    for (const auto& r : S.rows) {
      const double a = std::log(r.c), b = std::log(r.e0);
      sx += a;
      sy += b;
      sxx += a * a;
      sxy += a * b;
    }
    S.rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return S;
}

std::vector<double> khat_l1_norms(const GridSpec& grid, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  SpectralWork<R> W(grid);
  std::vector<R> h(grid.N);
  for (std::size_t j = 0; j < grid.N; ++j) {
    const R g = 2 * W.x[j] - std::sin(2 * W.x[j]);
    h[j] = 1 / (1 + g * g);
  }
  const auto H = W.forward(h);
  // DFT coefficient H_k = h^(k) sqrt(2 pi) / dx, and dk = pi / L
  const R dx = 2 * grid.half_width / grid.N, dk = std::numbers::pi_v<R> / grid.half_width;
  std::vector<double> out(n_max + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    R s = 0;
    for (std::size_t j = 0; j < grid.N; ++j) s += std::pow(std::abs(W.k[j]), n) * std::abs(H[j]);
    out[n] = static_cast<double>(s * dx * dk / (2 * std::numbers::pi_v<R>));
  }
  return out;
}

double u_NW(double r) {
  if (r == 0.0) return 1.0;
  const double g = eval_g(r);
  return std::sin(r) / (r * (1.0 + g * g));
}

double V_NW(double r) {
  const double g = eval_g(r), s = std::sin(r), c = std::cos(r), q = 1.0 + g * g;
  return -32.0 * s * (g * g * g * c - 3.0 * g * g * s * s * s + g * c + s * s * s) / (q * q);
}

double u_MT(double r) {
  if (r == 0.0) return 1.0;
  return std::sin(r) / (r * (1.0 + eval_g(r)));
}

double V_MT(double r) {
  const double q = 1.0 + eval_g(r);
  return -32.0 * std::sin(r) * ((r + 0.5) * std::cos(r) - std::sin(r)) / (q * q);
}

double classical_nw_identity(const std::vector<double>& radii) {
  return radial_identity(radii, &u_NW, &V_NW);
}

double classical_mt_identity(const std::vector<double>& radii) {
  return radial_identity(radii, &u_MT, &V_MT);
}

double nw_asymptote_envelope(double r) {
  double e = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = r + 2.0 * kPi * i / 400.0;
    e = std::max(e, std::abs(t * V_NW(t) + 8.0 * std::sin(2.0 * t)));
  }
  return e;
}

std::vector<Limit3DRow> limit_3d_check(double m, const std::vector<double>& c_values,
                                       const GridSpec& grid, bool allow_uncertified) {
  for (double c : c_values) check_cert(m, c, allow_uncertified);
  std::vector<Limit3DRow> out;
  const double guard = 0.5 * grid.L();
  const double s4pi = std::sqrt(4.0 * kPi);
  for (double c : c_values) {
    const LimitModel L = build_limit_model(m, c, grid, true);
    Limit3DRow row;
    row.c = c;
    const std::size_t j0 = grid.N / 2;
    // r -> 0: u_c(r)/r -> u_c'(0) = f_c(0)
    row.r0_err = std::abs(L.f_c.values[j0].real() - 1.0);
    for (std::size_t j = j0 + 1; j < grid.N; ++j) {
      const double r = grid.x(j);
      if (r > guard) break;
      const double v = L.u_c.values[j].real() / (s4pi * r);
      row.sup_err = std::max(row.sup_err, std::abs(s4pi * v - u_NW(r)));
      if (off_test_set(r)) {
        row.W_err = std::max(row.W_err, std::abs(L.V_c.values[j].real() - V_NW(r) / (2.0 * m)));
      }
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace rnw
