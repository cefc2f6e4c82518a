#include "rnw/massless.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rnw/errors.hpp"
#include "rnw/specfun.hpp"

namespace rnw {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

// -P (1+x^2)^nu 2F1(2, 1/2+nu; 3/2; -x^2), P = 4 Gamma(nu+1/2) / (sqrt(pi) Gamma(nu))
double V_tilde_general(double nu, double x) {
  const double P = 4.0 * gamma(nu + 0.5) / (kSqrtPi * gamma(nu));
  const double x2 = x * x;
  return -P * std::pow(1.0 + x2, nu) * hyp2f1(2.0, 0.5 + nu, 1.5, -x2);
}

double guard_rel_l2(const GridSpec& g, const std::vector<cplx>& r, const std::vector<cplx>& u) {
  const double guard = 0.5 * g.L();
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < g.N; ++j) {
    if (std::abs(g.x(j)) > guard) continue;
    num += std::norm(r[j]);
    den += std::norm(u[j]);
  }
  return std::sqrt(num / den);
}

double residual_impl(const MasslessFamily& fam, const GridSpec& g, const ResidualOptions& opt) {
  const auto u = sample_eig(fam, g);
  std::vector<cplx> pu(g.N);
  std::vector<double> V(g.N);
  const bool odd = fam.parity == Parity::odd;
  if (opt.mode == ResidualMode::analytic) {
    if (!near(fam.nu, 1.0))
      throw UnsupportedParameters("analytic residual exists for nu = 1 only");
    // V from the general 2F1 route so the identity is a real cross-check
    for (std::size_t j = 0; j < g.N; ++j) {
      const double x = g.x(j), q = 1.0 + x * x;
      pu[j] = odd ? 2.0 * x / (q * q) : (1.0 - x * x) / (q * q);
      V[j] = odd ? V_tilde_general(1.0, x) : V_nu(1.0, x);
    }
  } else {
    MultiplierOptions mo;
    mo.boundary = opt.boundary;
    pu = apply_multiplier(u, make_symbol(SymbolName::abs_k), mo).values;
    V = sample_V(fam, g).real_part();
  }
  std::vector<cplx> r(g.N);
  for (std::size_t j = 0; j < g.N; ++j) r[j] = pu[j] + V[j] * u.values[j];
  return guard_rel_l2(g, r, u.values);
}

}  // namespace

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
std::string to_string(Classification c) {
  return c == Classification::eigenvalue ? "eigenvalue" : "resonance";
}

double u_nu(double nu, double x) { return std::pow(1.0 + x * x, -nu); }
double v_nu(double nu, double x) { return x * std::pow(1.0 + x * x, -nu); }

double V_nu(double nu, double x) {
  if (!(nu > 0.0)) throw DomainError("V_nu needs nu > 0");
  const double x2 = x * x, ax = std::abs(x);
  if (near(nu, 0.5)) {
    return -(2.0 / kPi) * (1.0 / std::sqrt(1.0 + x2) - ax * std::asinh(ax) / (1.0 + x2));
  }
  const double C = 2.0 * gamma(0.5 + nu) / (kSqrtPi * gamma(nu));
  return -C * std::pow(1.0 + x2, nu) * hyp2f1(1.0, 0.5 + nu, 0.5, -x2);
}

double V_tilde_nu(double nu, double x) {
  if (!(nu > 0.5 && nu < 2.0)) throw DomainError("V_tilde_nu needs 1/2 < nu < 2");
  const double x2 = x * x;
  if (near(nu, 1.0)) return -2.0 / (1.0 + x2);
  if (near(nu, 1.5)) {
    const double sx = x == 0.0 ? 1.0 : std::asinh(x) / x;
    return (2.0 / kPi) * (-3.0 / std::sqrt(1.0 + x2) - (1.0 - 2.0 * x2) * sx / (1.0 + x2));
  }
  return V_tilde_general(nu, x);
}

double u_hat_nu(double nu, double k) {
  if (!(nu > 0.0)) throw DomainError("u_hat_nu needs nu > 0");
  const double ak = std::abs(k);
  if (ak == 0.0) {
    if (nu <= 0.5) throw DomainError("u_hat_nu is singular at k = 0 for nu <= 1/2");
    return gamma(nu - 0.5) / (std::sqrt(2.0) * gamma(nu));
  }
  return std::pow(2.0, 1.0 - nu) / gamma(nu) * std::pow(ak, nu - 0.5) * bessel_k(nu - 0.5, ak);
}

double plateau_constant(double nu) {
  if (!(nu > 0.0 && nu < 0.5)) throw DomainError("plateau constant exists for 0 < nu < 1/2");
  const double C = 2.0 * gamma(0.5 + nu) / (kSqrtPi * gamma(nu));
  return -C * kSqrtPi * gamma(0.5 - nu) / gamma(-nu);
}

MasslessFamily make_massless(Parity parity, double nu) {
  MasslessFamily f;
  f.parity = parity;
  f.nu = nu;
  std::ostringstream os;
  if (parity == Parity::even) {
    if (!(nu > 0.0)) throw DomainError("even family needs nu > 0");
    f.classification = nu > 0.25 ? Classification::eigenvalue : Classification::resonance;
    if (nu < 0.5) {
      f.decay_exponent = -1.0;
      f.decay_class = "O(|x|^-1)";
    } else if (near(nu, 0.5)) {
      f.log_corrected = true;
      f.decay_class = "O(log|x|/|x|)";
    } else if (nu < 1.0) {
      f.decay_exponent = -(2.0 - 2.0 * nu);
      os << "O(|x|^-" << 2.0 - 2.0 * nu << ")";
      f.decay_class = os.str();
    } else {
      f.decay_class = "non-decaying";
    }
  } else {
    if (!(nu > 0.5 && nu < 2.0)) throw DomainError("odd family needs 1/2 < nu < 2");
    f.classification = nu > 0.75 ? Classification::eigenvalue : Classification::resonance;
    if (near(nu, 1.0)) {
      f.decay_exponent = -2.0;
      f.decay_class = "O(|x|^-2)";
    } else if (near(nu, 1.5)) {
      f.log_corrected = true;
      f.decay_class = "O(log|x|/|x|)";
    } else if (nu < 1.5) {
      f.decay_exponent = -1.0;
      f.decay_class = "O(|x|^-1)";
    } else {
      f.decay_exponent = -(4.0 - 2.0 * nu);
      os << "O(|x|^-" << 4.0 - 2.0 * nu << ")";
      f.decay_class = os.str();
    }
  }
  return f;
}

double MasslessFamily::eig(double x) const {
  return parity == Parity::even ? u_nu(nu, x) : v_nu(nu, x);
}

double MasslessFamily::V(double x) const {
  return parity == Parity::even ? V_nu(nu, x) : V_tilde_nu(nu, x);
}

GridSpec default_massless_grid() { return make_grid(1024.0L, std::size_t{1} << 20); }

SampledFunction sample_eig(const MasslessFamily& fam, const GridSpec& grid) {
  return sample([&](double x) { return fam.eig(x); }, grid);
}

SampledFunction sample_V(const MasslessFamily& fam, const GridSpec& grid) {
  // surface parameter errors here rather than inside the parallel loop
  (void)fam.V(0.0);
  (void)fam.V(grid.L());
  std::vector<cplx> v(grid.N);
  const long long N = static_cast<long long>(grid.N);
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < N; ++j) v[j] = fam.V(grid.x(static_cast<std::size_t>(j)));
  return {grid, std::move(v)};
}

double residual_even(double nu, const GridSpec& grid, const ResidualOptions& opt) {
  return residual_impl(make_massless(Parity::even, nu), grid, opt);
}

double residual_odd(double nu, const GridSpec& grid, const ResidualOptions& opt) {
  return residual_impl(make_massless(Parity::odd, nu), grid, opt);
}

double plateau_estimate(double nu, double x_min, double x_max, int samples) {
  if (!(x_max > x_min && x_min > 0.0) || samples < 3)
    throw DomainError("plateau_estimate: bad window");
  const double p = 2.0 * nu - 1.0;
  double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
  for (int i = 0; i < samples; ++i) {
    const double x = x_min + (x_max - x_min) * i / (samples - 1);
    const double y = x * V_nu(nu, x), b = std::pow(x, p);
    s11 += 1.0;
    s12 += b;
    s22 += b * b;
    r1 += y;
    r2 += b * y;
  }
  const double det = s11 * s22 - s12 * s12;
  return (r1 * s22 - r2 * s12) / det;
}

SignStructure sign_structure(const MasslessFamily& fam, double x_max, int samples) {
  SignStructure s;
  double prev = fam.V(0.0);
  for (int i = 1; i <= samples; ++i) {
    const double x = x_max * i / samples;
    const double v = fam.V(x);
    if ((v > 0.0) != (prev > 0.0)) {
      ++s.zero_count;
      s.last_zero = x;
    }
    prev = v;
  }
  s.positive_tail = prev > 0.0;
  return s;
}

L2Growth l2_window_growth(double nu, double x0, int doublings) {
  if (!(x0 > 1.0) || doublings < 2) throw DomainError("l2_window_growth: need x0 > 1, doublings >= 2");
  std::vector<double> t, w;
  gauss_legendre01(64, t, w);
  const double a = 2.0 * nu;
  auto seg_x = [&](double lo, double hi) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double x = lo + (hi - lo) * t[i];
      s += w[i] * std::pow(1.0 + x * x, -a);
    }
    return s * (hi - lo);
  };
  // x = e^s on [lo, hi], split into unit panels in s
  auto seg_log = [&](double lo, double hi) {
    const double sl = std::log(lo), sh = std::log(hi);
    const int panels = std::max(1, static_cast<int>(std::ceil(sh - sl)));
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double a0 = sl + (sh - sl) * p / panels, a1 = sl + (sh - sl) * (p + 1) / panels;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const double ss = a0 + (a1 - a0) * t[i], x = std::exp(ss);
        s += w[i] * (a1 - a0) * x * std::pow(1.0 + x * x, -a);
      }
    }
    return s;
  };
  L2Growth g;
  double I = 2.0 * (seg_x(0.0, 1.0) + seg_log(1.0, x0));
  double X = x0;
  g.X.push_back(X);
  g.norm2.push_back(I);
  std::vector<double> inc;
  for (int d = 0; d < doublings; ++d) {
    inc.push_back(2.0 * seg_log(X, 2.0 * X));
    I += inc.back();
    X *= 2.0;
    g.X.push_back(X);
    g.norm2.push_back(I);
  }
  g.increment_ratio = inc[inc.size() - 1] / inc[inc.size() - 2];
  g.converges = g.increment_ratio < 0.995;
  return g;
}

double derivative_relation_error(double nu, const GridSpec& grid) {
  if (!(nu > 1.0 && nu < 2.0)) throw DomainError("derivative relation checked for 1 < nu < 2");
  const auto u = sample([nu](double x) { return u_nu(nu - 1.0, x); }, grid);
  MultiplierOptions mo;
  mo.boundary = Boundary::free;
  const auto du = spectral_derivative(u, 1, mo);
  const double guard = 0.5 * grid.L(), c = 1.0 / (2.0 - 2.0 * nu);
  double e = 0.0;
  for (std::size_t j = 0; j < grid.N; ++j) {
    const double x = grid.x(j);
    if (std::abs(x) > guard) continue;
    e = std::max(e, std::abs(v_nu(nu, x) - c * du.values[j].real()));
  }
  return e;
}

std::vector<double> abs_p_toeplitz(std::size_t N, double dx) {
  std::vector<double> c(N, 0.0);
  c[0] = kPi / (2.0 * dx);
  for (std::size_t n = 1; n < N; n += 2) c[n] = -2.0 / (kPi * dx * double(n) * double(n));
  std::vector<double> A(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) A[i * N + j] = c[i > j ? i - j : j - i];
  return A;
}

CouplingScan coupling_scan(double nu, const std::vector<double>& couplings, const GridSpec& grid) {
  if (grid.N > 4096) throw InvalidSize("coupling_scan: N must be <= 2^12");
  for (double l : couplings)
    if (!(l >= 0.0)) throw DomainError("coupling_scan: couplings must be >= 0");
  const std::size_t N = grid.N;
  const auto T = abs_p_toeplitz(N, grid.dx());
  std::vector<double> V(N);
  for (std::size_t j = 0; j < N; ++j) V[j] = V_nu(nu, grid.x(j));

  auto lowest = [&](double lam, CouplingPoint& pt) {
    std::vector<double> A = T;
    for (std::size_t j = 0; j < N; ++j) A[j * N + j] += lam * V[j];
    lapack_int found = 0;
    std::vector<double> w(N);
    std::vector<lapack_int> isuppz(2);
    const lapack_int info =
        LAPACKE_dsyevr(LAPACK_ROW_MAJOR, 'N', 'I', 'U', static_cast<lapack_int>(N), A.data(),
                       static_cast<lapack_int>(N), 0.0, 0.0, 1, 1, 0.0, &found, w.data(), nullptr,
                       1, isuppz.data());
    pt.lambda = lam;
    if (info != 0 || found != 1) {
      pt.converged = false;
      pt.e0 = std::nan("");
      pt.error = "dsyevr info " + std::to_string(info);
    } else {
      pt.e0 = w[0];
    }
  };

  CouplingScan s;
  s.nu = nu;
  s.grid = grid;
  CouplingPoint free_pt;
  lowest(0.0, free_pt);
  s.delta_grid = std::abs(free_pt.e0);
  // couplings are independent; the eigensolver itself is BLAS-threaded
  for (double l : couplings) {
    if (l == 0.0) {
      s.points.push_back(free_pt);
      continue;
    }
    CouplingPoint p;
    lowest(l, p);
    s.points.push_back(p);
  }
  return s;
}

}  // namespace rnw
