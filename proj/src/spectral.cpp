#include "rnw/spectral.hpp"

#include <algorithm>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "rnw/fft.hpp"

namespace rnw {

std::string to_string(SymbolName s) {
  switch (s) {
    case SymbolName::omega0: return "omega0";
    case SymbolName::omega: return "omega";
    case SymbolName::omega_plus: return "omega_plus";
    case SymbolName::omega_minus: return "omega_minus";
    case SymbolName::T: return "T";
    case SymbolName::abs_k: return "abs_k";
    case SymbolName::inv_omega0: return "inv_omega0";
  }
  return "?";
}

MultiplierSymbol make_symbol(SymbolName name, double m) {
  if (!(m >= 0.0)) throw std::invalid_argument("symbol mass must be >= 0");
  if (name == SymbolName::inv_omega0 && m == 0.0)
    throw std::invalid_argument("inv_omega0 is singular at k = 0 when m = 0");
  return {name, m};
}

template <class R>
std::vector<R> frequencies(const GridSpec& grid) {
  const std::size_t N = grid.N;
  std::vector<R> k(N);
  const R base = static_cast<R>(std::numbers::pi_v<long double> / grid.half_width);
  for (std::size_t j = 0; j < N; ++j) {
    const long long s = (j < N / 2) ? static_cast<long long>(j)
                                    : static_cast<long long>(j) - static_cast<long long>(N);
    k[j] = base * static_cast<R>(s);
  }
  return k;
}
template std::vector<double> frequencies<double>(const GridSpec&);
template std::vector<long double> frequencies<long double>(const GridSpec&);

namespace {

// Tail exponent from the last samples of one end; 0 means "no decay, pad zero".
double tail_exponent(const std::vector<cplx>& v, const GridSpec& g, bool right) {
  const std::size_t N = g.N;
  const std::size_t off = std::max<std::size_t>(N / 40, 1);
  const std::size_t a = right ? N - 1 : 0;
  const std::size_t b = right ? N - 1 - off : off;
  const double fa = std::abs(v[a]), fb = std::abs(v[b]);
  const double xa = std::abs(g.x(a)), xb = std::abs(g.x(b));
  if (fa <= 1e-300 || fb <= 1e-300 || xa == xb) return 0.0;
  const double p = std::log(fa / fb) / std::log(xa / xb);
  return std::isfinite(p) && p < 0.0 ? p : 0.0;
}

std::vector<cplx> extend(const SampledFunction& sf, int pad) {
  const GridSpec& g = sf.grid;
  const std::size_t N = g.N, M = N * static_cast<std::size_t>(pad);
  std::vector<cplx> out(M, cplx(0.0));
  std::copy(sf.values.begin(), sf.values.end(), out.begin());
  const double pr = tail_exponent(sf.values, g, true);
  const double pl = tail_exponent(sf.values, g, false);
  const double dx = g.dx(), L = g.L();
  const cplx fr = sf.values[N - 1], fl = sf.values[0];
  const double xr = g.x(N - 1), xl = g.x(0);
  const std::size_t ext = M - N;
  for (std::size_t q = 0; q < ext; ++q) {
    if (q < ext / 2) {
      // right continuation, x = L + q dx
      const double x = L + static_cast<double>(q) * dx;
      out[N + q] = pr < 0.0 ? fr * std::pow(x / xr, pr) : cplx(0.0);
    } else {
      // left continuation, x = -L - (ext - q) dx
      const double x = -L - static_cast<double>(ext - q) * dx;
      out[N + q] = pl < 0.0 ? fl * std::pow(x / xl, pl) : cplx(0.0);
    }
  }
  return out;
}

SampledFunction apply_symbol_values(const SampledFunction& sf,
                                    const std::function<std::complex<double>(double)>& sym,
                                    const MultiplierOptions& opt) {
  const GridSpec& g = sf.grid;
  if (opt.boundary == Boundary::periodic || opt.pad <= 1) {
    std::vector<cplx> a = sf.values;
    fft_forward(a);
    const auto k = frequencies<double>(g);
    std::vector<cplx> s(g.N);
    for (std::size_t j = 0; j < g.N; ++j) s[j] = sym(k[j]);
    multiply_pointwise(a, s, opt.exec);
    fft_inverse(a);
    return {g, std::move(a)};
  }
  std::vector<cplx> a = extend(sf, opt.pad);
  GridSpec big = g;
  big.N = a.size();
  big.half_width = g.half_width * opt.pad;
  fft_forward(a);
  const auto k = frequencies<double>(big);
  std::vector<cplx> s(big.N);
  for (std::size_t j = 0; j < big.N; ++j) s[j] = sym(k[j]);
  multiply_pointwise(a, s, opt.exec);
  fft_inverse(a);
  a.resize(g.N);
  return {g, std::move(a)};
}

}  // namespace

SampledFunction apply_multiplier(const SampledFunction& sf, const MultiplierSymbol& sym,
                                 const MultiplierOptions& opt) {
  return apply_symbol_values(sf, [&](double k) { return std::complex<double>(sym(k)); }, opt);
}

SampledFunction apply_symbol(const SampledFunction& sf,
                             const std::function<std::complex<double>(double)>& sym,
                             const MultiplierOptions& opt) {
  return apply_symbol_values(sf, sym, opt);
}

SampledFunction spectral_derivative(const SampledFunction& sf, int order,
                                    const MultiplierOptions& opt) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  return apply_symbol_values(
      sf, [order](double k) { return std::pow(std::complex<double>(0.0, k), order); }, opt);
}

double modulation_shift_check(const SampledFunction& sf, double m) {
  const GridSpec& g = sf.grid;
  const auto direct = apply_multiplier(sf, make_symbol(SymbolName::omega_plus, m));
  std::vector<cplx> mod(g.N);
  for (std::size_t j = 0; j < g.N; ++j) mod[j] = std::polar(1.0, g.x(j)) * sf.values[j];
  const auto shifted = apply_multiplier({g, std::move(mod)}, make_symbol(SymbolName::omega0, m));
  double d = 0.0;
  for (std::size_t j = 0; j < g.N; ++j)
    d = std::max(d, std::abs(direct.values[j] - std::polar(1.0, -g.x(j)) * shifted.values[j]));
  return d;
}

SampledFunction inv_omega0_kernel_convolve(const SampledFunction& sf, double m,
                                           const AccuracyPolicy& policy, Exec exec) {
  if (!(m > 0.0)) throw DomainError("kernel convolution needs m > 0");
  const GridSpec& g = sf.grid;
  if (!kernel_resolved(m, g.dx()))
    std::cerr << "warning: K0 kernel unresolved on this grid (dx*m = " << g.dx() * m << ")\n";
  const ConvWeights w = k0_weights(m, g.dx(), policy);
  std::vector<cplx> out(g.N);
  if (exec == Exec::parallel)
    convolve_omp(sf.values.data(), out.data(), g.N, w);
  else
    convolve_serial(sf.values.data(), out.data(), g.N, w);
  return {g, std::move(out)};
}

double omega0_kernel(double x, double m, const AccuracyPolicy& policy) {
  policy.validate();
  if (x == 0.0) throw DomainError("omega0_kernel: x = 0 carries the distributional part");
  if (!(m > 0.0)) throw DomainError("omega0_kernel: m must be > 0");
  const double z = m * std::abs(x);
  // integrand exp(-z cosh t) sinh^2 t; beyond z (cosh t - 1) = 60 it is negligible
  const double tmax = std::acosh(1.0 + 60.0 / z) + 1.0;
  const int n = policy.quadrature_points;
  const double h = tmax / n;
  // trapezoid on [0, tmax]; the integrand is even in t and vanishes at 0, so
  // the rule is spectrally accurate
  double s = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double t = i * h;
    const double sh = std::sinh(t);
    s += std::exp(-z * (std::cosh(t) - 1.0)) * sh * sh;
  }
  s *= h * std::exp(-z);
  return -std::sqrt(2.0 / std::numbers::pi) * m * m * s;
}

template <class R>
SpectralWork<R>::SpectralWork(const GridSpec& g) : grid(g), x(g.N), k(frequencies<R>(g)) {
  for (std::size_t j = 0; j < g.N; ++j) x[j] = static_cast<R>(g.x_ext(j));
}

template <class R>
std::vector<std::complex<R>> SpectralWork<R>::forward(const std::vector<R>& f) const {
  std::vector<std::complex<R>> a(f.begin(), f.end());
  fft_forward(a);
  return a;
}

template <class R>
std::vector<std::complex<R>> SpectralWork<R>::forward(const std::vector<std::complex<R>>& f) const {
  std::vector<std::complex<R>> a = f;
  fft_forward(a);
  return a;
}

template <class R>
std::vector<std::complex<R>> SpectralWork<R>::apply(const std::vector<std::complex<R>>& spec,
                                                    const std::function<R(R)>& sym) const {
  std::vector<R> s(grid.N);
  for (std::size_t j = 0; j < grid.N; ++j) s[j] = sym(k[j]);
  std::vector<std::complex<R>> a = spec;
  multiply_pointwise(a, s, Exec::parallel);
  fft_inverse(a);
  return a;
}

template struct SpectralWork<double>;
template struct SpectralWork<long double>;

}  // namespace rnw
