#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rnw/grid.hpp"
#include "rnw/spectral.hpp"

using namespace rnw;
using std::numbers::pi;

namespace {

double max_diff(const SampledFunction& a, const std::function<cplx(double)>& ref) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - ref(a.grid.x(j))));
  return d;
}

}  // namespace

TEST_CASE("grid layout") {
  const auto g = make_grid(8.0L, 64);
  CHECK(g.x(32) == 0.0);
  CHECK(g.mirror(10) == 54);
  CHECK(g.mirror(0) == 0);
  CHECK(g.index_of(1.0) == 36);
  CHECK_THROWS(make_grid(8.0L, 100));
}

TEST_CASE("symbols on plane waves") {
  const auto g = make_grid(16.0L * pi, 2048);
  const double k0 = 2 * pi * 37 / (2 * g.L());
  const auto wave = sample_complex([&](double x) { return std::polar(1.0, k0 * x); }, g);
  for (auto name : {SymbolName::omega0, SymbolName::omega, SymbolName::omega_plus,
                    SymbolName::omega_minus, SymbolName::T, SymbolName::abs_k,
                    SymbolName::inv_omega0}) {
    const auto sym = make_symbol(name, 0.7);
    const auto out = apply_multiplier(wave, sym);
    CHECK(max_diff(out, [&](double x) { return sym(k0) * std::polar(1.0, k0 * x); }) < 1e-12);
  }
}

TEST_CASE("symbol closed forms") {
  const auto T0 = make_symbol(SymbolName::T, 0.0);
  CHECK(T0(0.5) == doctest::Approx(1.0));
  CHECK(T0(3.0) == doctest::Approx(0.0));
  // omega = omega0 - m without cancellation
  const auto w = make_symbol(SymbolName::omega, 1e6);
  CHECK(w(1e-3) == doctest::Approx(1e-6 / (std::sqrt(1e-6 + 1e12) + 1e6)).epsilon(1e-14));
  const auto s = make_symbol(SymbolName::abs_k, 1e8);
  CHECK(s.lambda() == doctest::Approx(5e-9).epsilon(1e-12));
  CHECK_THROWS(make_symbol(SymbolName::inv_omega0, 0.0));
  CHECK_THROWS(make_symbol(SymbolName::omega0, -1.0));
}

TEST_CASE("|p| on the Poisson kernel (free boundary)") {
  // |p| (1+x^2)^-1 = (1-x^2)/(1+x^2)^2
  const auto g = make_grid(64.0L, 1 << 14);
  const auto f = sample([](double x) { return 1 / (1 + x * x); }, g);
  MultiplierOptions opt;
  opt.boundary = Boundary::free;
  const auto out = apply_multiplier(f, make_symbol(SymbolName::abs_k), opt);
  CHECK(max_diff(out, [](double x) { return (1 - x * x) / ((1 + x * x) * (1 + x * x)); }) < 1e-4);
  // the periodic transform sees the images and does worse
  const auto per = apply_multiplier(f, make_symbol(SymbolName::abs_k));
  CHECK(max_diff(per, [](double x) { return (1 - x * x) / ((1 + x * x) * (1 + x * x)); }) >
        max_diff(out, [](double x) { return (1 - x * x) / ((1 + x * x) * (1 + x * x)); }));
}

TEST_CASE("|p| on the odd Poisson kernel") {
  // |p| x/(1+x^2) = 2x/(1+x^2)^2
  const auto g = make_grid(64.0L, 1 << 14);
  const auto f = sample([](double x) { return x / (1 + x * x); }, g);
  MultiplierOptions opt;
  opt.boundary = Boundary::free;
  const auto out = apply_multiplier(f, make_symbol(SymbolName::abs_k), opt);
  CHECK(max_diff(out, [](double x) { return 2 * x / ((1 + x * x) * (1 + x * x)); }) < 1e-3);
}

TEST_CASE("spectral derivative") {
  const auto g = make_grid(8.0L * pi, 512);
  const auto f = sample([](double x) { return std::sin(3 * x); }, g);
  CHECK(max_diff(spectral_derivative(f, 1), [](double x) { return 3 * std::cos(3 * x); }) < 1e-11);
  CHECK(max_diff(spectral_derivative(f, 2), [](double x) { return -9 * std::sin(3 * x); }) < 1e-10);
}

TEST_CASE("modulation identity") {
  const auto g = make_grid(16.0L * pi, 4096);
  const auto f = sample([](double x) { return std::exp(-x * x / 4); }, g);
  CHECK(modulation_shift_check(f, 0.0) < 1e-12);
  CHECK(modulation_shift_check(f, 2.5) < 1e-12);
}

TEST_CASE("K0 product integration agrees with the spectral inverse") {
  for (double m : {0.5, 2.0}) {
    const auto g = make_grid(40.0L, 1 << 13);
    const auto f = sample([](double x) { return std::exp(-x * x) * (1 + x); }, g);
    const auto spec = apply_multiplier(f, make_symbol(SymbolName::inv_omega0, m));
    const auto kern = inv_omega0_kernel_convolve(f, m);
    double d = 0.0;
    for (std::size_t j = 0; j < g.N; ++j) d = std::max(d, std::abs(spec[j] - kern[j]));
    CHECK(d < 1e-8);
    const auto ser = inv_omega0_kernel_convolve(f, m, {}, Exec::serial);
    CHECK(ser.values == kern.values);
  }
}

TEST_CASE("omega0 kernel against K1") {
  for (double m : {0.3, 1.0, 4.0})
    for (double x : {0.05, 0.7, 3.0, -2.0}) {
      const double ref = -std::sqrt(2 / pi) * m * std::cyl_bessel_k(1.0, m * std::abs(x)) / std::abs(x);
      CHECK(omega0_kernel(x, m) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("extended-precision work arrays match the double path") {
  const auto g = make_grid(16.0L * pi, 1024);
  SpectralWork<long double> w(g);
  std::vector<long double> f(g.N);
  for (std::size_t j = 0; j < g.N; ++j) f[j] = std::exp(-w.x[j] * w.x[j] / 2);
  const auto sym = make_symbol(SymbolName::omega_plus, 0.4);
  const auto out = w.apply(w.forward(f), [&](long double k) { return sym(k); });
  const auto ref = apply_multiplier(sample([](double x) { return std::exp(-x * x / 2); }, g), sym);
  double d = 0.0;
  for (std::size_t j = 0; j < g.N; ++j)
    d = std::max(d, std::abs(cplx(static_cast<double>(out[j].real()), static_cast<double>(out[j].imag())) - ref[j]));
  CHECK(d < 1e-13);
}
