#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "rnw/grid.hpp"
#include "rnw/kernels.hpp"
#include "rnw/specfun.hpp"

namespace rnw {

enum class SymbolName { omega0, omega, omega_plus, omega_minus, T, abs_k, inv_omega0 };

std::string to_string(SymbolName s);

struct MultiplierSymbol {
  SymbolName name = SymbolName::abs_k;
  double m = 0.0;

  // sqrt(1+m^2) and sqrt(1+m^2) - m (the latter in cancellation-free form)
  double lambda0() const { return std::sqrt(1.0 + m * m); }
  double lambda() const { return 1.0 / (std::sqrt(1.0 + m * m) + m); }

  template <class R>
  R operator()(R k) const {
    const R mm = static_cast<R>(m);
    using std::abs;
    using std::sqrt;
    switch (name) {
      case SymbolName::omega0: return sqrt(k * k + mm * mm);
      case SymbolName::omega: return k * k / (sqrt(k * k + mm * mm) + mm);
      case SymbolName::omega_plus: return sqrt((k + 1) * (k + 1) + mm * mm);
      case SymbolName::omega_minus: return sqrt((k - 1) * (k - 1) + mm * mm);
      case SymbolName::T: {
        // evaluate in extended precision: the second difference cancels
        const long double kl = k, ml = m;
        const long double t = std::sqrt((kl + 1) * (kl + 1) + ml * ml) +
                              std::sqrt((kl - 1) * (kl - 1) + ml * ml) -
                              2.0L * std::sqrt(kl * kl + ml * ml);
        return static_cast<R>(t);
      }
      case SymbolName::abs_k: return abs(k);
      case SymbolName::inv_omega0: return 1 / sqrt(k * k + mm * mm);
    }
    return R(0);
  }
};

// Throws std::invalid_argument for m < 0 or inv_omega0 with m = 0.
MultiplierSymbol make_symbol(SymbolName name, double m = 0.0);

// Periodic: plain DFT on the grid. Free: the samples are extended to a grid
// pad times longer by continuing each end with the power law fitted to its
// last 2.5% of samples (zero if the data do not decay), so that slowly
// decaying inputs see neither their periodic images nor a truncation jump.
enum class Boundary { periodic, free };

struct MultiplierOptions {
  Boundary boundary = Boundary::periodic;
  int pad = 4;
  Exec exec = Exec::parallel;
};

// Discrete angular frequencies k_j = 2 pi j / (2L) in FFT order.
template <class R>
std::vector<R> frequencies(const GridSpec& grid);

SampledFunction apply_multiplier(const SampledFunction& sf, const MultiplierSymbol& sym,
                                 const MultiplierOptions& opt = {});

// Any symbol k -> complex.
SampledFunction apply_symbol(const SampledFunction& sf,
                             const std::function<std::complex<double>(double)>& sym,
                             const MultiplierOptions& opt = {});

// d^order/dx^order via (ik)^order.
SampledFunction spectral_derivative(const SampledFunction& sf, int order,
                                    const MultiplierOptions& opt = {});

// sup | omega_+(p) sf - e^{-ix} omega_0(p) (e^{ix} sf) |
double modulation_shift_check(const SampledFunction& sf, double m);

// (p^2+m^2)^{-1/2} sf by real-space product integration against K0(m|x|)/pi.
SampledFunction inv_omega0_kernel_convolve(const SampledFunction& sf, double m,
                                           const AccuracyPolicy& policy = {},
                                           Exec exec = Exec::parallel);

// Real-space kernel of (p^2+m^2)^{1/2} away from the origin:
// -sqrt(2/pi) m^2 int_0^inf exp(-m|x| cosh t) sinh^2 t dt.
double omega0_kernel(double x, double m, const AccuracyPolicy& policy = {});

// Extended-precision work arrays on one grid: samples, frequencies and the
// forward/inverse transforms. Used where sample values are divided by
// near-zero denominators and double round-off would dominate.
template <class R>
struct SpectralWork {
  GridSpec grid;
  std::vector<R> x;
  std::vector<R> k;

  explicit SpectralWork(const GridSpec& g);
  std::vector<std::complex<R>> forward(const std::vector<R>& f) const;
  std::vector<std::complex<R>> forward(const std::vector<std::complex<R>>& f) const;
  // inverse transform of spec * sym(k)
  std::vector<std::complex<R>> apply(const std::vector<std::complex<R>>& spec,
                                     const std::function<R(R)>& sym) const;
};

}  // namespace rnw
