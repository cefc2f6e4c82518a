#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace rnw {

// Uniform grid x_j = -L + j*dx, dx = 2L/N, j = 0..N-1. N is a power of two,
// so x_{N/2} = 0 and the node mirrored through 0 is N - j (mod N).
// L is kept in extended precision so grids like L = 256*pi place the zeros
// of sin exactly where they belong.
struct GridSpec {
  long double half_width = 512.0L;
  std::size_t N = std::size_t{1} << 20;

  double L() const { return static_cast<double>(half_width); }
  double dx() const { return static_cast<double>(2.0L * half_width / N); }
  double x(std::size_t j) const { return static_cast<double>(x_ext(j)); }
  long double x_ext(std::size_t j) const {
    return -half_width + static_cast<long double>(j) * (2.0L * half_width / N);
  }
  std::size_t mirror(std::size_t j) const { return (N - j) % N; }
  std::size_t index_of(double x) const;  // nearest node
};

GridSpec make_grid(long double L, std::size_t N);

using cplx = std::complex<double>;

struct SampledFunction {
  GridSpec grid;
  std::vector<cplx> values;

  SampledFunction() = default;
  SampledFunction(const GridSpec& g, std::vector<cplx> v);

  std::size_t size() const { return values.size(); }
  cplx operator[](std::size_t j) const { return values[j]; }
  std::vector<double> real_part() const;
  double sup_abs() const;
  bool is_real(double tol) const;
  bool is_even(double tol) const;
  bool is_odd(double tol) const;
};

SampledFunction sample(const std::function<double(double)>& f, const GridSpec& grid);
SampledFunction sample_complex(const std::function<cplx(double)>& f, const GridSpec& grid);
SampledFunction from_real(const GridSpec& grid, const std::vector<double>& v);

inline double japanese(double x) { return std::sqrt(1.0 + x * x); }

}  // namespace rnw
