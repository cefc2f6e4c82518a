#include "rnw/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rnw/errors.hpp"

namespace rnw {

GridSpec make_grid(long double L, std::size_t N) {
  if (N < 2 || (N & (N - 1)) != 0)
    throw InvalidSize("grid size must be a power of two >= 2, got " + std::to_string(N));
  if (!(L > 0.0L)) throw InvalidSize("grid half-width must be > 0");
  GridSpec g;
  g.half_width = L;
  g.N = N;
  return g;
}

std::size_t GridSpec::index_of(double xv) const {
  const long double t = (static_cast<long double>(xv) + half_width) / (2.0L * half_width / N);
  long double j = std::nearbyint(t);
  j = std::clamp(j, 0.0L, static_cast<long double>(N - 1));
  return static_cast<std::size_t>(j);
}

SampledFunction::SampledFunction(const GridSpec& g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.N) throw InvalidSize("sample count does not match grid");
}

std::vector<double> SampledFunction::real_part() const {
  std::vector<double> r(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) r[j] = values[j].real();
  return r;
}

double SampledFunction::sup_abs() const {
  double s = 0.0;
  for (const auto& v : values) s = std::max(s, std::abs(v));
  return s;
}

bool SampledFunction::is_real(double tol) const {
  const double scale = std::max(sup_abs(), 1e-300);
  for (const auto& v : values)
    if (std::abs(v.imag()) > tol * scale) return false;
  return true;
}

bool SampledFunction::is_even(double tol) const {
  const double scale = std::max(sup_abs(), 1e-300);
  for (std::size_t j = 0; j < values.size(); ++j)
    if (std::abs(values[j] - values[grid.mirror(j)]) > tol * scale) return false;
  return true;
}

bool SampledFunction::is_odd(double tol) const {
  const double scale = std::max(sup_abs(), 1e-300);
  // j = 0 sits at -L, whose mirror is itself under periodic wrap; an odd
  // function that is not periodic-odd there is still odd on the open interval.
  for (std::size_t j = 1; j < values.size(); ++j)
    if (std::abs(values[j] + values[grid.mirror(j)]) > tol * scale) return false;
  return true;
}

SampledFunction sample(const std::function<double(double)>& f, const GridSpec& grid) {
  std::vector<cplx> v(grid.N);
  for (std::size_t j = 0; j < grid.N; ++j) v[j] = f(grid.x(j));
  return {grid, std::move(v)};
}

SampledFunction sample_complex(const std::function<cplx(double)>& f, const GridSpec& grid) {
  std::vector<cplx> v(grid.N);
  for (std::size_t j = 0; j < grid.N; ++j) v[j] = f(grid.x(j));
  return {grid, std::move(v)};
}

SampledFunction from_real(const GridSpec& grid, const std::vector<double>& r) {
  std::vector<cplx> v(r.begin(), r.end());
  return {grid, std::move(v)};
}

}  // namespace rnw
