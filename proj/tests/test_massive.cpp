#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rnw/errors.hpp"
#include "rnw/massive.hpp"
#include "rnw/spectral.hpp"

using namespace rnw;
using std::numbers::pi;

namespace {

GridSpec small_grid() { return make_grid(32.0L * pi, std::size_t{1} << 17); }

double fd1(double (*f)(double), double x, double h = 1e-4) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// max over the guard region, off the zeros of sin, of
// |omega(p) u + V u - lambda u| / sup |u|, with omega at mass m_sym.
double residual(const MassiveModel& M, double m_sym) {
  const auto wu = apply_multiplier(M.u, make_symbol(SymbolName::omega, m_sym));
  const double guard = M.guard_fraction * M.grid.L();
  double r = 0.0, su = M.u.sup_abs();
  for (std::size_t j = 0; j < M.grid.N; ++j) {
    if (std::abs(M.grid.x(j)) > guard || !off_singular(M, j)) continue;
    r = std::max(r, std::abs(wu[j] + (M.V[j] - M.lambda) * M.u[j]));
  }
  return r / su;
}

}  // namespace

TEST_CASE("g, h and analytic derivatives") {
  CHECK(eval_g(0.0) == 0.0);
  CHECK(eval_g(pi) == doctest::Approx(2 * pi));
  CHECK(eval_h(pi) == doctest::Approx(1 / (1 + 4 * pi * pi)));
  for (double x : {-3.1, -0.4, 0.2, 1.0, 7.7}) {
    CHECK(eval_h1(x) == doctest::Approx(fd1(eval_h, x)).epsilon(1e-8));
    CHECK(eval_h2(x) == doctest::Approx(fd1(eval_h1, x)).epsilon(1e-8));
  }
}

TEST_CASE("h~ is smooth up to a jump of its third derivative") {
  CHECK(eval_h_tilde(-2.0) == eval_h_tilde(2.0));
  for (int j = 0; j < 3; ++j)
    CHECK(eval_h_tilde_derivative(0.0, j, true) == doctest::Approx(eval_h_tilde_derivative(0.0, j, false)));
  CHECK(eval_h_tilde_derivative(0.0, 3, true) == doctest::Approx(-8.0));
  CHECK(eval_h_tilde_derivative(0.0, 3, false) == doctest::Approx(8.0));
  for (double x : {-2.0, 0.5, 4.0}) {
    const double h = 1e-4;
    const double fd = (eval_h_tilde_derivative(x + h, 2) - eval_h_tilde_derivative(x - h, 2)) / (2 * h);
    CHECK(eval_h_tilde_derivative(x, 3) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("Neumann-Wigner model on a small grid") {
  const auto M = build_massive(146.0, small_grid());
  CHECK(M.certified);
  CHECK(M.mass_certified);
  CHECK(M.f_bound_margin > 0.0);
  CHECK(M.lambda == doctest::Approx(std::sqrt(1 + 146.0 * 146.0) - 146.0).epsilon(1e-11));
  CHECK(M.u.is_real(1e-12));
  CHECK(M.imag_diagnostic < 1e-7 * M.sup_V);
  CHECK(M.seam_diagnostic < 1e-6 * M.sup_V);
  CHECK(residual(M, 146.0) < 1e-6);
  for (std::size_t j = 0; j < M.grid.N; j += 997) CHECK(std::isfinite(M.V[j].real()));
  // u = f sin x
  const std::size_t j = M.grid.index_of(1.3);
  CHECK(M.u[j].real() == doctest::Approx(M.f[j].real() * std::sin(M.grid.x(j))).epsilon(1e-14));
}

TEST_CASE("uncertified masses build without throwing") {
  const auto M = build_massive(100.0, small_grid());
  CHECK_FALSE(M.mass_certified);
  CHECK_FALSE(M.certified);
  CHECK_THROWS(build_massive(0.0, small_grid()));
}

TEST_CASE("rescaled model solves the rescaled equation") {
  const auto M = build_massive(146.0, small_grid());
  const double a = 2.0;
  const auto R = rescale(M, a);
  CHECK(R.m == 292.0);
  CHECK(R.lambda == doctest::Approx(a * M.lambda));
  CHECK(R.grid.L() == doctest::Approx(M.grid.L() / a));
  CHECK(R.grid.N == M.grid.N);
  const std::size_t j = M.grid.index_of(2.0);
  CHECK(R.V[j].real() == doctest::Approx(a * M.V[j].real()));
  CHECK(R.u[j].real() == doctest::Approx(std::sqrt(a) * M.u[j].real()));
  CHECK(residual(R, 292.0) < 1e-6);
  CHECK(off_singular(R, R.grid.index_of(pi / 4)));
  CHECK_FALSE(off_singular(R, R.grid.index_of(pi / 2)));
}

TEST_CASE("radial lift preserves the norm") {
  const auto M = build_massive(146.0, small_grid());
  const auto lift = radial_lift(M);
  CHECK(lift.norm3d == doctest::Approx(lift.norm1d).epsilon(1e-12));
  const double dx = M.grid.dx();
  const std::size_t c = M.grid.N / 2;
  const double du = (M.u[c + 1].real() - M.u[c - 1].real()) / (2 * dx);
  CHECK(lift.v0 == doctest::Approx(du / std::sqrt(4 * pi)).epsilon(1e-6));
  CHECK(lift.v[10] == doctest::Approx(M.u[c + 11].real() / (std::sqrt(4 * pi) * lift.r[10])));
}

TEST_CASE("Moses-Tuan model") {
  const auto M = build_moses_tuan(40.0, small_grid());
  CHECK(M.family == MassiveFamily::moses_tuan);
  CHECK(M.mass_certified);
  CHECK(M.u.is_real(1e-12));
  CHECK(residual(M, 40.0) < 1e-5);
  CHECK_FALSE(off_singular(M, M.grid.N / 2));
}
