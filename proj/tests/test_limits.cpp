#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rnw/errors.hpp"
#include "rnw/limits.hpp"
#include "rnw/massive.hpp"

using namespace rnw;
using std::numbers::pi;

namespace {
GridSpec small_grid() { return make_grid(32.0L * pi, std::size_t{1} << 17); }
}  // namespace

TEST_CASE("limit potential is the classical one scaled by 1/2m") {
  for (double x : {0.4, 1.7, 6.0, 20.3})
    CHECK(V_inf(2.0, x, LimitSign::plus) == doctest::Approx(V_NW(x) / 4.0).epsilon(1e-9));
  // minus differs by (1/m)(u''/u) = (1/m)(V_NW - 1)... i.e. the two sum to 1/m
  CHECK(V_inf(1.0, 1.1, LimitSign::plus) + V_inf(1.0, 1.1, LimitSign::minus) == doctest::Approx(1.0));
}

TEST_CASE("classical identities") {
  CHECK(classical_nw_identity({0.7, 1.9, 5.3, 12.1}) < 1e-5);
  CHECK(classical_mt_identity({0.7, 1.9, 5.3}) < 1e-5);
  CHECK(u_NW(1e-8) == doctest::Approx(1.0));
  CHECK(u_MT(1e-8) == doctest::Approx(1.0));
  CHECK_THROWS_AS(classical_nw_identity({pi + 1e-4}), DomainError);
}

TEST_CASE("classical NW potential has a 1/r envelope around -8 sin 2r / r") {
  double lo = 1e300, hi = 0;
  for (double r = 50; r <= 400; r *= 1.2) {
    const double c = r * nw_asymptote_envelope(r);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  CHECK(hi / lo <= 1.25);
}

TEST_CASE("discrete L1 norms of k^n h^ converge under refinement") {
  const auto a = khat_l1_norms(make_grid(64.0L * pi, std::size_t{1} << 16));
  const auto b = khat_l1_norms(make_grid(64.0L * pi, std::size_t{1} << 17));
  REQUIRE(a.size() == 7);
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(std::abs(a[n] / b[n] - 1) < 0.01);
  // sup |h^(n)| <= || k^n h^ ||_L1
  CHECK(eval_h(0.0) <= a[0] * (1 + 1e-9));
  double s1 = 0, s2 = 0;
  for (double x = -4; x <= 4; x += 1e-3) {
    s1 = std::max(s1, std::abs(eval_h1(x)));
    s2 = std::max(s2, std::abs(eval_h2(x)));
  }
  CHECK(s1 <= a[1]);
  CHECK(s2 <= a[2]);
}

TEST_CASE("limit model certification") {
  CHECK_THROWS_AS(build_limit_model(1.0, 100.0, small_grid()), CertificationError);
  const auto M = build_limit_model(1.0, 100.0, small_grid(), true);
  CHECK_FALSE(M.certified);
  const auto dc = default_c_values(1.0);
  CHECK(dc.front() == 32 * 146.0);
  CHECK(default_c_values(146.0).front() == 32.0);
}

TEST_CASE("limit model at c = 256") {
  const double m = 1.0, c = 256.0;
  const auto M = build_limit_model(m, c, small_grid());
  CHECK(M.certified);
  CHECK(M.u_c.is_real(1e-12));
  CHECK(M.u_c.is_odd(1e-10));
  double e0 = 0, dsup = 0;
  for (std::size_t j = 0; j < M.grid.N; ++j) {
    e0 = std::max(e0, std::abs(M.u_c[j] - M.u_inf[j]));
    dsup = std::max(dsup, std::abs(M.d[j]));
  }
  CHECK(e0 <= dsup * (1 + 1e-12));
  CHECK(std::abs(M.lambda_c - 1 / (2 * m)) <= (1 / (2 * m)) / (c * c * m * m));
}

TEST_CASE("short non-relativistic scan") {
  const auto s = limit_scan(1.0, {160.0, 320.0}, small_grid());
  REQUIRE(s.rows.size() == 2);
  const double r = s.rows[0].e0 / s.rows[1].e0;
  CHECK(r > 3.2);
  CHECK(r < 4.8);
  CHECK(s.rows[1].e1 < s.rows[0].e1);
  CHECK(s.rows[1].e2 < s.rows[0].e2);
  CHECK(s.rows[1].lambda_err < s.rows[0].lambda_err);
  CHECK(s.matching_sign == LimitSign::plus);
  CHECK(s.rows[1].V_err_plus < s.rows[1].V_err_minus);
  CHECK(s.rate == doctest::Approx(-2.0).epsilon(0.1));
  CHECK_THROWS_AS(limit_scan(1.0, {100.0, 320.0}, small_grid()), CertificationError);
}

TEST_CASE("radial lift of the limit") {
  const auto rows = limit_3d_check(1.0, {160.0, 320.0}, small_grid());
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].sup_err < rows[0].sup_err);
  CHECK(rows[1].r0_err < 1e-3);
}
