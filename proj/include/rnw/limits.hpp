#pragma once

#include <vector>

#include "rnw/grid.hpp"
#include "rnw/massive.hpp"

namespace rnw {

// Candidate limits of V_c: plus = (1/2m)(1 + u''/u), minus = (1/2m)(1 - u''/u)
// with u = h sin x. Both are evaluated; the scan reports which one V_c approaches.
enum class LimitSign { plus, minus };

double V_inf(double m, double x, LimitSign sign);

// Relativistic model with speed of light c (hbar = 1):
//   f_c = (1/2mc)(omega_+ + omega_-)(p; mc) h,  u_c = f_c sin x,
//   lambda_c = c (sqrt(1+m^2c^2) - mc),  V_c = lambda_c - c omega(p; mc) u_c / u_c.
struct LimitModel {
  double m = 0.0;
  double c = 0.0;
  GridSpec grid;
  double lambda_c = 0.0;
  SampledFunction f_c, u_c, V_c, u_inf;
  // d = f_c - h and its first two derivatives (spectral)
  std::vector<double> d, d1, d2;
  bool certified = false;  // c m > 146
};

// Throws CertificationError when c m <= 146 unless allow_uncertified.
LimitModel build_limit_model(double m, double c, const GridSpec& grid,
                             bool allow_uncertified = false);

struct LimitRow {
  double c = 0.0;
  double e0 = 0.0;  // sup |u_c - u_inf|
  double e1 = 0.0;  // sup |(u_c - u_inf)'|
  double e2 = 0.0;  // sup |(u_c - u_inf)''|
  double lambda_err = 0.0;  // |lambda_c - 1/(2m)|
  double V_err = 0.0;        // sup over the test set of |V_c - V_inf| for the matching sign
  double V_err_plus = 0.0;
  double V_err_minus = 0.0;
};

struct LimitScan {
  double m = 0.0;
  std::vector<LimitRow> rows;
  double rate = 0.0;  // log-log slope of e0 against c
  LimitSign matching_sign = LimitSign::plus;
};

// Errors are taken over |x| <= L/2; V_err over nodes there with dist(x, pi Z) > 0.2.
// Throws CertificationError if any c m <= 146 (unless allow_uncertified).
LimitScan limit_scan(double m, const std::vector<double>& c_values, const GridSpec& grid,
                     bool allow_uncertified = false);

// {32, 64, 128, 256, 512} * ceil(146/m)
std::vector<double> default_c_values(double m);

// Grid used for limit scans: L = 256 pi, N = 2^20.
GridSpec default_limit_grid();

// (2 pi)^-1/2 sum_k |k|^n |h^(k)| dk for n = 0..n_max: discrete L1 norms of
// k^n h^ on the grid (unitary transform).
std::vector<double> khat_l1_norms(const GridSpec& grid, int n_max = 6);

// Classical references on R^3 (radial variable r > 0).
double u_NW(double r);
double V_NW(double r);
double u_MT(double r);
double V_MT(double r);

// max over radii of |-(u'' + 2u'/r) + V u - u|, 6th-order central
// differences with step 1e-4. Throws DomainError if a radius lies within
// 1e-3 of pi N.
double classical_nw_identity(const std::vector<double>& radii);
double classical_mt_identity(const std::vector<double>& radii);

// Sliding max of |r V_NW(r) + 8 sin 2r| over [r, r + 2 pi] for each r.
double nw_asymptote_envelope(double r);

struct Limit3DRow {
  double c = 0.0;
  double sup_err = 0.0;   // sup_r |sqrt(4 pi) v_c(r) - u_NW(r)|
  double r0_err = 0.0;    // |sqrt(4 pi) v_c(0) - 1|
  double W_err = 0.0;     // off-singular sup |W_c - V_NW / (2m)|
};

// v_c = u_c / (sqrt(4 pi) r), W_c = V_c on r > 0.
std::vector<Limit3DRow> limit_3d_check(double m, const std::vector<double>& c_values,
                                       const GridSpec& grid, bool allow_uncertified = false);

}  // namespace rnw
