#pragma once

#include <string>
#include <vector>

#include "rnw/grid.hpp"
#include "rnw/spectral.hpp"

namespace rnw {

enum class Parity { even, odd };
enum class Classification { eigenvalue, resonance };

std::string to_string(Parity p);
std::string to_string(Classification c);

// Zero-energy pair for |p| + V:
//   even: u_nu = (1+x^2)^-nu,   V_nu,       nu > 0
//   odd:  v_nu = x (1+x^2)^-nu, V~_nu,      1/2 < nu < 2
struct MasslessFamily {
  Parity parity = Parity::even;
  double nu = 1.0;
  Classification classification = Classification::eigenvalue;
  std::string decay_class;  // e.g. "O(|x|^-1)"
  double decay_exponent = 0.0;  // expected power (negative), 0 if not a pure power
  bool log_corrected = false;   // O(log|x|/|x|) case

  double eig(double x) const;
  double V(double x) const;
};

// Throws DomainError for nu <= 0 (even) or nu outside (1/2, 2) (odd).
MasslessFamily make_massless(Parity parity, double nu);

double u_nu(double nu, double x);
double v_nu(double nu, double x);

// Even-family potential. nu = 1/2 uses its closed form; other nu go through
// 2F1(1, 1/2+nu; 1/2; -x^2), which is log-degenerate for nu = 3/2, 5/2, ...
// (those throw UnsupportedParameters).
double V_nu(double nu, double x);

// Odd-family potential, 1/2 < nu < 2; nu = 1 and nu = 3/2 use closed forms.
double V_tilde_nu(double nu, double x);

// Unitary Fourier transform of u_nu: 2^(1-nu)/Gamma(nu) |k|^(nu-1/2) K_(nu-1/2)(|k|).
// k = 0 is accepted only for nu > 1/2.
double u_hat_nu(double nu, double k);

// Constant A with |x| V_nu(x) -> A, valid for 0 < nu < 1/2.
double plateau_constant(double nu);

enum class ResidualMode { spectral, analytic };

// Relative L2 residual ||(|p| + V) u|| / ||u|| over |x| <= L/2. The analytic
// mode uses the closed-form |p| u_1 and |p| v_1 and is available for nu = 1.
struct ResidualOptions {
  ResidualMode mode = ResidualMode::spectral;
  Boundary boundary = Boundary::free;
};
double residual_even(double nu, const GridSpec& grid, const ResidualOptions& opt = {});
double residual_odd(double nu, const GridSpec& grid, const ResidualOptions& opt = {});

// Default grid for massless work: L = 1024, N = 2^20, so the decay window
// [50, 400] lies inside the guard region.
GridSpec default_massless_grid();

// Sample of the family on a grid (eigenfunction and potential), evaluated in parallel.
SampledFunction sample_eig(const MasslessFamily& fam, const GridSpec& grid);
SampledFunction sample_V(const MasslessFamily& fam, const GridSpec& grid);

// |x| V(x) ~ a + b |x|^(2 nu - 1) fitted on [x_min, x_max]; returns a.
double plateau_estimate(double nu, double x_min, double x_max, int samples = 2000);

struct SignStructure {
  int zero_count = 0;       // sign changes of V on x >= 0 over the sampled range
  double last_zero = 0.0;   // X0: V keeps one sign beyond it
  bool positive_tail = false;
};
SignStructure sign_structure(const MasslessFamily& fam, double x_max, int samples = 200000);

// ||u_nu||^2 over [-X, X] for X = x0, 2 x0, ...; convergent iff the
// increments shrink geometrically.
struct L2Growth {
  std::vector<double> X;
  std::vector<double> norm2;
  double increment_ratio = 0.0;  // last increment / previous increment
  bool converges = false;
};
L2Growth l2_window_growth(double nu, double x0 = 100.0, int doublings = 8);

// sup over |x| <= L/2 of |v_nu - (2-2nu)^-1 d/dx u_(nu-1)|, spectral derivative.
// Requires 1 < nu < 2 so that u_(nu-1) decays.
double derivative_relation_error(double nu, const GridSpec& grid);

// Lowest eigenvalue of the N x N compression of |p| + lambda V_nu on the
// lattice x_j = -L + j dx. |p| enters through its lattice Toeplitz symbol:
// A_0 = pi/(2 dx), A_n = -2/(pi dx n^2) for odd n, 0 for even n != 0.
struct CouplingPoint {
  double lambda = 0.0;
  double e0 = 0.0;
  bool converged = true;
  std::string error;
};
struct CouplingScan {
  double nu = 0.0;
  GridSpec grid;
  std::vector<CouplingPoint> points;
  double delta_grid = 0.0;  // |E0| at lambda = 0 (discretisation slack)
};
// Throws InvalidSize for N > 2^12.
CouplingScan coupling_scan(double nu, const std::vector<double>& couplings,
                           const GridSpec& grid = make_grid(256.0L, 4096));

// dense lattice |p| matrix, row-major, for tests
std::vector<double> abs_p_toeplitz(std::size_t N, double dx);

}  // namespace rnw
