#pragma once

#include <string>
#include <vector>

#include "rnw/grid.hpp"

namespace rnw {

enum class MassiveFamily { neumann_wigner, moses_tuan };

std::string to_string(MassiveFamily f);

// g(x) = 2x - sin 2x, h(x) = 1/(1+g^2)
double eval_g(double x);
double eval_h(double x);
// analytic h' and h''
double eval_h1(double x);
double eval_h2(double x);

// h~(x) = 1/(1+g(|x|)); kink in the third derivative at 0.
double eval_h_tilde(double x);
// j-th derivative of h~, j = 0..3. At x = 0 the one-sided value is returned
// (right limit if right_side, else left limit).
double eval_h_tilde_derivative(double x, int j, bool right_side = true);

// Lemma constants for h~: c1 <x>^-1 <= h~ <= c2 <x>^-1, |h~^(j)| <= c3 <x>^-2.
inline constexpr double kMT_c1 = 0.26;
inline constexpr double kMT_c2 = 1.02;
inline constexpr double kMT_c3 = 2.2;

// Mass thresholds above which the lower bound on f is proven.
inline constexpr double kNWCertifiedMass = 146.0;
inline constexpr double kMTCertifiedMass = 34.0;

struct BuildOptions {
  double eps_sin = 1e-3;
  bool allow_uncertified = false;  // do not throw when the f lower bound fails
  double guard_fraction = 0.5;     // diagnostics over |x| <= guard_fraction * L
};

struct MassiveModel {
  MassiveFamily family = MassiveFamily::neumann_wigner;
  double m = 0.0;
  double lambda = 0.0;  // eigenvalue of sqrt(p^2+m^2) - m + V for u
  GridSpec grid;
  double eps_sin = 1e-3;
  double guard_fraction = 0.5;
  double scale = 1.0;  // x here equals x_original / scale (see rescale)

  // g, h are h~-variants for Moses-Tuan; all stored real
  SampledFunction g, h, f, u, V;
  std::vector<double> imV;  // imaginary residue of V per node (diagnostic)

  double imag_diagnostic = 0.0;  // max |Im V| on the guard region
  double seam_diagnostic = 0.0;  // max |V_A - V_B| on eps <= |sin| <= 2 eps, guard region
  double sup_V = 0.0;            // max |V| on the guard region
  double f_bound_margin = 0.0;   // min f<x>^2 - 2 (NW) or min f<x> - 2 (MT) over the grid
  bool mass_certified = false;   // m above the proven threshold
  bool certified = false;        // mass certified and the f bound holds on the grid
};

using MTModel = MassiveModel;

// Default grid for the massive families: L = 256 pi, N = 2^20. L is a
// multiple of pi so sin x is periodic on the grid, and dx = pi/2048 puts the
// neighbours of every zero of sin inside the seam band of eps_sin = 1e-3.
GridSpec default_massive_grid();

// Throws CertificationError when the mass is certified but f violates its
// lower bound on the grid (unless allow_uncertified).
MassiveModel build_massive(double m, const GridSpec& grid, const BuildOptions& opt = {});
MTModel build_moses_tuan(double m, const GridSpec& grid, const BuildOptions& opt = {});

// Scaling x -> a x: mass a m, potential a V(a x), eigenfunction sqrt(a) u(a x),
// eigenvalue a lambda, grid half-width L / a with the same N (nodes map
// exactly). This is generally not the model built directly at mass a m.
MassiveModel rescale(const MassiveModel& model, double a);

struct RadialLift {
  std::vector<double> r;  // positive grid nodes
  std::vector<double> v;  // u(r) / (sqrt(4 pi) r)
  std::vector<double> W;  // V(r)
  double v0 = 0.0;        // r -> 0 limit u'(0)/sqrt(4 pi)
  double norm3d = 0.0;    // int 4 pi r^2 v^2 dr over the grid half-line
  double norm1d = 0.0;    // int u^2 dr over the same nodes
};

RadialLift radial_lift(const MassiveModel& model);

// true on nodes where |sin(x_original)| >= eps
bool off_singular(const MassiveModel& model, std::size_t j);

}  // namespace rnw
