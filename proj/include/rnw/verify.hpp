#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rnw/grid.hpp"
#include "rnw/massive.hpp"
#include "rnw/massless.hpp"

namespace rnw {

enum class CheckKind { bound, residual, decay, diagnostic };

std::string to_string(CheckKind k);

struct BoundCheck {
  std::string id;
  std::string anchor;  // the inequality being tested
  std::string domain;  // description of the sampled set
  CheckKind kind = CheckKind::bound;
  double margin = 0.0;  // min over the domain of (RHS - LHS), oriented so >= 0 means it holds
  double tol_abs = 1e-7;
  bool certified = true;  // counts toward the verdict
  bool passed = false;
};

// passed = margin >= -tol_abs
BoundCheck make_check(std::string id, std::string anchor, std::string domain, double margin,
                      CheckKind kind = CheckKind::bound, double tol_abs = 1e-7);

struct BoundsOptions {
  int kernel_points = 200;  // log-spaced nodes for the kernel-based checks
  int bessel_points = 200;  // log-spaced m|x| in [1e-2, 50]
};

// One check per inequality. Margins of weighted bounds are taken after
// multiplying out the <x> weight (e.g. min f<x>^2 - 2). Checks that use
// the periodic spectral engine are evaluated on |x| <= L/2.
std::vector<BoundCheck> bounds_suite(const MassiveModel& model, const BoundsOptions& opt = {});

// Ids produced by bounds_suite for each family, in order.
std::vector<std::string> bound_ids(MassiveFamily family);

// Bessel sandwich sqrt(2/pi)(1-1/e) e^-z / sqrt(1+2z) <= sqrt(2/pi) K0(z) <= e^-z / sqrt(z)
// at n log-spaced z in [z_lo, z_hi]; returns {lower margin, upper margin}
// as min of (K/lower - 1) and (upper/K - 1).
std::pair<double, double> bessel_sandwich_margins(int n, double z_lo = 1e-2, double z_hi = 50.0);

enum class FitModel { power, power_log };
std::string to_string(FitModel m);

struct Window {
  double x_min = 50.0;
  double x_max = 400.0;
};

// "a:b" with 0 < a < b; throws DomainError otherwise.
Window parse_window(const std::string& s);

struct DecayFit {
  Window window;            // as used (after clamping)
  FitModel model = FitModel::power;
  double exponent = 0.0;
  std::optional<double> log_coeff;  // power_log only
  double amplitude = 0.0;            // log-intercept
  double residual = 0.0;             // rms of the log fit
  double masked_fraction = 0.0;
  bool sparse = false;   // masked fraction above 10%
  bool clamped = false;  // x_max was reduced to L/2
  std::size_t samples = 0;
};

struct DecayOptions {
  bool clamp_to_guard = true;
};

// Least squares of log|v| against {1, log|x|} (power) or {1, log|x|, log log|x|}
// (power_log) over nodes with x_min <= |x| <= x_max. Zero or non-finite samples
// are masked. Throws DomainError if x_min < 20 or the window leaves
// |x| <= L/2 (after optional clamping) and InsufficientData if masking removes
// more than half of the window.
DecayFit decay_fit(const SampledFunction& samples, Window window, FitModel model,
                   const DecayOptions& opt = {});

// Same on scattered samples (x > 0).
DecayFit decay_fit_points(const std::vector<double>& x, const std::vector<double>& v, Window window,
                          FitModel model);

// Relative L2 residual ||(omega(p) + V - lambda) u|| / ||u|| over |x| <= L/2,
// with the operator applied in double precision (independent of the build).
// masked: skip nodes with |sin x| < eps_sin.
double eigen_residual(const MassiveModel& model, bool masked = true);

struct VerificationReport {
  nlohmann::ordered_json model;
  std::vector<BoundCheck> checks;
  nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
  std::vector<DecayFit> decay;
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();
  bool pass = false;
  std::vector<std::string> failing;
  std::string reason;
};

// Sorts checks by id; verdict passes iff there is at least one check and
// every certified check passed.
VerificationReport assemble_report(nlohmann::ordered_json model, std::vector<BoundCheck> checks,
                                   nlohmann::ordered_json residuals, std::vector<DecayFit> decay,
                                   nlohmann::ordered_json diagnostics);

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const DecayFit& d);
nlohmann::ordered_json to_json(const GridSpec& g);

// Full suites behind `rnw verify`.
VerificationReport verify_massive(const MassiveModel& model, Window window = {});
VerificationReport verify_massless(const MasslessFamily& fam, const GridSpec& grid, Window window = {});
VerificationReport verify_classical(bool moses_tuan);

}  // namespace rnw
