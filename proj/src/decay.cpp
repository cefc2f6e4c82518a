#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "rnw/errors.hpp"
#include "rnw/verify.hpp"

namespace rnw {

std::string to_string(FitModel m) { return m == FitModel::power ? "power" : "power_log"; }

Window parse_window(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos) throw DomainError("window must look like a:b, got '" + s + "'");
  Window w;
  try {
    std::size_t used = 0;
    const std::string a = s.substr(0, pos), b = s.substr(pos + 1);
    w.x_min = std::stod(a, &used);
    if (used != a.size()) throw DomainError("bad window start");
    w.x_max = std::stod(b, &used);
    if (used != b.size()) throw DomainError("bad window end");
  } catch (const std::logic_error&) {
    throw DomainError("window must look like a:b, got '" + s + "'");
  }
  if (!(w.x_min > 0.0 && w.x_max > w.x_min))
    throw DomainError("window needs 0 < a < b, got '" + s + "'");
  return w;
}

namespace {

DecayFit fit(const std::vector<double>& x, const std::vector<double>& v, std::size_t total,
             Window w, FitModel model) {
  DecayFit d;
  d.window = w;
  d.model = model;
  d.samples = x.size();
  d.masked_fraction = total ? 1.0 - double(x.size()) / double(total) : 1.0;
  if (total == 0 || d.masked_fraction > 0.5) {
    std::ostringstream os;
    os << "decay fit: " << x.size() << " usable samples of " << total << " in the window";
    throw InsufficientData(os.str());
  }
  d.sparse = d.masked_fraction > 0.1;
  const int p = model == FitModel::power ? 2 : 3;
  Eigen::MatrixXd A(x.size(), p);
  Eigen::VectorXd b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    A(i, 0) = 1.0;
    A(i, 1) = lx;
    if (p == 3) A(i, 2) = std::log(lx);
    b(i) = std::log(std::abs(v[i]));
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  d.amplitude = c(0);
  d.exponent = c(1);
  if (p == 3) d.log_coeff = c(2);
  d.residual = std::sqrt((A * c - b).squaredNorm() / double(x.size()));
  return d;
}

bool usable(double v) { return std::isfinite(v) && std::abs(v) > 1e-300; }

}  // namespace

DecayFit decay_fit(const SampledFunction& samples, Window window, FitModel model,
                   const DecayOptions& opt) {
  const GridSpec& g = samples.grid;
  const double guard = 0.5 * g.L();
  if (window.x_min < 20.0) throw DomainError("decay window must start at |x| >= 20");
  if (!(window.x_max > window.x_min)) throw DomainError("decay window is empty");
  bool clamped = false;
  if (window.x_max > guard) {
    if (!opt.clamp_to_guard || window.x_min >= guard) {
      std::ostringstream os;
      os << "decay window [" << window.x_min << ", " << window.x_max
         << "] leaves the guard region |x| <= " << guard;
      throw DomainError(os.str());
    }
    window.x_max = guard;
    clamped = true;
  }
  std::vector<double> x, v;
  std::size_t total = 0;
  for (std::size_t j = 0; j < g.N; ++j) {
    const double ax = std::abs(g.x(j));
    if (ax < window.x_min || ax > window.x_max) continue;
    ++total;
    const double val = std::abs(samples.values[j]);
    if (!usable(val)) continue;
    x.push_back(ax);
    v.push_back(val);
  }
  DecayFit d = fit(x, v, total, window, model);
  d.clamped = clamped;
  return d;
}

DecayFit decay_fit_points(const std::vector<double>& x, const std::vector<double>& v, Window window,
                          FitModel model) {
  if (x.size() != v.size()) throw std::invalid_argument("decay_fit_points: size mismatch");
  if (window.x_min < 20.0) throw DomainError("decay window must start at |x| >= 20");
  std::vector<double> xs, vs;
  std::size_t total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ax = std::abs(x[i]);
    if (ax < window.x_min || ax > window.x_max) continue;
    ++total;
    if (!usable(v[i])) continue;
    xs.push_back(ax);
    vs.push_back(v[i]);
  }
  return fit(xs, vs, total, window, model);
}

}  // namespace rnw
