#include <cmath>
#include <numbers>

#include "rnw/kernels.hpp"

namespace rnw {

void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes[i] = 0.5 * (1.0 - z);
    weights[i] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
}

bool kernel_resolved(double m, double dx) { return dx * m <= 0.5; }

namespace {

// Cubic Lagrange basis on the nodes t = -1, 0, 1, 2.
inline void lagrange4(double t, double L[4]) {
  L[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
  L[1] = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  L[2] = -(t + 1.0) * t * (t - 2.0) / 2.0;
  L[3] = (t + 1.0) * t * (t - 1.0) / 6.0;
}

}  // namespace

ConvWeights k0_weights(double m, double dx, const AccuracyPolicy& policy) {
  policy.validate();
  ConvWeights cw;
  cw.dx = dx;
  cw.m = m;
  // K0(z) ~ e^{-z}: beyond m|y| = 45 the kernel is below 1e-20 of its scale.
  const int M = static_cast<int>(std::ceil(45.0 / (m * dx))) + 1;
  cw.half = M + 2;
  cw.w.assign(2 * cw.half + 1, 0.0);

  std::vector<double> gx, gw, sx, sw;
  gauss_legendre01(16, gx, gw);
  gauss_legendre01(48, sx, sw);
  const double inv_pi = 1.0 / std::numbers::pi;
  auto K = [&](double y) { return inv_pi * std::cyl_bessel_k(0.0, m * std::abs(y)); };

  // Panel [l, l+1] seen from target j: d = j - l, distance (d - t) dx.
  for (int d = -M + 1; d <= M; ++d) {
    double I[4] = {0, 0, 0, 0};
    double L[4];
    if (d == 0 || d == 1) {
      // log singularity at t = 0 (d == 0) or t = 1 (d == 1): t = s^4 or 1 - s^4
      for (std::size_t q = 0; q < sx.size(); ++q) {
        const double s = sx[q];
        const double s4 = s * s * s * s;
        const double t = (d == 0) ? s4 : 1.0 - s4;
        const double jac = 4.0 * s * s * s;
        const double kv = K((d - t) * dx) * jac * sw[q];
        lagrange4(t, L);
        for (int r = 0; r < 4; ++r) I[r] += kv * L[r];
      }
    } else {
      for (std::size_t q = 0; q < gx.size(); ++q) {
        const double t = gx[q];
        const double kv = K((d - t) * dx) * gw[q];
        lagrange4(t, L);
        for (int r = 0; r < 4; ++r) I[r] += kv * L[r];
      }
    }
    // basis r = 0..3 sits at node l + r - 1, i.e. offset n = d - r + 1
    for (int r = 0; r < 4; ++r) cw.w[d - r + 1 + cw.half] += dx * I[r];
  }
  return cw;
}

}  // namespace rnw
