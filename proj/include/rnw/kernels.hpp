#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rnw/specfun.hpp"

namespace rnw {

enum class Exec { serial, parallel };

// Convolution weights for y_j = sum_n w[n] f_{j-n} approximating
// int K(x_j - y) f(y) dy with K(y) = K0(m|y|)/pi, the kernel of
// (p^2 + m^2)^{-1/2}. Product integration against the piecewise cubic
// interpolant of f; panels touching the log singularity use t = s^4.
struct ConvWeights {
  double dx = 0.0;
  double m = 0.0;
  int half = 0;           // w covers offsets -half..half
  std::vector<double> w;  // w[n + half]
  double operator()(int n) const { return (n < -half || n > half) ? 0.0 : w[n + half]; }
};

ConvWeights k0_weights(double m, double dx, const AccuracyPolicy& policy = {});

// kernel is resolved on the grid only if dx*m <= 0.5
bool kernel_resolved(double m, double dx);

// Periodic convolution over all nodes.
void convolve_serial(const std::complex<double>* in, std::complex<double>* out, std::size_t N,
                     const ConvWeights& w);
void convolve_omp(const std::complex<double>* in, std::complex<double>* out, std::size_t N,
                  const ConvWeights& w);

// Periodic convolution evaluated only at the listed nodes.
std::vector<std::complex<double>> convolve_at(const std::complex<double>* in, std::size_t N,
                                              const ConvWeights& w,
                                              const std::vector<std::size_t>& nodes,
                                              Exec exec = Exec::parallel);

// a[j] *= s[j]
template <class R>
void multiply_pointwise(std::vector<std::complex<R>>& a, const std::vector<R>& s, Exec exec);
template <class R>
void multiply_pointwise(std::vector<std::complex<R>>& a, const std::vector<std::complex<R>>& s,
                        Exec exec);

// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace rnw
