#include <omp.h>

#include "rnw/kernels.hpp"

namespace rnw {

namespace {

inline std::complex<double> dot_at(const std::complex<double>* in, long long n, long long j,
                                   const ConvWeights& w) {
  const int H = w.half;
  std::complex<double> acc = 0.0;
  if (j - H >= 0 && j + H < n) {
    for (int k = -H; k <= H; ++k) acc += w.w[k + H] * in[j - k];
  } else {
    for (int k = -H; k <= H; ++k) {
      long long i = (j - k) % n;
      if (i < 0) i += n;
      acc += w.w[k + H] * in[i];
    }
  }
  return acc;
}

}  // namespace

void convolve_omp(const std::complex<double>* in, std::complex<double>* out, std::size_t N,
                  const ConvWeights& w) {
  const long long n = static_cast<long long>(N);
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < n; ++j) out[j] = dot_at(in, n, j, w);
}

std::vector<std::complex<double>> convolve_at(const std::complex<double>* in, std::size_t N,
                                              const ConvWeights& w,
                                              const std::vector<std::size_t>& nodes, Exec exec) {
  std::vector<std::complex<double>> out(nodes.size());
  const long long n = static_cast<long long>(N);
  const long long cnt = static_cast<long long>(nodes.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long q = 0; q < cnt; ++q) out[q] = dot_at(in, n, static_cast<long long>(nodes[q]), w);
  return out;
}

}  // namespace rnw
