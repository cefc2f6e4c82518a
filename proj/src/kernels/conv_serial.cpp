#include "rnw/kernels.hpp"

namespace rnw {

// Reference implementation; convolve_omp must agree with it bit for bit.
void convolve_serial(const std::complex<double>* in, std::complex<double>* out, std::size_t N,
                     const ConvWeights& w) {
  const long long n = static_cast<long long>(N);
  const int H = w.half;
  for (long long j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (int k = -H; k <= H; ++k) {
      long long i = j - k;
      i %= n;
      if (i < 0) i += n;
      acc += w.w[k + H] * in[i];
    }
    out[j] = acc;
  }
}

}  // namespace rnw
