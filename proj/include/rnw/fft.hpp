#pragma once

#include <complex>
#include <vector>

namespace rnw {

// Unnormalised forward DFT (e^{-2 pi i jk/N}) and its normalised inverse,
// in place. Instantiated for double and long double. Plans use
// FFTW_ESTIMATE | FFTW_UNALIGNED, so results do not depend on timing or on
// buffer alignment.
template <class R>
void fft_forward(std::vector<std::complex<R>>& a);

template <class R>
void fft_inverse(std::vector<std::complex<R>>& a);

}  // namespace rnw
