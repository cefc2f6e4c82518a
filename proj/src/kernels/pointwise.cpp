#include "rnw/kernels.hpp"

namespace rnw {

template <class R>
void multiply_pointwise(std::vector<std::complex<R>>& a, const std::vector<R>& s, Exec exec) {
  const long long n = static_cast<long long>(a.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long j = 0; j < n; ++j) a[j] *= s[j];
}

template <class R>
void multiply_pointwise(std::vector<std::complex<R>>& a, const std::vector<std::complex<R>>& s,
                        Exec exec) {
  const long long n = static_cast<long long>(a.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (long long j = 0; j < n; ++j) a[j] *= s[j];
}

template void multiply_pointwise<double>(std::vector<std::complex<double>>&,
                                         const std::vector<double>&, Exec);
template void multiply_pointwise<long double>(std::vector<std::complex<long double>>&,
                                              const std::vector<long double>&, Exec);
template void multiply_pointwise<double>(std::vector<std::complex<double>>&,
                                         const std::vector<std::complex<double>>&, Exec);
template void multiply_pointwise<long double>(std::vector<std::complex<long double>>&,
                                              const std::vector<std::complex<long double>>&, Exec);

}  // namespace rnw
