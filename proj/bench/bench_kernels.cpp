// Serial reference against the OpenMP kernels. RNW_THREADS or
// OMP_NUM_THREADS sets the thread count of the parallel variants.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "rnw/kernels.hpp"

namespace {

std::vector<std::complex<double>> random_input(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  std::vector<std::complex<double>> v(n);
  for (auto& z : v) z = {nd(rng), nd(rng)};
  return v;
}

void BM_convolve(benchmark::State& state, bool parallel) {
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  // dx*m fixed, so the stencil width is the same for every N
  const auto w = rnw::k0_weights(1.0, 0.02);
  const auto in = random_input(N);
  std::vector<std::complex<double>> out(N);
  for (auto _ : state) {
    if (parallel)
      rnw::convolve_omp(in.data(), out.data(), N, w);
    else
      rnw::convolve_serial(in.data(), out.data(), N, w);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(N));
  state.counters["stencil"] = static_cast<double>(w.w.size());
}

void BM_pointwise(benchmark::State& state, rnw::Exec exec) {
  const std::size_t N = static_cast<std::size_t>(state.range(0));
  auto a = random_input(N);
  std::vector<double> s(N, 1.0000001);
  for (auto _ : state) {
    rnw::multiply_pointwise(a, s, exec);
    benchmark::DoNotOptimize(a.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(N));
}

}  // namespace

BENCHMARK_CAPTURE(BM_convolve, serial, false)->RangeMultiplier(4)->Range(1 << 12, 1 << 16);
BENCHMARK_CAPTURE(BM_convolve, omp, true)->RangeMultiplier(4)->Range(1 << 12, 1 << 16);
BENCHMARK_CAPTURE(BM_pointwise, serial, rnw::Exec::serial)->RangeMultiplier(8)->Range(1 << 14, 1 << 20);
BENCHMARK_CAPTURE(BM_pointwise, omp, rnw::Exec::parallel)->RangeMultiplier(8)->Range(1 << 14, 1 << 20);

BENCHMARK_MAIN();
