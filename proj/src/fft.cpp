#include "rnw/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace rnw {

namespace {
// The FFTW planner is not thread-safe; execution is.
std::mutex planner_mutex;
constexpr unsigned kFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;
}  // namespace

template <>
void fft_forward<double>(std::vector<std::complex<double>>& a) {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  const int n = static_cast<int>(a.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft_1d(n, p, p, FFTW_FORWARD, kFlags);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftw_destroy_plan(plan);
}

template <>
void fft_inverse<double>(std::vector<std::complex<double>>& a) {
  auto* p = reinterpret_cast<fftw_complex*>(a.data());
  const int n = static_cast<int>(a.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft_1d(n, p, p, FFTW_BACKWARD, kFlags);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  const double s = 1.0 / n;
  for (auto& v : a) v *= s;
}

template <>
void fft_forward<long double>(std::vector<std::complex<long double>>& a) {
  auto* p = reinterpret_cast<fftwl_complex*>(a.data());
  const int n = static_cast<int>(a.size());
  fftwl_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftwl_plan_dft_1d(n, p, p, FFTW_FORWARD, kFlags);
  }
  fftwl_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftwl_destroy_plan(plan);
}

template <>
void fft_inverse<long double>(std::vector<std::complex<long double>>& a) {
  auto* p = reinterpret_cast<fftwl_complex*>(a.data());
  const int n = static_cast<int>(a.size());
  fftwl_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftwl_plan_dft_1d(n, p, p, FFTW_BACKWARD, kFlags);
  }
  fftwl_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftwl_destroy_plan(plan);
  }
  const long double s = 1.0L / n;
  for (auto& v : a) v *= s;
}

}  // namespace rnw
