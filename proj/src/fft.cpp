#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <mutex>

namespace frwt::detail {

namespace {

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanGuard {
  fftw_plan plan;
  ~PlanGuard() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
};

template <class Make>
fftw_plan make_plan(Make make) {
  std::lock_guard lock(planner_mutex());
  return make();
}

}  // namespace

std::vector<Complex> real_dft(const std::vector<double>& x, std::size_t M) {
  double* in = fftw_alloc_real(M);
  fftw_complex* out = fftw_alloc_complex(M / 2 + 1);
  {
    PlanGuard p{make_plan([&] { return fftw_plan_dft_r2c_1d(static_cast<int>(M), in, out, FFTW_ESTIMATE); })};
    std::fill(in, in + M, 0.0);
    std::copy(x.begin(), x.end(), in);
    fftw_execute(p.plan);
  }
  std::vector<Complex> y(M / 2 + 1);
  for (std::size_t m = 0; m < y.size(); ++m) y[m] = Complex(out[m][0], out[m][1]);
  fftw_free(in);
  fftw_free(out);
  return y;
}

std::vector<Complex> linear_convolution(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  const std::size_t M = std::bit_ceil(n);
  auto* x = fftw_alloc_complex(M);
  auto* y = fftw_alloc_complex(M);
  std::vector<Complex> c(n);
  {
    PlanGuard fx{make_plan([&] { return fftw_plan_dft_1d(static_cast<int>(M), x, x, FFTW_FORWARD, FFTW_ESTIMATE); })};
    PlanGuard fy{make_plan([&] { return fftw_plan_dft_1d(static_cast<int>(M), y, y, FFTW_FORWARD, FFTW_ESTIMATE); })};
    PlanGuard bx{make_plan([&] { return fftw_plan_dft_1d(static_cast<int>(M), x, x, FFTW_BACKWARD, FFTW_ESTIMATE); })};
    const auto load = [M](fftw_complex* dst, std::span<const Complex> src) {
      for (std::size_t k = 0; k < M; ++k) {
        const Complex v = k < src.size() ? src[k] : Complex{};
        dst[k][0] = v.real();
        dst[k][1] = v.imag();
      }
    };
    load(x, a);
    load(y, b);
    fftw_execute(fx.plan);
    fftw_execute(fy.plan);
    for (std::size_t k = 0; k < M; ++k) {
      const Complex p = Complex(x[k][0], x[k][1]) * Complex(y[k][0], y[k][1]);
      x[k][0] = p.real();
      x[k][1] = p.imag();
    }
    fftw_execute(bx.plan);
  }
  const double scale = 1.0 / static_cast<double>(M);
  for (std::size_t k = 0; k < n; ++k) c[k] = Complex(x[k][0], x[k][1]) * scale;
  fftw_free(x);
  fftw_free(y);
  return c;
}

}  // namespace frwt::detail
