#pragma once

#include <memory>
#include <span>
#include <vector>

#include "frwt/grid.hpp"

namespace frwt {

/// Samples of the theta-order transform on a xi grid.
class FrSpectrum {
 public:
  FrSpectrum(UniformGrid xi_grid, std::vector<Complex> values, ThetaOrder theta);
  static FrSpectrum zeros(const UniformGrid& xi_grid, ThetaOrder theta);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  ThetaOrder theta() const noexcept { return theta_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t k) const { return values_[k]; }

  /// Linear interpolation, zero outside the grid span.
  Complex at(double xi) const noexcept;

 private:
  UniformGrid grid_;
  std::vector<Complex> values_;
  ThetaOrder theta_;
};

/// omega(xi) = sgn(xi) |xi|^(1/theta), with sgn(0) = 0.
double warp_frequency(double xi, ThetaOrder theta) noexcept;

/// Trapezoid value of the classical transform int e^{-i omega t} f(t) dt
/// at arbitrary omega. Built from one zero-padded FFT; off-node frequencies
/// use 6-point Lagrange interpolation. Frequencies beyond the Nyquist limit
/// pi/step of the signal grid evaluate to 0.
class ClassicalSpectrum {
 public:
  explicit ClassicalSpectrum(const SampledSignal& f);

  Complex operator()(double omega) const noexcept;
  double nyquist() const noexcept { return nyquist_; }

 private:
  std::vector<Complex> samples_;  // Z at m = -half-pad .. half+pad, centered reference
  std::ptrdiff_t offset_ = 0;
  double d_omega_ = 0.0;
  double t_center_ = 0.0;
  double nyquist_ = 0.0;
};

/// Fast path: classical spectrum sampled at warped frequencies.
FrSpectrum frft_forward(const SampledSignal& f, ThetaOrder theta, const UniformGrid& xi_grid);
FrSpectrum frft_forward(const ClassicalSpectrum& spec, ThetaOrder theta, const UniformGrid& xi_grid);

/// Reference path: trapezoid quadrature of the defining integral at each node.
FrSpectrum frft_forward_direct(const SampledSignal& f, ThetaOrder theta, const UniformGrid& xi_grid);
Complex frft_at(const SampledSignal& f, ThetaOrder theta, double xi);

/// f(t) = 1/(2 pi theta) int e^{i omega(xi) t} F(xi) |xi|^{1/theta-1} dxi on t_grid.
SampledSignal frft_inverse(const FrSpectrum& F, const UniformGrid& t_grid);

/// xi -> |a|^{1/(2 theta)} e^{-i omega(xi) b} Psi(a xi) on Psi's grid.
FrSpectrum daughter_spectrum(const FrSpectrum& Psi, double a, double b);

/// Default xi grid for signals on t_grid: symmetric, even node count (so no
/// node sits at xi = 0), covering the warped Nyquist band and fine enough to
/// resolve the phase e^{-i omega b} for |b| up to `extent`.
UniformGrid spectral_grid(const UniformGrid& t_grid, ThetaOrder theta, double extent);

/// Leading trapezoid error of int |xi|^alpha g(xi) dxi caused by the cusp of
/// |xi|^alpha at xi = 0 (generalized Euler-Maclaurin): the trapezoid sum
/// exceeds the integral by coeff * g(0). g(0) is read off the two nodes
/// around 0 by linear interpolation. Inactive when alpha = 0 or when 0 is
/// not strictly inside the grid.
struct CuspCorrection {
  bool active = false;
  double coeff = 0.0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  double tau = 0.0;

  Complex g0(std::span<const Complex> g) const noexcept {
    return (1.0 - tau) * g[lo] + tau * g[hi];
  }
  Complex operator()(std::span<const Complex> g) const noexcept {
    return active ? coeff * g0(g) : Complex{};
  }
};

CuspCorrection cusp_correction(const UniformGrid& xi_grid, double alpha);

/// int |xi|^alpha g(xi) dxi over the grid span for alpha >= 0: trapezoid
/// rule minus the cusp term above.
Complex integrate_spectral(const UniformGrid& xi_grid, std::span<const Complex> g, double alpha);

/// Hurwitz zeta(s, q) for s != 1, q > 0, including negative s.
double hurwitz_zeta(double s, double q);

}  // namespace frwt
