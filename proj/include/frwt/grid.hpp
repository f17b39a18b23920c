#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "frwt/error.hpp"

namespace frwt {

using Complex = std::complex<double>;

/// Uniform discretization t_min + k*step, k = 0..count-1, of a finite
/// window of the real line.
class UniformGrid {
 public:
  UniformGrid(double t_min, double step, std::size_t count);

  /// Grid spanning [t_min, t_max] with both end points as nodes.
  static UniformGrid span(double t_min, double t_max, std::size_t count);

  double t_min() const noexcept { return t_min_; }
  double t_max() const noexcept { return t_max_; }
  double step() const noexcept { return step_; }
  std::size_t count() const noexcept { return count_; }
  double length() const noexcept { return t_max_ - t_min_; }

  double node(std::size_t k) const noexcept {
    return k + 1 == count_ ? t_max_ : t_min_ + static_cast<double>(k) * step_;
  }

  /// Fractional index of x, i.e. (x - t_min)/step.
  double position(double x) const noexcept { return (x - t_min_) / step_; }

  /// Composite trapezoid weight of node k (step/2 at the ends).
  double weight(std::size_t k) const noexcept {
    return (k == 0 || k + 1 == count_) ? 0.5 * step_ : step_;
  }

  /// Same nodes up to a relative tolerance of 1e-9 of the step.
  bool same_as(const UniformGrid& other) const noexcept;
  bool same_step(const UniformGrid& other) const noexcept;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double t_min_;
  double t_max_;
  double step_;
  std::size_t count_;
};

/// Order of the fractional transform, restricted to (0, 1].
class ThetaOrder {
 public:
  explicit ThetaOrder(double theta);
  double value() const noexcept { return theta_; }
  double inverse() const noexcept { return 1.0 / theta_; }
  friend bool operator==(const ThetaOrder&, const ThetaOrder&) = default;

 private:
  double theta_;
};

/// Complex samples of a function on a uniform grid. Off-grid values are
/// obtained by linear interpolation and the function is zero outside the
/// grid span.
class SampledSignal {
 public:
  SampledSignal(UniformGrid grid, std::vector<Complex> values);
  static SampledSignal zeros(const UniformGrid& grid);
  static SampledSignal from_function(const UniformGrid& grid,
                                     const std::function<Complex(double)>& fn);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t k) const { return values_[k]; }

  Complex at(double x) const noexcept;
  bool is_zero() const noexcept;

 private:
  UniformGrid grid_;
  std::vector<Complex> values_;
};

SampledSignal operator+(const SampledSignal& f, const SampledSignal& g);
SampledSignal operator-(const SampledSignal& f, const SampledSignal& g);
SampledSignal operator*(Complex c, const SampledSignal& f);

enum class Norm { L1, L2, Sup };

/// Trapezoid rule over the grid span, summed left to right.
Complex integrate(const SampledSignal& f);
Complex integrate(const UniformGrid& grid, std::span<const Complex> values);
double integrate(const UniformGrid& grid, std::span<const double> values);

/// <f, g> = integral of f * conj(g). Both signals must share a grid.
Complex inner_product(const SampledSignal& f, const SampledSignal& g);

double norm(const SampledSignal& f, Norm p);

/// (f*g)(x) = integral f(u) g(x-u) du, evaluated on the nodes of `out`
/// (default: the grid of f). g is interpolated linearly.
SampledSignal convolve(const SampledSignal& f, const SampledSignal& g);
SampledSignal convolve(const SampledSignal& f, const SampledSignal& g, const UniformGrid& out);

/// (f o g)(x) = integral conj(f(u)) g(x+u) du.
SampledSignal correlate(const SampledSignal& f, const SampledSignal& g);
SampledSignal correlate(const SampledSignal& f, const SampledSignal& g, const UniformGrid& out);

/// sgn(a) |a|^(1/theta): the time dilation applied to a daughter wavelet.
double time_dilation(double a, ThetaOrder theta);

/// t -> |a|^(-1/(2 theta)) psi((t - b) / (sgn(a) |a|^(1/theta))) on psi's grid.
SampledSignal dilate_translate(const SampledSignal& psi, double a, double b, ThetaOrder theta);

/// Closest grid node index to x, clamped to the grid.
std::size_t nearest_node(const UniformGrid& grid, double x) noexcept;

}  // namespace frwt
