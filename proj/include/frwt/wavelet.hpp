#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "frwt/frft.hpp"
#include "frwt/grid.hpp"

namespace frwt {

struct Admissibility {
  double value = 0.0;
  bool divergent = false;
};

/// C = int |F_theta psi(xi)|^2 / |xi| dxi on a half-step xi grid (default
/// spectral_grid of psi). `divergent` is set when the integral over dyadic
/// shells eps/2 < |xi| < eps does not shrink as eps -> 0: after ten halvings
/// the last shell still exceeds 5% of the first. Shells carrying less than
/// 1e-10 of the total are treated as converged.
Admissibility admissibility_constant(const SampledSignal& psi, ThetaOrder theta);
Admissibility admissibility_constant(const SampledSignal& psi, ThetaOrder theta, const UniformGrid& xi_grid);

/// An admissible signal together with its cached spectrum and constants.
class FractionalWavelet {
 public:
  /// Throws NotAWavelet for an identically zero signal and Inadmissible
  /// when the admissibility integral diverges.
  static FractionalWavelet from_signal(std::string id, SampledSignal signal, ThetaOrder theta);
  static FractionalWavelet from_signal(std::string id, SampledSignal signal, ThetaOrder theta,
                                       const UniformGrid& xi_grid);

  const std::string& id() const noexcept { return id_; }
  const SampledSignal& signal() const noexcept { return signal_; }
  ThetaOrder theta() const noexcept { return theta_; }
  const FrSpectrum& spectrum() const noexcept { return spectrum_; }
  double admissibility() const noexcept { return admissibility_; }
  double l1_norm() const noexcept { return l1_; }
  double l2_norm() const noexcept { return l2_; }
  bool compact_support() const noexcept { return support_.has_value(); }
  std::optional<std::pair<double, double>> support() const noexcept { return support_; }

  /// Spectrum value at any xi from the classical FFT samples (no linear
  /// interpolation on the cached grid).
  Complex spectrum_at(double xi) const noexcept;
  const ClassicalSpectrum& classical() const noexcept { return *classical_; }

  /// Copy with the compact-support record replaced (nullopt clears it).
  FractionalWavelet with_support(std::optional<std::pair<double, double>> interval) const;

 private:
  FractionalWavelet(std::string id, SampledSignal signal, ThetaOrder theta,
                    std::shared_ptr<const ClassicalSpectrum> classical, FrSpectrum spectrum);

  std::string id_;
  SampledSignal signal_;
  ThetaOrder theta_;
  std::shared_ptr<const ClassicalSpectrum> classical_;
  FrSpectrum spectrum_;
  double admissibility_ = 0.0;
  double l1_ = 0.0;
  double l2_ = 0.0;
  std::optional<std::pair<double, double>> support_;
};

struct CrossAdmissibility {
  Complex value;
  double absolute_integral = 0.0;
  bool finite = true;
};

/// C_{phi,psi} = int conj(Phi) Psi / |xi| dxi and int |Phi||Psi| / |xi| dxi
/// on phi's spectrum grid. The wavelets must share theta and xi grid.
CrossAdmissibility cross_admissibility(const FractionalWavelet& phi, const FractionalWavelet& psi);

enum class CombineMode { Star, Circ };

/// psi * phi (Star) or psi o phi (Circ) on psi's grid, validated as a wavelet.
FractionalWavelet combine_wavelets(const FractionalWavelet& psi, const SampledSignal& phi, CombineMode mode);

/// mexican_hat, haar, dog, gauss_deriv1. Throws UnknownWavelet otherwise.
/// [-16, 16] at step min(1/64, signal step), rounded down to a power of two.
UniformGrid default_wavelet_grid(const UniformGrid& signal_grid);

FractionalWavelet catalog(const std::string& name, const UniformGrid& grid, ThetaOrder theta);
const std::vector<std::string>& catalog_names();

}  // namespace frwt
