#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frwt/frft.hpp"
#include "frwt/grid.hpp"
#include "frwt/wavelet.hpp"

namespace frwt {

/// Translations b (uniform) times signed scales a, with per-scale weights
/// of the measure da / |a|^{1/theta + 1}: trapezoid in log|a| on each sign
/// branch, w_k = du_k |a_k|^{-1/theta}. A branch holding a single scale gets
/// unit log-width.
class ScaleTranslationGrid {
 public:
  ScaleTranslationGrid(UniformGrid b_grid, std::vector<double> scales, ThetaOrder theta);

  /// per_sign log-spaced scales in [a_min, a_max]; the negative branch
  /// (listed first, most negative first) is included unless positive_only.
  static ScaleTranslationGrid log_spaced(UniformGrid b_grid, double a_min, double a_max, std::size_t per_sign,
                                         ThetaOrder theta, bool positive_only = false);

  const UniformGrid& b_grid() const noexcept { return b_grid_; }
  std::span<const double> scales() const noexcept { return scales_; }
  std::span<const double> scale_weights() const noexcept { return weights_; }
  ThetaOrder theta() const noexcept { return theta_; }
  std::size_t scale_count() const noexcept { return scales_.size(); }
  std::size_t translation_count() const noexcept { return b_grid_.count(); }

  bool same_as(const ScaleTranslationGrid& other) const noexcept;

 private:
  UniformGrid b_grid_;
  std::vector<double> scales_;
  std::vector<double> weights_;
  ThetaOrder theta_;
};

inline constexpr double kDefaultScaleMin = 0.125;
inline constexpr double kDefaultScaleMax = 8.0;
inline constexpr std::size_t kDefaultScalesPerSign = 48;

/// Twice the span of the signal grid, centered on it, at the same step.
UniformGrid default_translation_grid(const UniformGrid& signal_grid);

/// W(b, a) sampled on a ScaleTranslationGrid, stored scale-major.
/// `normalization` is the factor already applied to the values (1/sqrt(C)
/// for the normalized operator).
class Scalogram {
 public:
  Scalogram(ScaleTranslationGrid grid, std::vector<Complex> values, std::string wavelet_id,
            bool normalized = false, double normalization = 1.0);

  const ScaleTranslationGrid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  const std::string& wavelet_id() const noexcept { return wavelet_id_; }
  bool normalized() const noexcept { return normalized_; }
  double normalization() const noexcept { return normalization_; }

  const Complex& at(std::size_t scale, std::size_t translation) const {
    return values_[scale * grid_.translation_count() + translation];
  }
  std::span<const Complex> row(std::size_t scale) const {
    return std::span<const Complex>(values_).subspan(scale * grid_.translation_count(), grid_.translation_count());
  }
  /// One scale as a signal over the translation grid.
  SampledSignal row_signal(std::size_t scale) const;

 private:
  ScaleTranslationGrid grid_;
  std::vector<Complex> values_;
  std::string wavelet_id_;
  bool normalized_;
  double normalization_;
};

/// Direct quadrature W(b,a) = sum_k w_k f(t_k) conj(psi_{a,b,theta}(t_k)) over f's grid.
Scalogram cfrwt_forward(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid);

/// W(b,a) = 1/(2 pi theta) int |xi|^{1/theta-1} F(xi) conj(D_{a,b}(xi)) dxi with
/// D the daughter spectrum. The wavelet overload evaluates Psi(a xi) from the
/// FFT samples; the FrSpectrum overload interpolates Psi linearly.
Scalogram cfrwt_forward_spectral(const FrSpectrum& F, const FractionalWavelet& psi, const ScaleTranslationGrid& grid);
Scalogram cfrwt_forward_spectral(const FrSpectrum& F, const FrSpectrum& Psi, const ScaleTranslationGrid& grid,
                                 const std::string& wavelet_id);

/// xi grid used by the spectral path for f on the given translations.
UniformGrid transform_xi_grid(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid);

/// Spectral path with F computed on transform_xi_grid.
Scalogram cfrwt_transform(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid);

/// int int W1 conj(W2) db da / |a|^{1/theta+1} by the grid weights.
Complex orthogonality_pairing(const Scalogram& s1, const Scalogram& s2);

/// Share of the measure-weighted energy int int |W|^2 db da / |a|^{1/theta+1}
/// sitting in the outer `edge` fraction of the translation range (both ends).
/// A large value means the b window truncates the transform.
double translation_edge_mass(const Scalogram& s, double edge = 0.0625);

/// True when |C| is below 1e-6 sqrt(C_phi C_psi): the pair cannot be used
/// for reconstruction.
bool is_degenerate(const CrossAdmissibility& c, const FractionalWavelet& phi, const FractionalWavelet& psi);

/// f(t) = 1/C int int psi_{a,b,theta}(t) W(b,a) db da / |a|^{1/theta+1}; any
/// normalization stored in the scalogram is undone first. Throws
/// DegeneratePair for C = 0.
SampledSignal reconstruct(const Scalogram& s, const FractionalWavelet& psi, Complex C, const UniformGrid& t_grid);

/// K(b0,a0; b,a) = <psi_{a,b}, phi_{a0,b0}> / C. The inner product is the
/// exact integral of the two piecewise-linear daughters.
Complex reproducing_kernel(const FractionalWavelet& phi, const FractionalWavelet& psi, Complex C,
                           std::pair<double, double> p0, std::pair<double, double> p);

/// Relative L2 distance between F and its kernel projection at every
/// `stride`-th translation and scale. The projection is evaluated in the
/// spectral domain: the b-sums become FrFT-like sums per scale.
double range_membership(const Scalogram& F, const FractionalWavelet& phi, const FractionalWavelet& psi, Complex C,
                        std::size_t stride = 4);

/// Projected values at the subsampled points (scale-major), for inspection.
struct RangeProjection {
  std::vector<std::size_t> scale_index;
  std::vector<std::size_t> translation_index;
  std::vector<Complex> original;
  std::vector<Complex> projected;
};
RangeProjection range_projection(const Scalogram& F, const FractionalWavelet& phi, const FractionalWavelet& psi,
                                 Complex C, std::size_t stride = 4);

/// Right-hand side (f * W_psi g(., a))(b) (Star) or (f o W_psi g(., a))(b)
/// (Circ). f and the translation grid must share the step.
Scalogram transform_of_combination(const SampledSignal& f, const SampledSignal& g, const FractionalWavelet& psi,
                                   CombineMode mode, const ScaleTranslationGrid& grid);

/// Right-hand side of the transform with wavelet f * psi (Star) or f o psi
/// (Circ): |a|^{-1/theta} (f(./s) o W_psi g(., a))(b), resp. with *, where
/// s = sgn(a)|a|^{1/theta}.
Scalogram transform_with_combined_wavelet(const SampledSignal& f, const FractionalWavelet& psi, const SampledSignal& g,
                                          CombineMode mode, const ScaleTranslationGrid& grid);

/// The combined wavelet f * psi (Star) or f o psi (Circ) on psi's grid.
FractionalWavelet combined_wavelet(const SampledSignal& f, const FractionalWavelet& psi, CombineMode mode);

/// xi -> |xi|^{1/theta-1} F_h(xi) conj(F_chi(a xi)).
struct WeightedSpectralProfile {
  UniformGrid xi_grid;
  std::vector<Complex> values;
};
WeightedSpectralProfile weighted_profile(const FrSpectrum& H, const FractionalWavelet& chi, double a);

struct WeightedInnerProduct {
  Complex lhs;        // int |b|^{1/theta-1} W_phi f conj(W_psi g) db
  Complex rhs;        // |a|^{1/theta} / (4 pi^2 theta^2) <P, Q>
  Complex plain_lhs;  // int W_phi f conj(W_psi g) db
  Complex plain_rhs;  // |a|^{1/theta} / (2 pi theta) int |xi|^{1-1/theta} P conj(Q) dxi
};
WeightedInnerProduct weighted_inner_product(const SampledSignal& f, const SampledSignal& g,
                                            const FractionalWavelet& phi, const FractionalWavelet& psi, double a,
                                            const UniformGrid& b_grid);

}  // namespace frwt
