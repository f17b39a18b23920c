#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frwt/cfrwt.hpp"
#include "frwt/grid.hpp"
#include "frwt/wavelet.hpp"

namespace frwt {

/// eta and a finite set of dilations t_j; eta_t(x) = eta(x/t)/t.
class MollifierFamily {
 public:
  /// Throws InvalidMollifier when int eta = 0 or the dilations are not
  /// strictly increasing and positive.
  MollifierFamily(SampledSignal eta, std::vector<double> dilations, std::string description = "custom");

  /// Unit-mass Gaussian on [-8, 8] (1601 nodes), `count` log-spaced
  /// dilations in [t_min, t_max]. Defaults: 33 in [2^-6, 2^6].
  static MollifierFamily gaussian(std::size_t count = 33, double t_min = 1.0 / 64.0, double t_max = 64.0);

  const SampledSignal& eta() const noexcept { return eta_; }
  const std::vector<double>& dilations() const noexcept { return dilations_; }
  const std::string& description() const noexcept { return description_; }

 private:
  SampledSignal eta_;
  std::vector<double> dilations_;
  std::string description_;
};

/// Ball centers, radii and the Morrey exponent nu in [0, 1].
class BallFamily {
 public:
  BallFamily(std::vector<double> centers, std::vector<double> radii, double nu);

  /// Centers at every node, `radii` log-spaced radii in [step, span].
  static BallFamily for_grid(const UniformGrid& grid, double nu, std::size_t radii = 32);

  const std::vector<double>& centers() const noexcept { return centers_; }
  const std::vector<double>& radii() const noexcept { return radii_; }
  double nu() const noexcept { return nu_; }

 private:
  std::vector<double> centers_;
  std::vector<double> radii_;
  double nu_;
};

/// (f * eta_t)(x) at every node of f's grid.
std::vector<Complex> mollify(const SampledSignal& f, const SampledSignal& eta, double t);

/// int max_j |(f * eta_{t_j})(x)| dx over f's grid. A lower estimate of the
/// H^1 norm, monotone in the dilation set.
double hardy_norm(const SampledSignal& f, const MollifierFamily& M);

/// max over the family of r^{-nu} int_{B(x,r)} |f|, with |f| the linear
/// interpolant of the sample magnitudes and balls clipped to the grid span.
double morrey_norm(const SampledSignal& f, const BallFamily& B);

/// Direct transform divided by sqrt(C_psi).
Scalogram normalized_cfrwt(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid);

struct BoundRow {
  std::string check;  // l1_lemma | l1loc_lemma | boundedness | growth | distance
  double a = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

struct BoundReport {
  std::string theorem;
  double theta = 1.0;
  double slack = 1.0;
  std::string family;
  std::vector<BoundRow> rows;

  bool all_pass() const noexcept;
  void add(std::string check, double a, double lhs, double rhs);
};

/// Translation grid used for the row (L f)(., a): the effective support of
/// f widened by s times the effective support of each wavelet.
UniformGrid report_translation_grid(const SampledSignal& f, const std::vector<const FractionalWavelet*>& wavelets,
                                    double a);

/// Checks per scale: L1 lemma, H^1 boundedness, growth, and the distance
/// bound when g is given (slack 1.05).
BoundReport hardy_bound_report(const SampledSignal& f, const std::optional<SampledSignal>& g,
                               const FractionalWavelet& phi, const FractionalWavelet& psi,
                               const std::vector<double>& scales, const MollifierFamily& M);

/// Morrey counterpart (slack 1.10). Both wavelets must be compactly
/// supported; otherwise HypothesisViolation.
BoundReport morrey_bound_report(const SampledSignal& f, const std::optional<SampledSignal>& g,
                                const FractionalWavelet& phi, const FractionalWavelet& psi,
                                const std::vector<double>& scales, const BallFamily& B);

constexpr double kHardySlack = 1.05;
constexpr double kMorreySlack = 1.10;

}  // namespace frwt
