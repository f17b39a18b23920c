#include "frwt/wavelet.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace frwt {

namespace {

constexpr int kShellRefinements = 10;
constexpr double kShellGrowth = 0.05;
constexpr int kShellPanels = 16;
// Shells below this fraction of the whole integral are roundoff, not signal.
constexpr double kShellFloor = 1e-10;

// int over eps/2 < |xi| < eps of m(xi)/|xi|, in log-xi with Simpson's rule.
double shell(const std::function<double(double)>& m, double eps) {
  const double u0 = std::log(0.5 * eps);
  const double du = std::log(2.0) / kShellPanels;
  double acc = 0.0;
  for (int i = 0; i <= kShellPanels; ++i) {
    const double xi = std::exp(u0 + i * du);
    const double w = (i == 0 || i == kShellPanels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * (m(xi) + m(-xi));
  }
  return acc * du / 3.0;
}

bool shells_diverge(const std::function<double(double)>& m, double eps0, double total) {
  const double first = shell(m, eps0);
  if (!(first > kShellFloor * total)) return false;
  const double last = shell(m, std::ldexp(eps0, -kShellRefinements));
  return last > kShellGrowth * first;
}

SampledSignal sample(const UniformGrid& grid, double (*fn)(double)) {
  return SampledSignal::from_function(grid, [fn](double t) { return Complex(fn(t)); });
}

double mexican_hat(double t) { return (1.0 - t * t) * std::exp(-0.5 * t * t); }
double dog(double t) { return std::exp(-0.5 * t * t) - 0.5 * std::exp(-0.125 * t * t); }
double gauss_deriv1(double t) { return -t * std::exp(-0.5 * t * t); }
double haar(double t) {
  if (t < 0.0 || t > 1.0) return 0.0;
  if (t == 0.0) return 0.5;
  if (t == 1.0) return -0.5;
  if (t < 0.5) return 1.0;
  if (t == 0.5) return 0.0;
  return -1.0;
}

}  // namespace

Admissibility admissibility_constant(const SampledSignal& psi, ThetaOrder theta, const UniformGrid& xi_grid) {
  if (psi.is_zero()) throw Error(ErrorKind::NotAWavelet, "a fractional wavelet must be a non-zero function");
  const ClassicalSpectrum spec(psi);
  const auto mag2 = [&](double xi) { return std::norm(spec(warp_frequency(xi, theta))); };
  Admissibility out;
  for (std::size_t k = 0; k < xi_grid.count(); ++k) {
    const double xi = xi_grid.node(k);
    if (xi == 0.0) continue;
    out.value += xi_grid.weight(k) * mag2(xi) / std::abs(xi);
  }
  out.divergent = shells_diverge(mag2, 0.5 * xi_grid.step(), out.value);
  return out;
}

Admissibility admissibility_constant(const SampledSignal& psi, ThetaOrder theta) {
  return admissibility_constant(psi, theta, spectral_grid(psi.grid(), theta, psi.grid().length()));
}

FractionalWavelet::FractionalWavelet(std::string id, SampledSignal signal, ThetaOrder theta,
                                     std::shared_ptr<const ClassicalSpectrum> classical, FrSpectrum spectrum)
    : id_(std::move(id)),
      signal_(std::move(signal)),
      theta_(theta),
      classical_(std::move(classical)),
      spectrum_(std::move(spectrum)) {}

FractionalWavelet FractionalWavelet::from_signal(std::string id, SampledSignal signal, ThetaOrder theta) {
  const UniformGrid xi = spectral_grid(signal.grid(), theta, signal.grid().length());
  return from_signal(std::move(id), std::move(signal), theta, xi);
}

FractionalWavelet FractionalWavelet::from_signal(std::string id, SampledSignal signal, ThetaOrder theta,
                                                 const UniformGrid& xi_grid) {
  if (signal.is_zero()) throw Error(ErrorKind::NotAWavelet, "a fractional wavelet must be a non-zero function");
  const Admissibility adm = admissibility_constant(signal, theta, xi_grid);
  if (adm.divergent || !(adm.value > 0.0) || !std::isfinite(adm.value)) {
    throw Error(ErrorKind::Inadmissible,
                "wavelet '" + id + "' is not admissible: the integral of |F psi|^2/|xi| diverges near xi = 0"
                " (non-zero mean?)");
  }
  auto classical = std::make_shared<const ClassicalSpectrum>(signal);
  FrSpectrum spectrum = frft_forward(*classical, theta, xi_grid);
  FractionalWavelet w(std::move(id), std::move(signal), theta, std::move(classical), std::move(spectrum));
  w.admissibility_ = adm.value;
  w.l1_ = norm(w.signal_, Norm::L1);
  w.l2_ = norm(w.signal_, Norm::L2);
  const auto values = w.signal_.values();
  if (values.front() == Complex{} && values.back() == Complex{}) {
    const UniformGrid& g = w.signal_.grid();
    std::size_t first = 0;
    while (values[first] == Complex{}) ++first;
    std::size_t last = values.size() - 1;
    while (values[last] == Complex{}) --last;
    w.support_ = std::make_pair(g.node(first - 1), g.node(last + 1));
  }
  return w;
}

Complex FractionalWavelet::spectrum_at(double xi) const noexcept {
  return (*classical_)(warp_frequency(xi, theta_));
}

FractionalWavelet FractionalWavelet::with_support(std::optional<std::pair<double, double>> interval) const {
  FractionalWavelet w = *this;
  w.support_ = interval;
  return w;
}

CrossAdmissibility cross_admissibility(const FractionalWavelet& phi, const FractionalWavelet& psi) {
  if (!(phi.theta() == psi.theta()))
    throw Error(ErrorKind::OrderMismatch, "cross_admissibility: wavelets have different theta");
  const UniformGrid& xg = phi.spectrum().grid();
  if (!xg.same_as(psi.spectrum().grid()))
    throw Error(ErrorKind::GridMismatch, "cross_admissibility: wavelets use different xi grids");
  CrossAdmissibility out;
  for (std::size_t k = 0; k < xg.count(); ++k) {
    const double xi = xg.node(k);
    if (xi == 0.0) continue;
    const Complex prod = std::conj(phi.spectrum()[k]) * psi.spectrum()[k];
    const double w = xg.weight(k) / std::abs(xi);
    out.value += w * prod;
    out.absolute_integral += w * std::abs(prod);
  }
  const auto mag = [&](double xi) { return std::abs(phi.spectrum_at(xi)) * std::abs(psi.spectrum_at(xi)); };
  out.finite = !shells_diverge(mag, 0.5 * xg.step(), out.absolute_integral);
  return out;
}

FractionalWavelet combine_wavelets(const FractionalWavelet& psi, const SampledSignal& phi, CombineMode mode) {
  if (phi.is_zero()) throw Error(ErrorKind::NotAWavelet, "combine_wavelets: phi is identically zero");
  const UniformGrid& g = psi.signal().grid();
  SampledSignal combined = mode == CombineMode::Star ? convolve(psi.signal(), phi, g) : correlate(psi.signal(), phi, g);
  const std::string id = psi.id() + (mode == CombineMode::Star ? "*" : "o") + "phi";
  return FractionalWavelet::from_signal(id, std::move(combined), psi.theta(), psi.spectrum().grid());
}

UniformGrid default_wavelet_grid(const UniformGrid& signal_grid) {
  double step = 1.0 / 64.0;
  while (step > signal_grid.step()) step *= 0.5;
  return UniformGrid::span(-16.0, 16.0, static_cast<std::size_t>(std::lround(32.0 / step)) + 1);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"mexican_hat", "haar", "dog", "gauss_deriv1"};
  return names;
}

FractionalWavelet catalog(const std::string& name, const UniformGrid& grid, ThetaOrder theta) {
  // Gaussian tails may underflow to exact zeros on wide grids; only haar is compact.
  if (name == "mexican_hat")
    return FractionalWavelet::from_signal(name, sample(grid, mexican_hat), theta).with_support(std::nullopt);
  if (name == "dog") return FractionalWavelet::from_signal(name, sample(grid, dog), theta).with_support(std::nullopt);
  if (name == "gauss_deriv1")
    return FractionalWavelet::from_signal(name, sample(grid, gauss_deriv1), theta).with_support(std::nullopt);
  if (name == "haar") {
    return FractionalWavelet::from_signal(name, sample(grid, haar), theta).with_support(std::make_pair(0.0, 1.0));
  }
  throw Error(ErrorKind::UnknownWavelet, "unknown wavelet '" + name + "'");
}

}  // namespace frwt
