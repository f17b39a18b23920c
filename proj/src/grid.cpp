#include "frwt/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace frwt {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGrid: return "invalid-grid";
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::OrderMismatch: return "order-mismatch";
    case ErrorKind::InvalidSignal: return "invalid-signal";
    case ErrorKind::ZeroScale: return "zero-scale";
    case ErrorKind::NotAWavelet: return "not-a-wavelet";
    case ErrorKind::Inadmissible: return "inadmissible";
    case ErrorKind::DegeneratePair: return "degenerate-pair";
    case ErrorKind::UnknownWavelet: return "catalog";
    case ErrorKind::InvalidMollifier: return "invalid-mollifier";
    case ErrorKind::InvalidFamily: return "invalid-family";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::Format: return "format";
  }
  return "unknown";
}

UniformGrid::UniformGrid(double t_min, double step, std::size_t count)
    : t_min_(t_min), t_max_(t_min + static_cast<double>(count - 1) * step), step_(step), count_(count) {
  if (count < 2 || !(step > 0.0) || !std::isfinite(t_min) || !std::isfinite(t_max_)) {
    std::ostringstream msg;
    msg << "invalid grid: t_min=" << t_min << " step=" << step << " count=" << count;
    throw Error(ErrorKind::InvalidGrid, msg.str());
  }
}

UniformGrid UniformGrid::span(double t_min, double t_max, std::size_t count) {
  if (count < 2 || !(t_max > t_min) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    std::ostringstream msg;
    msg << "invalid grid: [" << t_min << ", " << t_max << "] with " << count << " nodes";
    throw Error(ErrorKind::InvalidGrid, msg.str());
  }
  UniformGrid g(t_min, (t_max - t_min) / static_cast<double>(count - 1), count);
  g.t_max_ = t_max;
  return g;
}

bool UniformGrid::same_step(const UniformGrid& other) const noexcept {
  return std::abs(step_ - other.step_) <= 1e-9 * step_;
}

bool UniformGrid::same_as(const UniformGrid& other) const noexcept {
  return count_ == other.count_ && same_step(other) &&
         std::abs(t_min_ - other.t_min_) <= 1e-9 * step_;
}

std::size_t nearest_node(const UniformGrid& grid, double x) noexcept {
  const double u = std::round(grid.position(x));
  if (u <= 0.0) return 0;
  return std::min(grid.count() - 1, static_cast<std::size_t>(u));
}

ThetaOrder::ThetaOrder(double theta) : theta_(theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    std::ostringstream msg;
    msg << "theta must lie in (0,1], got " << theta;
    throw Error(ErrorKind::InvalidOrder, msg.str());
  }
}

SampledSignal::SampledSignal(UniformGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count()) {
    std::ostringstream msg;
    msg << "signal has " << values_.size() << " samples for a grid of " << grid_.count() << " nodes";
    throw Error(ErrorKind::InvalidSignal, msg.str());
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorKind::InvalidSignal, "signal contains a non-finite sample");
  }
}

SampledSignal SampledSignal::zeros(const UniformGrid& grid) {
  return SampledSignal(grid, std::vector<Complex>(grid.count()));
}

SampledSignal SampledSignal::from_function(const UniformGrid& grid,
                                           const std::function<Complex(double)>& fn) {
  std::vector<Complex> v(grid.count());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = fn(grid.node(k));
  return SampledSignal(grid, std::move(v));
}

Complex SampledSignal::at(double x) const noexcept {
  const double u = grid_.position(x);
  const double last = static_cast<double>(values_.size() - 1);
  if (!(u >= 0.0 && u <= last)) return {};
  const auto k = static_cast<std::size_t>(u);
  if (k + 1 >= values_.size()) return values_.back();
  const double tau = u - static_cast<double>(k);
  return values_[k] + tau * (values_[k + 1] - values_[k]);
}

bool SampledSignal::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const Complex& v) { return v == Complex{}; });
}

namespace {

void require_same_grid(const SampledSignal& f, const SampledSignal& g, const char* op) {
  if (!f.grid().same_as(g.grid()))
    throw Error(ErrorKind::GridMismatch, std::string(op) + ": signals live on different grids");
}

void require_same_step(const SampledSignal& f, const SampledSignal& g, const char* op) {
  if (!f.grid().same_step(g.grid()))
    throw Error(ErrorKind::GridMismatch, std::string(op) + ": grid steps differ");
}

template <class Op>
SampledSignal pointwise(const SampledSignal& f, const SampledSignal& g, Op op) {
  require_same_grid(f, g, "pointwise arithmetic");
  std::vector<Complex> v(f.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = op(f[k], g[k]);
  return SampledSignal(f.grid(), std::move(v));
}

}  // namespace

SampledSignal operator+(const SampledSignal& f, const SampledSignal& g) {
  return pointwise(f, g, std::plus<>{});
}

SampledSignal operator-(const SampledSignal& f, const SampledSignal& g) {
  return pointwise(f, g, std::minus<>{});
}

SampledSignal operator*(Complex c, const SampledSignal& f) {
  std::vector<Complex> v(f.values().begin(), f.values().end());
  for (auto& x : v) x *= c;
  return SampledSignal(f.grid(), std::move(v));
}

Complex integrate(const UniformGrid& grid, std::span<const Complex> values) {
  const std::size_t n = values.size();
  Complex sum = 0.5 * values[0];
  for (std::size_t k = 1; k + 1 < n; ++k) sum += values[k];
  sum += 0.5 * values[n - 1];
  return sum * grid.step();
}

double integrate(const UniformGrid& grid, std::span<const double> values) {
  const std::size_t n = values.size();
  double sum = 0.5 * values[0];
  for (std::size_t k = 1; k + 1 < n; ++k) sum += values[k];
  sum += 0.5 * values[n - 1];
  return sum * grid.step();
}

Complex integrate(const SampledSignal& f) { return integrate(f.grid(), f.values()); }

Complex inner_product(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f, g, "inner_product");
  std::vector<Complex> prod(f.size());
  for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = f[k] * std::conj(g[k]);
  return integrate(f.grid(), prod);
}

double norm(const SampledSignal& f, Norm p) {
  std::vector<double> mag(f.size());
  for (std::size_t k = 0; k < mag.size(); ++k) mag[k] = std::abs(f[k]);
  switch (p) {
    case Norm::Sup: return *std::max_element(mag.begin(), mag.end());
    case Norm::L1: return integrate(f.grid(), mag);
    case Norm::L2:
      for (auto& m : mag) m *= m;
      return std::sqrt(integrate(f.grid(), mag));
  }
  return 0.0;
}

SampledSignal convolve(const SampledSignal& f, const SampledSignal& g) {
  return convolve(f, g, f.grid());
}

SampledSignal convolve(const SampledSignal& f, const SampledSignal& g, const UniformGrid& out) {
  require_same_step(f, g, "convolve");
  const UniformGrid& fg = f.grid();
  std::vector<Complex> v(out.count());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = out.node(i);
    Complex acc{};
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] == Complex{}) continue;
      acc += fg.weight(k) * f[k] * g.at(x - fg.node(k));
    }
    v[i] = acc;
  }
  return SampledSignal(out, std::move(v));
}

SampledSignal correlate(const SampledSignal& f, const SampledSignal& g) {
  return correlate(f, g, f.grid());
}

SampledSignal correlate(const SampledSignal& f, const SampledSignal& g, const UniformGrid& out) {
  require_same_step(f, g, "correlate");
  const UniformGrid& fg = f.grid();
  std::vector<Complex> v(out.count());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = out.node(i);
    Complex acc{};
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] == Complex{}) continue;
      acc += fg.weight(k) * std::conj(f[k]) * g.at(x + fg.node(k));
    }
    v[i] = acc;
  }
  return SampledSignal(out, std::move(v));
}

double time_dilation(double a, ThetaOrder theta) {
  if (a == 0.0) throw Error(ErrorKind::ZeroScale, "scale a must be non-zero");
  return std::copysign(std::pow(std::abs(a), theta.inverse()), a);
}

SampledSignal dilate_translate(const SampledSignal& psi, double a, double b, ThetaOrder theta) {
  const double s = time_dilation(a, theta);
  const double amp = std::pow(std::abs(a), -0.5 * theta.inverse());
  const UniformGrid& g = psi.grid();
  std::vector<Complex> v(g.count());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = amp * psi.at((g.node(k) - b) / s);
  return SampledSignal(g, std::move(v));
}

}  // namespace frwt
