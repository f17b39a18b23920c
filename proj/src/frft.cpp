#include "frwt/frft.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "frwt/parallel.hpp"

namespace frwt {

namespace {

constexpr std::size_t kPhasorChunk = 256;
constexpr std::size_t kMinPad = 1024;
constexpr std::size_t kMaxPad = std::size_t{1} << 23;
constexpr std::ptrdiff_t kGuard = 3;

// 6-point Lagrange weights for nodes -2..3 at offset u in [0, 1).
std::array<double, 6> lagrange6(double u) noexcept {
  std::array<double, 6> w{};
  for (int j = 0; j < 6; ++j) {
    const double xj = j - 2;
    double num = 1.0;
    double den = 1.0;
    for (int m = 0; m < 6; ++m) {
      if (m == j) continue;
      const double xm = m - 2;
      num *= u - xm;
      den *= xj - xm;
    }
    w[j] = num / den;
  }
  return w;
}

const std::array<double, 12> kBernoulli2k = {
    1.0 / 6.0,      -1.0 / 30.0,         1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0,     7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0,  854513.0 / 138.0, -236364091.0 / 2730.0};

}  // namespace

FrSpectrum::FrSpectrum(UniformGrid xi_grid, std::vector<Complex> values, ThetaOrder theta)
    : grid_(xi_grid), values_(std::move(values)), theta_(theta) {
  if (values_.size() != grid_.count())
    throw Error(ErrorKind::InvalidSignal, "spectrum length does not match its xi grid");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorKind::InvalidSignal, "spectrum contains a non-finite value");
  }
}

FrSpectrum FrSpectrum::zeros(const UniformGrid& xi_grid, ThetaOrder theta) {
  return FrSpectrum(xi_grid, std::vector<Complex>(xi_grid.count()), theta);
}

Complex FrSpectrum::at(double xi) const noexcept {
  const double u = grid_.position(xi);
  const double last = static_cast<double>(values_.size() - 1);
  if (!(u >= 0.0 && u <= last)) return {};
  const auto k = static_cast<std::size_t>(u);
  if (k + 1 >= values_.size()) return values_.back();
  const double tau = u - static_cast<double>(k);
  return values_[k] + tau * (values_[k + 1] - values_[k]);
}

double warp_frequency(double xi, ThetaOrder theta) noexcept {
  if (xi == 0.0) return 0.0;
  if (theta.value() == 1.0) return xi;
  return std::copysign(std::pow(std::abs(xi), theta.inverse()), xi);
}

// The transform is split as Z = A + iB with A, B the spectra of the real and
// imaginary parts, each Hermitian, so only omega >= 0 is stored. Phases are
// taken about the grid center to keep the sampled function slowly varying.
ClassicalSpectrum::ClassicalSpectrum(const SampledSignal& f) {
  const UniformGrid& g = f.grid();
  const std::size_t n = g.count();
  const std::size_t M = std::min(kMaxPad, std::bit_ceil(std::max<std::size_t>(32 * n, kMinPad)));
  std::vector<double> re(n), im(n);
  bool has_imag = false;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = g.weight(k);
    re[k] = w * f[k].real();
    im[k] = w * f[k].imag();
    has_imag = has_imag || f[k].imag() != 0.0;
  }
  d_omega_ = 2.0 * std::numbers::pi / (static_cast<double>(M) * g.step());
  nyquist_ = std::numbers::pi / g.step();
  t_center_ = 0.5 * (g.t_min() + g.t_max());
  const double c = 0.5 * static_cast<double>(n - 1);

  const std::size_t half = M / 2;
  const auto raw_at = [M](const std::vector<Complex>& y, std::ptrdiff_t m) {
    std::ptrdiff_t r = m % static_cast<std::ptrdiff_t>(M);
    if (r < 0) r += static_cast<std::ptrdiff_t>(M);
    const auto ru = static_cast<std::size_t>(r);
    return ru < y.size() ? y[ru] : std::conj(y[M - ru]);
  };
  const std::vector<Complex> ya = detail::real_dft(re, M);
  const std::vector<Complex> yb = has_imag ? detail::real_dft(im, M) : std::vector<Complex>{};

  // Store A and B interleaved: samples_[2 i] = A_m, samples_[2 i + 1] = B_m, m = i - kGuard.
  offset_ = kGuard;
  const std::size_t count = half + 2 * kGuard + 1;
  samples_.assign(2 * count, Complex{});
  for (std::size_t i = 0; i < count; ++i) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(i) - kGuard;
    const double phase = static_cast<double>(m) * 2.0 * std::numbers::pi * c / static_cast<double>(M);
    const Complex rot(std::cos(phase), std::sin(phase));
    samples_[2 * i] = rot * raw_at(ya, m);
    if (has_imag) samples_[2 * i + 1] = rot * raw_at(yb, m);
  }
  // The integral at omega = 0 is kept exact and in left-to-right order.
  const Complex total = integrate(f);
  samples_[2 * kGuard] = total.real();
  samples_[2 * kGuard + 1] = total.imag();
}

Complex ClassicalSpectrum::operator()(double omega) const noexcept {
  const double mag = std::abs(omega);
  if (mag > nyquist_) return {};
  const double p = mag / d_omega_;
  const double base = std::floor(p);
  const double u = p - base;
  const auto i0 = static_cast<std::ptrdiff_t>(base) + offset_;
  Complex a{};
  Complex b{};
  if (u == 0.0) {
    a = samples_[2 * i0];
    b = samples_[2 * i0 + 1];
  } else {
    const auto w = lagrange6(u);
    for (int j = 0; j < 6; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i0 + j - 2);
      a += w[j] * samples_[2 * idx];
      b += w[j] * samples_[2 * idx + 1];
    }
  }
  if (omega < 0.0) {
    a = std::conj(a);
    b = std::conj(b);
  }
  const Complex z = a + Complex(0.0, 1.0) * b;
  if (omega == 0.0) return z;
  return z * std::exp(Complex(0.0, -omega * t_center_));
}

FrSpectrum frft_forward(const ClassicalSpectrum& spec, ThetaOrder theta, const UniformGrid& xi_grid) {
  std::vector<Complex> v(xi_grid.count());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = spec(warp_frequency(xi_grid.node(k), theta));
  return FrSpectrum(xi_grid, std::move(v), theta);
}

FrSpectrum frft_forward(const SampledSignal& f, ThetaOrder theta, const UniformGrid& xi_grid) {
  return frft_forward(ClassicalSpectrum(f), theta, xi_grid);
}

Complex frft_at(const SampledSignal& f, ThetaOrder theta, double xi) {
  const double omega = warp_frequency(xi, theta);
  const UniformGrid& g = f.grid();
  if (omega == 0.0) return integrate(f);
  Complex acc{};
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == Complex{}) continue;
    acc += g.weight(k) * f[k] * std::exp(Complex(0.0, -omega * g.node(k)));
  }
  return acc;
}

FrSpectrum frft_forward_direct(const SampledSignal& f, ThetaOrder theta, const UniformGrid& xi_grid) {
  std::vector<Complex> v(xi_grid.count());
  parallel_for(v.size(), [&](std::size_t k) { v[k] = frft_at(f, theta, xi_grid.node(k)); });
  return FrSpectrum(xi_grid, std::move(v), theta);
}

double hurwitz_zeta(double s, double q) {
  if (s == 1.0 || !(q > 0.0)) throw Error(ErrorKind::InvalidOrder, "hurwitz_zeta: requires s != 1 and q > 0");
  constexpr int kTerms = 16;
  double sum = 0.0;
  for (int n = 0; n < kTerms; ++n) sum += std::pow(q + n, -s);
  const double x = q + kTerms;
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);
  // Rising factorial s (s+1) ... (s+2k-2) over (2k)!.
  double rising = s;
  double fact = 2.0;
  for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
    const double term = kBernoulli2k[k - 1] / fact * rising * std::pow(x, -s - 2.0 * k + 1.0);
    sum += term;
    if (term == 0.0) break;
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return sum;
}

CuspCorrection cusp_correction(const UniformGrid& xi_grid, double alpha) {
  CuspCorrection c;
  if (alpha == 0.0 || !(xi_grid.t_min() < 0.0 && xi_grid.t_max() > 0.0)) return c;
  const double h = xi_grid.step();
  const double pos = xi_grid.position(0.0);
  std::size_t hi = static_cast<std::size_t>(std::floor(pos)) + 1;
  if (hi >= xi_grid.count()) return c;
  std::size_t lo = hi - 1;
  double d_plus = xi_grid.node(hi) / h;
  double d_minus = -xi_grid.node(lo) / h;
  if (xi_grid.node(lo) == 0.0) {
    d_minus = 1.0;
    d_plus = 1.0;
  }
  if (!(d_plus > 0.0) || !(d_minus > 0.0)) return c;
  c.active = true;
  c.lo = lo;
  c.hi = hi;
  c.tau = (0.0 - xi_grid.node(lo)) / (xi_grid.node(hi) - xi_grid.node(lo));
  c.coeff = (hurwitz_zeta(-alpha, std::min(d_plus, 1.0)) + hurwitz_zeta(-alpha, std::min(d_minus, 1.0))) *
            std::pow(h, alpha + 1.0);
  return c;
}

Complex integrate_spectral(const UniformGrid& xi_grid, std::span<const Complex> g, double alpha) {
  Complex acc{};
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double w = xi_grid.weight(k) * std::pow(std::abs(xi_grid.node(k)), alpha);
    acc += w * g[k];
  }
  return acc - cusp_correction(xi_grid, alpha)(g);
}

SampledSignal frft_inverse(const FrSpectrum& F, const UniformGrid& t_grid) {
  const ThetaOrder theta = F.theta();
  const UniformGrid& xg = F.grid();
  const double alpha = theta.inverse() - 1.0;
  const double scale = 1.0 / (2.0 * std::numbers::pi * theta.value());

  struct Term {
    double omega;
    Complex c;
  };
  std::vector<Term> terms;
  terms.reserve(F.size());
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (F[j] == Complex{}) continue;
    const double xi = xg.node(j);
    const double w = xg.weight(j) * std::pow(std::abs(xi), alpha);
    if (w == 0.0) continue;
    terms.push_back({warp_frequency(xi, theta), w * F[j]});
  }
  // g(0) = F(0) since the kernel is 1 at xi = 0, so the cusp term is the same for every t.
  const Complex cusp = cusp_correction(xg, alpha)(F.values());

  const std::size_t n = t_grid.count();
  std::vector<Complex> out(n);
  const std::size_t chunks = (n + kPhasorChunk - 1) / kPhasorChunk;
  const double h = t_grid.step();
  parallel_for(chunks, [&](std::size_t ci) {
    const std::size_t k0 = ci * kPhasorChunk;
    const std::size_t k1 = std::min(n, k0 + kPhasorChunk);
    std::vector<Complex> acc(k1 - k0);
    const double t0 = t_grid.node(k0);
    for (const Term& term : terms) {
      Complex ph = term.c * std::exp(Complex(0.0, term.omega * t0));
      const Complex step = std::exp(Complex(0.0, term.omega * h));
      for (std::size_t k = k0; k < k1; ++k) {
        acc[k - k0] += ph;
        ph *= step;
      }
    }
    for (std::size_t k = k0; k < k1; ++k) out[k] = scale * (acc[k - k0] - cusp);
  });
  return SampledSignal(t_grid, std::move(out));
}

FrSpectrum daughter_spectrum(const FrSpectrum& Psi, double a, double b) {
  if (a == 0.0) throw Error(ErrorKind::ZeroScale, "scale a must be non-zero");
  const ThetaOrder theta = Psi.theta();
  const double amp = std::pow(std::abs(a), 0.5 * theta.inverse());
  const UniformGrid& g = Psi.grid();
  std::vector<Complex> v(g.count());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double xi = g.node(k);
    const Complex val = Psi.at(a * xi);
    if (val == Complex{}) continue;
    v[k] = amp * std::exp(Complex(0.0, -warp_frequency(xi, theta) * b)) * val;
  }
  return FrSpectrum(g, std::move(v), theta);
}

UniformGrid spectral_grid(const UniformGrid& t_grid, ThetaOrder theta, double extent) {
  constexpr std::size_t kMaxCount = std::size_t{1} << 17;
  const double xi_max = std::pow(std::numbers::pi / t_grid.step(), theta.value());
  const double rate = theta.inverse() * std::pow(xi_max, theta.inverse() - 1.0) * std::max(extent, 0.0);
  double d_xi = xi_max / 1024.0;
  if (rate > 0.0) d_xi = std::min(d_xi, 0.5 * std::numbers::pi / rate);
  auto half = static_cast<std::size_t>(std::ceil(xi_max / d_xi));
  half = std::clamp<std::size_t>(half, 8, kMaxCount / 2);
  return UniformGrid::span(-xi_max, xi_max, 2 * half);
}

}  // namespace frwt
