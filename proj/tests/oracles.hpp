#pragma once

// Closed forms and plain quadratures used as independent references.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include <unistd.h>

namespace oracle {

using Complex = std::complex<double>;
constexpr double pi = std::numbers::pi;

// Composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Classical spectra, F(w) = int e^{-i w t} f(t) dt.
inline Complex gaussian_ft(double w) { return std::sqrt(2.0 * pi) * std::exp(-0.5 * w * w); }
inline Complex mexican_hat_ft(double w) { return std::sqrt(2.0 * pi) * w * w * std::exp(-0.5 * w * w); }
inline Complex dog_ft(double w) { return std::sqrt(2.0 * pi) * (std::exp(-0.5 * w * w) - std::exp(-2.0 * w * w)); }
inline Complex gauss_deriv1_ft(double w) { return Complex(0.0, -std::sqrt(2.0 * pi) * w * std::exp(-0.5 * w * w)); }
inline Complex haar_ft(double w) {
  if (w == 0.0) return 0.0;
  // int_0^{1/2} e^{-iwt} - int_{1/2}^1 e^{-iwt}
  const Complex e1 = std::exp(Complex(0.0, -0.5 * w));
  const Complex e2 = std::exp(Complex(0.0, -w));
  return (1.0 - 2.0 * e1 + e2) / Complex(0.0, w);
}

// e^{-t^2/2} cos(c t).
inline Complex modulated_gaussian_ft(double w, double c) {
  return 0.5 * std::sqrt(2.0 * pi) * (std::exp(-0.5 * (w - c) * (w - c)) + std::exp(-0.5 * (w + c) * (w + c)));
}

// theta = 1 constant int |F psi|^2 / |w| dw by Simpson in log|w| on both half-lines.
inline double admissibility_theta1(const std::function<Complex(double)>& F) {
  const auto g = [&](double u) {
    const double w = std::exp(u);
    return std::norm(F(w)) + std::norm(F(-w));
  };
  return simpson(g, std::log(1e-8), std::log(200.0), 40000);
}

inline double cross_theta1(const std::function<Complex(double)>& Fphi, const std::function<Complex(double)>& Fpsi) {
  const auto g = [&](double u) {
    const double w = std::exp(u);
    return (std::conj(Fphi(w)) * Fpsi(w) + std::conj(Fphi(-w)) * Fpsi(-w)).real();
  };
  return simpson(g, std::log(1e-8), std::log(200.0), 40000);
}

// W(b, a) of f = e^{-t^2/2} against the Mexican hat at any theta, s = sgn(a)|a|^{1/theta}.
inline double mexican_hat_of_gaussian(double b, double s) {
  const double c = 1.0 + s * s;
  return std::sqrt(2.0 * pi) * std::pow(std::abs(s), 2.5) * std::pow(c, -1.5) * (1.0 - b * b / c) *
         std::exp(-0.5 * b * b / c);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("frwt_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace oracle
