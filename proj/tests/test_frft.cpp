#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "frwt/frft.hpp"
#include "oracles.hpp"

using namespace frwt;

namespace {

SampledSignal gaussian(const UniformGrid& g, double shift = 0.0) {
  return SampledSignal::from_function(g, [shift](double t) { return Complex(std::exp(-0.5 * (t - shift) * (t - shift))); });
}

}  // namespace

TEST_CASE("frequency warping") {
  CHECK(warp_frequency(0.0, ThetaOrder(0.5)) == 0.0);
  CHECK(warp_frequency(2.0, ThetaOrder(0.5)) == doctest::Approx(4.0));
  CHECK(warp_frequency(-2.0, ThetaOrder(0.5)) == doctest::Approx(-4.0));
  CHECK(warp_frequency(-3.0, ThetaOrder(1.0)) == -3.0);
  CHECK(warp_frequency(8.0, ThetaOrder(0.75)) == doctest::Approx(16.0));
}

TEST_CASE("Gaussian spectrum matches the closed form at every order") {
  const UniformGrid tg = UniformGrid::span(-10.0, 10.0, 2048);
  const auto f = gaussian(tg, 1.0);
  for (double th : {0.25, 0.5, 0.75, 1.0}) {
    const ThetaOrder theta(th);
    const UniformGrid xg = UniformGrid::span(-4.0, 4.0, 161);
    const FrSpectrum F = frft_forward(f, theta, xg);
    for (std::size_t k = 0; k < xg.count(); ++k) {
      const double w = warp_frequency(xg.node(k), theta);
      // shift by 1: e^{-i w} factor
      const Complex want = oracle::gaussian_ft(w) * std::exp(Complex(0.0, -w));
      CHECK(std::abs(F[k] - want) < 1e-9);
    }
  }
}

TEST_CASE("fast and direct quadratures agree below the Nyquist band") {
  const UniformGrid tg = UniformGrid::span(-8.0, 8.0, 513);
  const auto f = SampledSignal::from_function(
      tg, [](double t) { return Complex(std::exp(-0.5 * t * t) * std::cos(2.0 * t), 0.3 * std::exp(-t * t)); });
  for (double th : {0.5, 1.0}) {
    const UniformGrid xg = UniformGrid::span(-5.0, 5.0, 101);
    const FrSpectrum a = frft_forward(f, ThetaOrder(th), xg);
    const FrSpectrum b = frft_forward_direct(f, ThetaOrder(th), xg);
    for (std::size_t k = 0; k < xg.count(); ++k) CHECK(std::abs(a[k] - b[k]) < 1e-9);
  }
}

TEST_CASE("zero frequency is the exact integral") {
  const UniformGrid tg = UniformGrid::span(-5.0, 7.0, 301);
  const auto f = SampledSignal::from_function(tg, [](double t) { return Complex(std::exp(-std::abs(t - 1.0)), t); });
  CHECK(frft_at(f, ThetaOrder(0.5), 0.0) == integrate(f));
}

TEST_CASE("real signals have conjugate-symmetric spectra") {
  const UniformGrid tg = UniformGrid::span(-6.0, 6.0, 385);
  const auto f = SampledSignal::from_function(tg, [](double t) { return Complex(std::exp(-t * t) * (1.0 + t)); });
  const UniformGrid xg = UniformGrid::span(-6.0, 6.0, 240);
  const FrSpectrum F = frft_forward(f, ThetaOrder(0.6), xg);
  for (std::size_t k = 0; k < xg.count(); ++k) CHECK(std::abs(F[k] - std::conj(F[xg.count() - 1 - k])) < 1e-14);
}

TEST_CASE("round trip reconstructs the signal") {
  const UniformGrid tg = UniformGrid::span(-10.0, 10.0, 1024);
  const auto f = gaussian(tg);
  const UniformGrid xg = UniformGrid::span(-16.0, 16.0, 2048);
  for (double th : {0.25, 0.5, 0.75, 1.0}) {
    const auto back = frft_inverse(frft_forward(f, ThetaOrder(th), xg), tg);
    CHECK(norm(back - f, Norm::Sup) < 1e-6);
  }
}

TEST_CASE("property: the transform is linear") {
  const UniformGrid tg = UniformGrid::span(-4.0, 4.0, 129);
  const UniformGrid xg = UniformGrid::span(-3.0, 3.0, 60);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Complex> u(tg.count()), v(tg.count());
    for (std::size_t k = 0; k < tg.count(); ++k) {
      u[k] = Complex(n(oracle::rng()), n(oracle::rng()));
      v[k] = Complex(n(oracle::rng()), n(oracle::rng()));
    }
    const SampledSignal f(tg, u), g(tg, v);
    const Complex c(n(oracle::rng()), n(oracle::rng()));
    const ThetaOrder theta(0.4 + 0.06 * trial);
    const FrSpectrum lhs = frft_forward(c * f + g, theta, xg);
    const FrSpectrum F = frft_forward(f, theta, xg);
    const FrSpectrum G = frft_forward(g, theta, xg);
    for (std::size_t k = 0; k < xg.count(); ++k) CHECK(std::abs(lhs[k] - (c * F[k] + G[k])) < 1e-11);
  }
}

TEST_CASE("daughter spectrum equals the spectrum of the daughter") {
  const UniformGrid tg = UniformGrid::span(-16.0, 16.0, 2049);
  const auto psi =
      SampledSignal::from_function(tg, [](double t) { return Complex((1.0 - t * t) * std::exp(-0.5 * t * t)); });
  const ThetaOrder theta(0.5);
  const UniformGrid xg = UniformGrid::span(-6.0, 6.0, 4096);
  const FrSpectrum Psi = frft_forward(psi, theta, xg);
  for (double a : {0.8, -1.2}) {
    const double b = 0.7;
    const FrSpectrum D = daughter_spectrum(Psi, a, b);
    const FrSpectrum direct = frft_forward(dilate_translate(psi, a, b, theta), theta, xg);
    double worst = 0.0;
    for (std::size_t k = 0; k < xg.count(); ++k) {
      if (std::abs(a * xg.node(k)) > 5.9) continue;
      worst = std::max(worst, std::abs(D[k] - direct[k]));
    }
    CHECK(worst < 1e-3);
  }
  CHECK_THROWS_AS(daughter_spectrum(Psi, 0.0, 0.0), Error);
}

TEST_CASE("Hurwitz zeta") {
  CHECK(hurwitz_zeta(-1.0, 1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
  CHECK(hurwitz_zeta(-1.0, 0.5) == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
  CHECK(hurwitz_zeta(-3.0, 1.0) == doctest::Approx(1.0 / 120.0).epsilon(1e-12));
  CHECK(hurwitz_zeta(2.0, 1.0) == doctest::Approx(oracle::pi * oracle::pi / 6.0).epsilon(1e-12));
  for (double q : {0.25, 0.5, 1.0}) CHECK(hurwitz_zeta(0.0, q) == doctest::Approx(0.5 - q).epsilon(1e-12));
}

TEST_CASE("weighted spectral integrals match Gamma values") {
  // int |xi|^alpha e^{-xi^2} dxi = Gamma((alpha + 1)/2)
  for (double alpha : {0.0, 1.0 / 3.0, 1.0, 3.0}) {
    for (std::size_t count : {400u, 401u}) {
      const UniformGrid xg = UniformGrid::span(-8.0, 8.0, count);
      std::vector<Complex> g(count);
      for (std::size_t k = 0; k < count; ++k) g[k] = std::exp(-xg.node(k) * xg.node(k));
      const Complex got = integrate_spectral(xg, g, alpha);
      CHECK(got.real() == doctest::Approx(std::tgamma(0.5 * (alpha + 1.0))).epsilon(1e-6));
    }
  }
}

TEST_CASE("spectral grid covers the band with an even node count") {
  const UniformGrid tg = UniformGrid::span(-8.0, 8.0, 513);
  for (double th : {0.25, 0.5, 1.0}) {
    const UniformGrid xg = spectral_grid(tg, ThetaOrder(th), 16.0);
    CHECK(xg.count() % 2 == 0);
    CHECK(xg.t_min() == -xg.t_max());
    CHECK(xg.t_max() == doctest::Approx(std::pow(oracle::pi / tg.step(), th)));
  }
}
