#include "frwt/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fft.hpp"
#include "frwt/parallel.hpp"

namespace frwt {

namespace {

constexpr double kSupportFloor = 1e-12;
constexpr std::size_t kMinRowNodes = 257;
constexpr std::size_t kMaxRowNodes = 2049;

// [lo, hi] outside of which all samples are below kSupportFloor of the peak.
std::pair<double, double> effective_support(const SampledSignal& f) {
  const UniformGrid& g = f.grid();
  double peak = 0.0;
  for (const auto& v : f.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return {g.t_min(), g.t_max()};
  std::size_t first = 0;
  while (!(std::abs(f[first]) > kSupportFloor * peak)) ++first;
  std::size_t last = f.size() - 1;
  while (!(std::abs(f[last]) > kSupportFloor * peak)) --last;
  return {g.node(first == 0 ? 0 : first - 1), g.node(std::min(last + 1, f.size() - 1))};
}

SampledSignal magnitude_row(const Scalogram& s, double factor) {
  std::vector<Complex> v(s.values().begin(), s.values().end());
  for (auto& x : v) x *= factor;
  return SampledSignal(s.grid().b_grid(), std::move(v));
}

SampledSignal normalized_row(const SampledSignal& f, const FractionalWavelet& w, double a, const UniformGrid& bg) {
  const ScaleTranslationGrid st(bg, {a}, w.theta());
  return magnitude_row(cfrwt_forward(f, w, st), 1.0 / std::sqrt(w.admissibility()));
}

double l1_of_difference(const FractionalWavelet& phi, const FractionalWavelet& psi) {
  if (!phi.signal().grid().same_as(psi.signal().grid()))
    throw Error(ErrorKind::GridMismatch, "distance bound: the two wavelets must share a grid");
  const Complex cp = 1.0 / std::sqrt(phi.admissibility());
  const Complex cq = 1.0 / std::sqrt(psi.admissibility());
  return norm(cp * phi.signal() - cq * psi.signal(), Norm::L1);
}

void check_report_inputs(const SampledSignal& f, const std::optional<SampledSignal>& g, const FractionalWavelet& phi,
                         const FractionalWavelet& psi) {
  if (!(phi.theta() == psi.theta()))
    throw Error(ErrorKind::OrderMismatch, "bound report: wavelets have different theta");
  if (g && !g->grid().same_as(f.grid()))
    throw Error(ErrorKind::GridMismatch, "bound report: f and g must share a grid");
}

std::string describe_mollifier(const MollifierFamily& M) {
  std::ostringstream s;
  s << M.description() << "; " << M.dilations().size() << " dilations in [" << M.dilations().front() << ", "
    << M.dilations().back() << "]";
  return s.str();
}

}  // namespace

MollifierFamily::MollifierFamily(SampledSignal eta, std::vector<double> dilations, std::string description)
    : eta_(std::move(eta)), dilations_(std::move(dilations)), description_(std::move(description)) {
  const double mass = std::abs(integrate(eta_));
  if (!(mass > 1e-12 * norm(eta_, Norm::L1)))
    throw Error(ErrorKind::InvalidMollifier, "mollifier must have a non-zero integral");
  if (dilations_.empty()) throw Error(ErrorKind::InvalidMollifier, "mollifier family has no dilations");
  for (std::size_t j = 0; j < dilations_.size(); ++j) {
    if (!(dilations_[j] > 0.0) || !std::isfinite(dilations_[j]))
      throw Error(ErrorKind::InvalidMollifier, "dilations must be positive");
    if (j > 0 && !(dilations_[j] > dilations_[j - 1]))
      throw Error(ErrorKind::InvalidMollifier, "dilations must be strictly increasing");
  }
}

MollifierFamily MollifierFamily::gaussian(std::size_t count, double t_min, double t_max) {
  const UniformGrid g = UniformGrid::span(-8.0, 8.0, 1601);
  const double c = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  SampledSignal eta = SampledSignal::from_function(g, [c](double x) { return Complex(c * std::exp(-0.5 * x * x)); });
  std::vector<double> d(count);
  if (count == 1) {
    d[0] = t_min;
  } else {
    const double u0 = std::log(t_min);
    const double du = (std::log(t_max) - u0) / static_cast<double>(count - 1);
    for (std::size_t j = 0; j < count; ++j) d[j] = std::exp(u0 + du * static_cast<double>(j));
  }
  return MollifierFamily(std::move(eta), std::move(d), "unit-mass gaussian eta on [-8,8]");
}

BallFamily::BallFamily(std::vector<double> centers, std::vector<double> radii, double nu)
    : centers_(std::move(centers)), radii_(std::move(radii)), nu_(nu) {
  if (!(nu_ >= 0.0 && nu_ <= 1.0)) throw Error(ErrorKind::InvalidFamily, "Morrey exponent nu must lie in [0,1]");
  if (centers_.empty() || radii_.empty()) throw Error(ErrorKind::InvalidFamily, "ball family is empty");
  for (double r : radii_) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::InvalidFamily, "ball radii must be positive");
  }
}

BallFamily BallFamily::for_grid(const UniformGrid& grid, double nu, std::size_t radii) {
  std::vector<double> c(grid.count());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = grid.node(k);
  std::vector<double> r(std::max<std::size_t>(radii, 1));
  const double u0 = std::log(grid.step());
  const double u1 = std::log(grid.length());
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = r.size() == 1 ? grid.length() : std::exp(u0 + (u1 - u0) * static_cast<double>(j) / (r.size() - 1));
  }
  return BallFamily(std::move(c), std::move(r), nu);
}

std::vector<Complex> mollify(const SampledSignal& f, const SampledSignal& eta, double t) {
  const UniformGrid& fg = f.grid();
  const UniformGrid& eg = eta.grid();
  const std::size_t n = fg.count();
  std::vector<Complex> out(n);
  if (t >= fg.step()) {
    // Quadrature over f's nodes: a discrete convolution with eta_t sampled at offsets j h.
    std::vector<Complex> weighted(n);
    for (std::size_t k = 0; k < n; ++k) weighted[k] = fg.weight(k) * f[k];
    std::vector<Complex> kernel(2 * n - 1);
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      const double offset = (static_cast<double>(j) - static_cast<double>(n - 1)) * fg.step();
      kernel[j] = eta.at(offset / t) / t;
    }
    const std::vector<Complex> full = detail::linear_convolution(weighted, kernel);
    std::copy(full.begin() + static_cast<std::ptrdiff_t>(n - 1), full.begin() + static_cast<std::ptrdiff_t>(2 * n - 1),
              out.begin());
  } else {
    // Narrow eta_t: integrate int f(x - t y) eta(y) dy on eta's grid instead.
    parallel_for(n, [&](std::size_t i) {
      const double x = fg.node(i);
      Complex acc{};
      for (std::size_t m = 0; m < eg.count(); ++m) {
        if (eta[m] == Complex{}) continue;
        acc += eg.weight(m) * eta[m] * f.at(x - t * eg.node(m));
      }
      out[i] = acc;
    });
  }
  return out;
}

double hardy_norm(const SampledSignal& f, const MollifierFamily& M) {
  std::vector<double> sup(f.size(), 0.0);
  if (f.is_zero()) return 0.0;
  for (double t : M.dilations()) {
    const std::vector<Complex> v = mollify(f, M.eta(), t);
    for (std::size_t i = 0; i < sup.size(); ++i) sup[i] = std::max(sup[i], std::abs(v[i]));
  }
  return integrate(f.grid(), sup);
}

double morrey_norm(const SampledSignal& f, const BallFamily& B) {
  const UniformGrid& g = f.grid();
  const std::size_t n = g.count();
  std::vector<double> mag(n);
  for (std::size_t k = 0; k < n; ++k) mag[k] = std::abs(f[k]);
  // prefix[k] = integral of the interpolant of |f| over [t_min, node k].
  std::vector<double> prefix(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) prefix[k] = prefix[k - 1] + 0.5 * g.step() * (mag[k - 1] + mag[k]);
  const auto P = [&](double x) {
    const double u = std::clamp(g.position(x), 0.0, static_cast<double>(n - 1));
    auto k = static_cast<std::size_t>(u);
    if (k + 1 >= n) return prefix[n - 1];
    const double tau = u - static_cast<double>(k);
    return prefix[k] + g.step() * (tau * mag[k] + 0.5 * tau * tau * (mag[k + 1] - mag[k]));
  };
  double best = 0.0;
  for (double r : B.radii()) {
    const double w = std::pow(r, -B.nu());
    for (double x : B.centers()) best = std::max(best, w * (P(x + r) - P(x - r)));
  }
  return best;
}

Scalogram normalized_cfrwt(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid) {
  const Scalogram raw = cfrwt_forward(f, psi, grid);
  const double c = 1.0 / std::sqrt(psi.admissibility());
  std::vector<Complex> v(raw.values().begin(), raw.values().end());
  for (auto& x : v) x *= c;
  return Scalogram(grid, std::move(v), psi.id(), true, c);
}

bool BoundReport::all_pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.pass; });
}

void BoundReport::add(std::string check, double a, double lhs, double rhs) {
  BoundRow row;
  row.check = std::move(check);
  row.a = a;
  row.lhs = lhs;
  row.rhs = rhs;
  row.ratio = rhs > 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  row.pass = std::isfinite(lhs) && lhs <= slack * rhs;
  rows.push_back(std::move(row));
}

UniformGrid report_translation_grid(const SampledSignal& f, const std::vector<const FractionalWavelet*>& wavelets,
                                    double a) {
  const auto [f_lo, f_hi] = effective_support(f);
  double lo = f_lo;
  double hi = f_hi;
  for (const FractionalWavelet* w : wavelets) {
    const double s = time_dilation(a, w->theta());
    const auto [w_lo, w_hi] = w->support().value_or(effective_support(w->signal()));
    lo = std::min(lo, f_lo + std::min(s * w_lo, s * w_hi));
    hi = std::max(hi, f_hi + std::max(s * w_lo, s * w_hi));
  }
  const double h = f.grid().step();
  const auto want = static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 1;
  return UniformGrid::span(lo, hi, std::clamp(want, kMinRowNodes, kMaxRowNodes));
}

BoundReport hardy_bound_report(const SampledSignal& f, const std::optional<SampledSignal>& g,
                               const FractionalWavelet& phi, const FractionalWavelet& psi,
                               const std::vector<double>& scales, const MollifierFamily& M) {
  check_report_inputs(f, g, phi, psi);
  const ThetaOrder theta = psi.theta();
  BoundReport report;
  report.theorem = "hardy";
  report.theta = theta.value();
  report.slack = kHardySlack;
  report.family = describe_mollifier(M);

  const double f_l1 = norm(f, Norm::L1);
  const double f_h1 = hardy_norm(f, M);
  const double cpsi = std::sqrt(psi.admissibility());
  double diff_l1 = 0.0;
  double fg_h1 = 0.0;
  if (g) {
    diff_l1 = l1_of_difference(phi, psi);
    fg_h1 = hardy_norm(f - *g, M);
  }
  for (double a : scales) {
    const double grow = std::pow(std::abs(a), 0.5 * theta.inverse());
    const UniformGrid bg = report_translation_grid(f, {&phi, &psi}, a);
    const SampledSignal row = normalized_row(f, psi, a, bg);
    report.add("l1_lemma", a, norm(row, Norm::L1), grow / cpsi * psi.l1_norm() * f_l1);
    const double h_row = hardy_norm(row, M);
    report.add("boundedness", a, h_row, grow / cpsi * psi.l1_norm() * f_h1);
    report.add("growth", a, h_row / grow, psi.l1_norm() * f_h1 / cpsi);
    if (g) {
      const SampledSignal d = normalized_row(f, phi, a, bg) - normalized_row(*g, psi, a, bg);
      report.add("distance", a, hardy_norm(d, M), grow * (f_h1 * diff_l1 + fg_h1 * psi.l1_norm() / cpsi));
    }
  }
  return report;
}

BoundReport morrey_bound_report(const SampledSignal& f, const std::optional<SampledSignal>& g,
                                const FractionalWavelet& phi, const FractionalWavelet& psi,
                                const std::vector<double>& scales, const BallFamily& B) {
  check_report_inputs(f, g, phi, psi);
  for (const FractionalWavelet* w : {&phi, &psi}) {
    if (!w->compact_support()) {
      throw Error(ErrorKind::HypothesisViolation,
                  "Morrey bounds require a compactly supported wavelet; '" + w->id() + "' is not");
    }
  }
  const ThetaOrder theta = psi.theta();
  BoundReport report;
  report.theorem = "morrey";
  report.theta = theta.value();
  report.slack = kMorreySlack;
  {
    std::ostringstream s;
    s << "nu=" << B.nu() << "; " << B.centers().size() << " centers, " << B.radii().size() << " radii";
    report.family = s.str();
  }

  const double f_l1 = norm(f, Norm::L1);
  const double f_m = morrey_norm(f, B);
  const double cpsi = std::sqrt(psi.admissibility());
  double diff_l1 = 0.0;
  double fg_m = 0.0;
  if (g) {
    diff_l1 = l1_of_difference(phi, psi);
    fg_m = morrey_norm(f - *g, B);
  }
  for (double a : scales) {
    const double grow = std::pow(std::abs(a), 0.5 * theta.inverse());
    const UniformGrid bg = report_translation_grid(f, {&phi, &psi}, a);
    const BallFamily rows = BallFamily::for_grid(bg, B.nu(), B.radii().size());
    const SampledSignal row = normalized_row(f, psi, a, bg);
    report.add("l1loc_lemma", a, norm(row, Norm::L1), grow / cpsi * psi.l1_norm() * f_l1);
    const double m_row = morrey_norm(row, rows);
    report.add("boundedness", a, m_row, grow / cpsi * psi.l1_norm() * f_m);
    report.add("growth", a, m_row / grow, psi.l1_norm() * f_m / cpsi);
    if (g) {
      const SampledSignal d = normalized_row(f, phi, a, bg) - normalized_row(*g, psi, a, bg);
      report.add("distance", a, morrey_norm(d, rows), grow * (f_m * diff_l1 + fg_m * psi.l1_norm() / cpsi));
    }
  }
  return report;
}

}  // namespace frwt
