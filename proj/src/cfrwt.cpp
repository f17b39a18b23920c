#include "frwt/cfrwt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "frwt/parallel.hpp"

namespace frwt {

namespace {

constexpr std::size_t kPhasorChunk = 256;
// Spectral terms below this fraction of the largest one are dropped.
constexpr double kNegligible = 1e-16;

void require_theta(ThetaOrder expected, ThetaOrder got, const char* what) {
  if (!(expected == got)) {
    std::ostringstream msg;
    msg << what << ": theta " << got.value() << " does not match " << expected.value();
    throw Error(ErrorKind::OrderMismatch, msg.str());
  }
}

double measure_weight(double a, double du, ThetaOrder theta) {
  return du * std::pow(std::abs(a), -theta.inverse());
}

// sum_k w_k f_k conj(amp psi((t_k - b)/s)), restricted to the nodes where the
// dilated wavelet can be non-zero.
Complex direct_coefficient(const SampledSignal& f, const SampledSignal& psi, double s, double amp, double b) {
  const UniformGrid& fg = f.grid();
  const UniformGrid& pg = psi.grid();
  const double e0 = b + s * pg.t_min();
  const double e1 = b + s * pg.t_max();
  const double lo = fg.position(std::min(e0, e1));
  const double hi = fg.position(std::max(e0, e1));
  const double last = static_cast<double>(fg.count() - 1);
  if (hi < 0.0 || lo > last) return {};
  const auto k0 = static_cast<std::size_t>(std::max(0.0, std::ceil(lo)));
  const auto k1 = static_cast<std::size_t>(std::min(last, std::floor(hi)));
  Complex acc{};
  for (std::size_t k = k0; k <= k1; ++k) {
    if (f[k] == Complex{}) continue;
    const Complex v = psi.at((fg.node(k) - b) / s);
    if (v == Complex{}) continue;
    acc += fg.weight(k) * f[k] * std::conj(amp * v);
  }
  return acc;
}

// One scalogram row by the spectral formula; psi_at(xi) returns Psi(a xi).
template <class PsiAt>
void spectral_row(const FrSpectrum& F, PsiAt psi_at, double a, const UniformGrid& bg, std::span<Complex> out) {
  const ThetaOrder theta = F.theta();
  const UniformGrid& xg = F.grid();
  const double alpha = theta.inverse() - 1.0;
  const double amp = std::pow(std::abs(a), 0.5 * theta.inverse());
  const std::size_t n = xg.count();

  // g(xi) = F(xi) conj(amp Psi(a xi)); the b-phase is 1 at xi = 0.
  std::vector<Complex> g(n);
  double peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (F[j] == Complex{}) continue;
    g[j] = F[j] * std::conj(amp * psi_at(xg.node(j)));
    peak = std::max(peak, std::abs(g[j]));
  }
  const Complex cusp = cusp_correction(xg, alpha)(g);

  struct Term {
    double omega;
    Complex c;
  };
  std::vector<Term> terms;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(std::abs(g[j]) > kNegligible * peak)) continue;
    const double xi = xg.node(j);
    const double w = xg.weight(j) * std::pow(std::abs(xi), alpha);
    if (w == 0.0) continue;
    terms.push_back({warp_frequency(xi, theta), w * g[j]});
  }
  const double scale = 1.0 / (2.0 * std::numbers::pi * theta.value());
  const std::size_t nb = bg.count();
  const double h = bg.step();
  std::vector<Complex> acc(kPhasorChunk);
  for (std::size_t k0 = 0; k0 < nb; k0 += kPhasorChunk) {
    const std::size_t k1 = std::min(nb, k0 + kPhasorChunk);
    std::fill(acc.begin(), acc.end(), Complex{});
    const double b0 = bg.node(k0);
    for (const Term& term : terms) {
      Complex ph = term.c * std::exp(Complex(0.0, term.omega * b0));
      const Complex step = std::exp(Complex(0.0, term.omega * h));
      for (std::size_t k = k0; k < k1; ++k) {
        acc[k - k0] += ph;
        ph *= step;
      }
    }
    for (std::size_t k = k0; k < k1; ++k) out[k] = scale * (acc[k - k0] - cusp);
  }
}

// Daughter value psi_{a,b}(t) at the breakpoints of its linear interpolant.
struct Daughter {
  const SampledSignal* psi;
  double s;
  double amp;
  double b;
  double lo() const { return b + s * (s > 0 ? psi->grid().t_min() : psi->grid().t_max()); }
  double hi() const { return b + s * (s > 0 ? psi->grid().t_max() : psi->grid().t_min()); }
  Complex operator()(double t) const { return amp * psi->at((t - b) / s); }
  void breakpoints(double from, double to, std::vector<double>& out) const {
    const UniformGrid& g = psi->grid();
    for (std::size_t k = 0; k < g.count(); ++k) {
      const double t = b + s * g.node(k);
      if (t > from && t < to) out.push_back(t);
    }
  }
};

Daughter daughter(const FractionalWavelet& w, double a, double b) {
  const ThetaOrder theta = w.theta();
  return {&w.signal(), time_dilation(a, theta), std::pow(std::abs(a), -0.5 * theta.inverse()), b};
}

SampledSignal direct_row(const SampledSignal& f, const FractionalWavelet& psi, double a, const UniformGrid& bg) {
  const ThetaOrder theta = psi.theta();
  const double s = time_dilation(a, theta);
  const double amp = std::pow(std::abs(a), -0.5 * theta.inverse());
  std::vector<Complex> v(bg.count());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = direct_coefficient(f, psi.signal(), s, amp, bg.node(j));
  return SampledSignal(bg, std::move(v));
}

// bg extended on both sides by whole steps covering `reach`.
UniformGrid widen(const UniformGrid& bg, double reach) {
  const auto m = static_cast<std::size_t>(std::ceil(reach / bg.step()));
  return UniformGrid(bg.t_min() - static_cast<double>(m) * bg.step(), bg.step(), bg.count() + 2 * m);
}

Scalogram build_rows(const ScaleTranslationGrid& grid, std::string id,
                     const std::function<SampledSignal(std::size_t)>& fn) {
  const std::size_t nb = grid.translation_count();
  std::vector<Complex> values(grid.scale_count() * nb);
  parallel_for(grid.scale_count(), [&](std::size_t k) {
    const SampledSignal out = fn(k);
    std::copy(out.values().begin(), out.values().end(), values.begin() + static_cast<std::ptrdiff_t>(k * nb));
  });
  return Scalogram(grid, std::move(values), std::move(id));
}

}  // namespace

ScaleTranslationGrid::ScaleTranslationGrid(UniformGrid b_grid, std::vector<double> scales, ThetaOrder theta)
    : b_grid_(b_grid), scales_(std::move(scales)), theta_(theta) {
  if (scales_.empty()) throw Error(ErrorKind::InvalidGrid, "scale grid is empty");
  for (double a : scales_) {
    if (a == 0.0) throw Error(ErrorKind::ZeroScale, "scale grid contains a = 0");
    if (!std::isfinite(a)) throw Error(ErrorKind::InvalidGrid, "scale grid contains a non-finite scale");
  }
  weights_.assign(scales_.size(), 0.0);
  for (int sign : {-1, 1}) {
    std::vector<std::size_t> branch;
    for (std::size_t k = 0; k < scales_.size(); ++k) {
      if ((scales_[k] > 0) == (sign > 0)) branch.push_back(k);
    }
    if (branch.empty()) continue;
    std::sort(branch.begin(), branch.end(),
              [&](std::size_t x, std::size_t y) { return std::abs(scales_[x]) < std::abs(scales_[y]); });
    for (std::size_t i = 0; i + 1 < branch.size(); ++i) {
      if (std::abs(scales_[branch[i]]) == std::abs(scales_[branch[i + 1]]))
        throw Error(ErrorKind::InvalidGrid, "scale grid contains a repeated scale");
    }
    if (branch.size() == 1) {
      weights_[branch[0]] = measure_weight(scales_[branch[0]], 1.0, theta_);
      continue;
    }
    for (std::size_t i = 0; i < branch.size(); ++i) {
      const double u_prev = std::log(std::abs(scales_[branch[i == 0 ? 0 : i - 1]]));
      const double u_next = std::log(std::abs(scales_[branch[i + 1 == branch.size() ? i : i + 1]]));
      weights_[branch[i]] = measure_weight(scales_[branch[i]], 0.5 * (u_next - u_prev), theta_);
    }
  }
}

ScaleTranslationGrid ScaleTranslationGrid::log_spaced(UniformGrid b_grid, double a_min, double a_max,
                                                      std::size_t per_sign, ThetaOrder theta, bool positive_only) {
  if (!(a_min > 0.0) || !(a_max > a_min) || per_sign < 2) {
    std::ostringstream msg;
    msg << "invalid scale range [" << a_min << ", " << a_max << "] with " << per_sign << " scales per sign";
    throw Error(ErrorKind::InvalidGrid, msg.str());
  }
  const double u0 = std::log(a_min);
  const double du = (std::log(a_max) - u0) / static_cast<double>(per_sign - 1);
  std::vector<double> pos(per_sign);
  for (std::size_t k = 0; k < per_sign; ++k) pos[k] = k + 1 == per_sign ? a_max : std::exp(u0 + du * k);
  pos[0] = a_min;
  std::vector<double> scales;
  if (!positive_only) {
    for (std::size_t k = per_sign; k-- > 0;) scales.push_back(-pos[k]);
  }
  scales.insert(scales.end(), pos.begin(), pos.end());
  return ScaleTranslationGrid(b_grid, std::move(scales), theta);
}

UniformGrid default_translation_grid(const UniformGrid& signal_grid) {
  const double half = 0.5 * signal_grid.length();
  return UniformGrid(signal_grid.t_min() - half, signal_grid.step(), 2 * signal_grid.count() - 1);
}

bool ScaleTranslationGrid::same_as(const ScaleTranslationGrid& other) const noexcept {
  return b_grid_.same_as(other.b_grid_) && theta_ == other.theta_ && scales_ == other.scales_;
}

Scalogram::Scalogram(ScaleTranslationGrid grid, std::vector<Complex> values, std::string wavelet_id, bool normalized,
                     double normalization)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      wavelet_id_(std::move(wavelet_id)),
      normalized_(normalized),
      normalization_(normalization) {
  if (values_.size() != grid_.scale_count() * grid_.translation_count())
    throw Error(ErrorKind::InvalidSignal, "scalogram size does not match its grid");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorKind::InvalidSignal, "scalogram contains a non-finite value");
  }
  if (!(normalization_ > 0.0) || !std::isfinite(normalization_))
    throw Error(ErrorKind::InvalidSignal, "scalogram normalization must be positive");
}

SampledSignal Scalogram::row_signal(std::size_t scale) const {
  const auto r = row(scale);
  return SampledSignal(grid_.b_grid(), std::vector<Complex>(r.begin(), r.end()));
}

Scalogram cfrwt_forward(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid) {
  require_theta(grid.theta(), psi.theta(), "cfrwt_forward");
  const ThetaOrder theta = grid.theta();
  const UniformGrid& bg = grid.b_grid();
  const std::size_t nb = bg.count();
  std::vector<Complex> values(grid.scale_count() * nb);
  parallel_for(grid.scale_count(), [&](std::size_t k) {
    const double a = grid.scales()[k];
    const double s = time_dilation(a, theta);
    const double amp = std::pow(std::abs(a), -0.5 * theta.inverse());
    for (std::size_t j = 0; j < nb; ++j) values[k * nb + j] = direct_coefficient(f, psi.signal(), s, amp, bg.node(j));
  });
  return Scalogram(grid, std::move(values), psi.id());
}

Scalogram cfrwt_forward_spectral(const FrSpectrum& F, const FractionalWavelet& psi, const ScaleTranslationGrid& grid) {
  require_theta(grid.theta(), F.theta(), "cfrwt_forward_spectral");
  require_theta(grid.theta(), psi.theta(), "cfrwt_forward_spectral");
  const std::size_t nb = grid.translation_count();
  std::vector<Complex> values(grid.scale_count() * nb);
  parallel_for(grid.scale_count(), [&](std::size_t k) {
    const double a = grid.scales()[k];
    spectral_row(F, [&](double xi) { return psi.spectrum_at(a * xi); }, a, grid.b_grid(),
                 std::span<Complex>(values).subspan(k * nb, nb));
  });
  return Scalogram(grid, std::move(values), psi.id());
}

Scalogram cfrwt_forward_spectral(const FrSpectrum& F, const FrSpectrum& Psi, const ScaleTranslationGrid& grid,
                                 const std::string& wavelet_id) {
  require_theta(grid.theta(), F.theta(), "cfrwt_forward_spectral");
  require_theta(grid.theta(), Psi.theta(), "cfrwt_forward_spectral");
  const std::size_t nb = grid.translation_count();
  std::vector<Complex> values(grid.scale_count() * nb);
  parallel_for(grid.scale_count(), [&](std::size_t k) {
    const double a = grid.scales()[k];
    spectral_row(F, [&](double xi) { return Psi.at(a * xi); }, a, grid.b_grid(),
                 std::span<Complex>(values).subspan(k * nb, nb));
  });
  return Scalogram(grid, std::move(values), wavelet_id);
}

UniformGrid transform_xi_grid(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid) {
  const UniformGrid& fg = f.grid();
  const UniformGrid& bg = grid.b_grid();
  double extent = std::max(std::abs(bg.t_max() - fg.t_min()), std::abs(fg.t_max() - bg.t_min()));
  // Off-center wavelets add a phase ramp s * centroid in omega.
  const SampledSignal& p = psi.signal();
  double m0 = 0.0;
  double m1 = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double e = std::norm(p[k]);
    m0 += e;
    m1 += e * p.grid().node(k);
  }
  double s_max = 0.0;
  for (double a : grid.scales()) s_max = std::max(s_max, std::abs(time_dilation(a, grid.theta())));
  if (m0 > 0.0) extent += s_max * std::abs(m1 / m0);
  return spectral_grid(fg, grid.theta(), extent);
}

Scalogram cfrwt_transform(const SampledSignal& f, const FractionalWavelet& psi, const ScaleTranslationGrid& grid) {
  require_theta(grid.theta(), psi.theta(), "cfrwt_transform");
  const UniformGrid xg = transform_xi_grid(f, psi, grid);
  return cfrwt_forward_spectral(frft_forward(f, grid.theta(), xg), psi, grid);
}

Complex orthogonality_pairing(const Scalogram& s1, const Scalogram& s2) {
  if (!s1.grid().same_as(s2.grid()))
    throw Error(ErrorKind::GridMismatch, "orthogonality_pairing: scalograms live on different grids");
  const ScaleTranslationGrid& grid = s1.grid();
  const UniformGrid& bg = grid.b_grid();
  Complex total{};
  std::vector<Complex> prod(bg.count());
  for (std::size_t k = 0; k < grid.scale_count(); ++k) {
    const auto r1 = s1.row(k);
    const auto r2 = s2.row(k);
    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = r1[j] * std::conj(r2[j]);
    total += grid.scale_weights()[k] * integrate(bg, prod);
  }
  return total;
}

double translation_edge_mass(const Scalogram& s, double edge) {
  const ScaleTranslationGrid& grid = s.grid();
  const UniformGrid& bg = grid.b_grid();
  const auto width = static_cast<std::size_t>(std::ceil(edge * static_cast<double>(bg.count())));
  double outer = 0.0;
  double total = 0.0;
  for (std::size_t k = 0; k < grid.scale_count(); ++k) {
    const auto row = s.row(k);
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double e = grid.scale_weights()[k] * bg.weight(j) * std::norm(row[j]);
      total += e;
      if (j < width || j + width >= row.size()) outer += e;
    }
  }
  return total > 0.0 ? outer / total : 0.0;
}

bool is_degenerate(const CrossAdmissibility& c, const FractionalWavelet& phi, const FractionalWavelet& psi) {
  return std::abs(c.value) <= 1e-6 * std::sqrt(phi.admissibility() * psi.admissibility());
}

SampledSignal reconstruct(const Scalogram& s, const FractionalWavelet& psi, Complex C, const UniformGrid& t_grid) {
  if (C == Complex{}) throw Error(ErrorKind::DegeneratePair, "reconstruction requires a non-zero cross constant");
  const ScaleTranslationGrid& grid = s.grid();
  require_theta(grid.theta(), psi.theta(), "reconstruct");
  const ThetaOrder theta = grid.theta();
  const UniformGrid& bg = grid.b_grid();
  const SampledSignal& p = psi.signal();
  const Complex factor = 1.0 / (C * s.normalization());
  const double last = static_cast<double>(bg.count() - 1);
  std::vector<Complex> out(t_grid.count());
  parallel_for(t_grid.count(), [&](std::size_t i) {
    const double t = t_grid.node(i);
    Complex acc{};
    for (std::size_t k = 0; k < grid.scale_count(); ++k) {
      const double a = grid.scales()[k];
      const double sd = time_dilation(a, theta);
      const double amp = std::pow(std::abs(a), -0.5 * theta.inverse());
      // psi((t-b)/s) is non-zero only for b in t - s [t_min, t_max] of psi.
      const double e0 = t - sd * p.grid().t_min();
      const double e1 = t - sd * p.grid().t_max();
      const double lo = bg.position(std::min(e0, e1));
      const double hi = bg.position(std::max(e0, e1));
      if (hi < 0.0 || lo > last) continue;
      const auto j0 = static_cast<std::size_t>(std::max(0.0, std::ceil(lo)));
      const auto j1 = static_cast<std::size_t>(std::min(last, std::floor(hi)));
      const auto row = s.row(k);
      Complex inner{};
      for (std::size_t j = j0; j <= j1; ++j) {
        if (row[j] == Complex{}) continue;
        inner += bg.weight(j) * amp * p.at((t - bg.node(j)) / sd) * row[j];
      }
      acc += grid.scale_weights()[k] * inner;
    }
    out[i] = factor * acc;
  });
  return SampledSignal(t_grid, std::move(out));
}

Complex reproducing_kernel(const FractionalWavelet& phi, const FractionalWavelet& psi, Complex C,
                           std::pair<double, double> p0, std::pair<double, double> p) {
  if (C == Complex{}) throw Error(ErrorKind::DegeneratePair, "reproducing kernel requires a non-zero cross constant");
  require_theta(phi.theta(), psi.theta(), "reproducing_kernel");
  const Daughter u = daughter(psi, p.second, p.first);
  const Daughter v = daughter(phi, p0.second, p0.first);
  const double from = std::max(u.lo(), v.lo());
  const double to = std::min(u.hi(), v.hi());
  if (!(to > from)) return {};
  std::vector<double> cuts{from, to};
  u.breakpoints(from, to, cuts);
  v.breakpoints(from, to, cuts);
  std::sort(cuts.begin(), cuts.end());
  // Both daughters are linear between consecutive cuts, so Simpson's weights
  // integrate their product exactly.
  Complex acc{};
  Complex u0 = u(cuts[0]);
  Complex v0 = std::conj(v(cuts[0]));
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double len = cuts[i] - cuts[i - 1];
    const Complex u1 = u(cuts[i]);
    const Complex v1 = std::conj(v(cuts[i]));
    if (len > 0.0) acc += len / 6.0 * (2.0 * u0 * v0 + u0 * v1 + u1 * v0 + 2.0 * u1 * v1);
    u0 = u1;
    v0 = v1;
  }
  return acc / C;
}

RangeProjection range_projection(const Scalogram& F, const FractionalWavelet& phi, const FractionalWavelet& psi,
                                 Complex C, std::size_t stride) {
  if (C == Complex{}) throw Error(ErrorKind::DegeneratePair, "range test requires a non-zero cross constant");
  const ScaleTranslationGrid& grid = F.grid();
  require_theta(grid.theta(), phi.theta(), "range_membership");
  require_theta(grid.theta(), psi.theta(), "range_membership");
  if (stride == 0) stride = 1;
  const ThetaOrder theta = grid.theta();
  const UniformGrid& bg = grid.b_grid();
  const UniformGrid xg = spectral_grid(bg, theta, bg.length());
  const std::size_t nxi = xg.count();
  const std::size_t na = grid.scale_count();
  const std::size_t nb = bg.count();

  // Synthesis weights c_k(xi) = w_k |a_k|^{1/(2 theta)} Psi(a_k xi), negligible ones dropped.
  std::vector<std::vector<Complex>> synth(na, std::vector<Complex>(nxi));
  parallel_for(na, [&](std::size_t k) {
    const double a = grid.scales()[k];
    const double amp = grid.scale_weights()[k] * std::pow(std::abs(a), 0.5 * theta.inverse());
    double peak = 0.0;
    for (std::size_t j = 0; j < nxi; ++j) {
      synth[k][j] = amp * psi.spectrum_at(a * xg.node(j));
      peak = std::max(peak, std::abs(synth[k][j]));
    }
    for (auto& c : synth[k]) {
      if (!(std::abs(c) > kNegligible * peak)) c = Complex{};
    }
  });

  // R(xi) = sum_k c_k(xi) sum_b w_b F(b, a_k) e^{-i omega b}, divided by C.
  std::vector<Complex> R(nxi);
  parallel_for(nxi, [&](std::size_t j) {
    const double omega = warp_frequency(xg.node(j), theta);
    const Complex step = std::exp(Complex(0.0, -omega * bg.step()));
    Complex total{};
    for (std::size_t k = 0; k < na; ++k) {
      if (synth[k][j] == Complex{}) continue;
      const auto row = F.row(k);
      Complex acc{};
      for (std::size_t i0 = 0; i0 < nb; i0 += kPhasorChunk) {
        Complex ph = std::exp(Complex(0.0, -omega * bg.node(i0)));
        const std::size_t i1 = std::min(nb, i0 + kPhasorChunk);
        for (std::size_t i = i0; i < i1; ++i) {
          acc += bg.weight(i) * row[i] * ph;
          ph *= step;
        }
      }
      total += synth[k][j] * acc;
    }
    R[j] = total / C;
  });

  std::vector<std::size_t> sub_scales;
  std::vector<double> scales;
  for (std::size_t k = 0; k < na; k += stride) {
    sub_scales.push_back(k);
    scales.push_back(grid.scales()[k]);
  }
  const std::size_t nb_sub = (nb - 1) / stride + 1;
  const UniformGrid sub_b(bg.t_min(), bg.step() * static_cast<double>(stride), std::max<std::size_t>(nb_sub, 2));
  const ScaleTranslationGrid sub(sub_b, scales, theta);
  const Scalogram projected = cfrwt_forward_spectral(FrSpectrum(xg, std::move(R), theta), phi, sub);

  RangeProjection out;
  for (std::size_t ki = 0; ki < sub_scales.size(); ++ki) {
    for (std::size_t ji = 0; ji < nb_sub; ++ji) {
      out.scale_index.push_back(sub_scales[ki]);
      out.translation_index.push_back(ji * stride);
      out.original.push_back(F.at(sub_scales[ki], ji * stride));
      out.projected.push_back(projected.at(ki, ji));
    }
  }
  return out;
}

double range_membership(const Scalogram& F, const FractionalWavelet& phi, const FractionalWavelet& psi, Complex C,
                        std::size_t stride) {
  const RangeProjection r = range_projection(F, phi, psi, C, stride);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < r.original.size(); ++i) {
    num += std::norm(r.projected[i] - r.original[i]);
    den += std::norm(r.original[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::sqrt(num);
  return std::sqrt(num / den);
}

Scalogram transform_of_combination(const SampledSignal& f, const SampledSignal& g, const FractionalWavelet& psi,
                                   CombineMode mode, const ScaleTranslationGrid& grid) {
  require_theta(grid.theta(), psi.theta(), "transform_of_combination");
  if (!f.grid().same_step(grid.b_grid()))
    throw Error(ErrorKind::GridMismatch, "transform_of_combination: f and the translation grid differ in step");
  const UniformGrid& bg = grid.b_grid();
  // The b-convolution reads W_psi g beyond bg by up to the extent of f.
  const UniformGrid ext = widen(bg, std::max(std::abs(f.grid().t_min()), std::abs(f.grid().t_max())));
  return build_rows(grid, psi.id(), [&](std::size_t k) {
    const SampledSignal row = direct_row(g, psi, grid.scales()[k], ext);
    return mode == CombineMode::Star ? convolve(f, row, bg) : correlate(f, row, bg);
  });
}

Scalogram transform_with_combined_wavelet(const SampledSignal& f, const FractionalWavelet& psi, const SampledSignal& g,
                                          CombineMode mode, const ScaleTranslationGrid& grid) {
  require_theta(grid.theta(), psi.theta(), "transform_with_combined_wavelet");
  if (f.is_zero()) throw Error(ErrorKind::NotAWavelet, "combined wavelet: f is identically zero");
  const ThetaOrder theta = grid.theta();
  const UniformGrid& bg = grid.b_grid();
  const double h = bg.step();
  return build_rows(grid, psi.id() + (mode == CombineMode::Star ? "+f*" : "+fo"), [&](std::size_t k) {
    const double a = grid.scales()[k];
    const double s = time_dilation(a, theta);
    // f(u/s) resampled on the translation step.
    const double e0 = s * f.grid().t_min();
    const double e1 = s * f.grid().t_max();
    const double lo = std::floor(std::min(e0, e1) / h) * h - h;
    const auto count = static_cast<std::size_t>(std::ceil((std::max(e0, e1) - lo) / h)) + 2;
    const UniformGrid fs_grid(lo, h, count);
    const SampledSignal fs = SampledSignal::from_function(fs_grid, [&](double u) { return f.at(u / s); });
    const UniformGrid ext = widen(bg, std::max(std::abs(fs_grid.t_min()), std::abs(fs_grid.t_max())));
    const SampledSignal row = direct_row(g, psi, a, ext);
    const SampledSignal r = mode == CombineMode::Star ? correlate(fs, row, bg) : convolve(fs, row, bg);
    return Complex(1.0 / std::abs(s)) * r;
  });
}

FractionalWavelet combined_wavelet(const SampledSignal& f, const FractionalWavelet& psi, CombineMode mode) {
  if (f.is_zero()) throw Error(ErrorKind::NotAWavelet, "combined wavelet: f is identically zero");
  const UniformGrid& g = psi.signal().grid();
  SampledSignal w = mode == CombineMode::Star ? convolve(f, psi.signal(), g) : correlate(f, psi.signal(), g);
  return FractionalWavelet::from_signal(std::string(mode == CombineMode::Star ? "f*" : "fo") + psi.id(), std::move(w),
                                        psi.theta(), psi.spectrum().grid());
}

WeightedSpectralProfile weighted_profile(const FrSpectrum& H, const FractionalWavelet& chi, double a) {
  if (a == 0.0) throw Error(ErrorKind::ZeroScale, "scale a must be non-zero");
  require_theta(H.theta(), chi.theta(), "weighted_profile");
  const UniformGrid& xg = H.grid();
  const double alpha = H.theta().inverse() - 1.0;
  std::vector<Complex> v(xg.count());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double xi = xg.node(j);
    v[j] = std::pow(std::abs(xi), alpha) * H[j] * std::conj(chi.spectrum_at(a * xi));
  }
  return {xg, std::move(v)};
}

WeightedInnerProduct weighted_inner_product(const SampledSignal& f, const SampledSignal& g,
                                            const FractionalWavelet& phi, const FractionalWavelet& psi, double a,
                                            const UniformGrid& b_grid) {
  if (a == 0.0) throw Error(ErrorKind::ZeroScale, "scale a must be non-zero");
  require_theta(phi.theta(), psi.theta(), "weighted_inner_product");
  const ThetaOrder theta = phi.theta();
  const double alpha = theta.inverse() - 1.0;
  const ScaleTranslationGrid st(b_grid, {a}, theta);
  const Scalogram wf = cfrwt_forward(f, phi, st);
  const Scalogram wg = cfrwt_forward(g, psi, st);
  std::vector<Complex> prod(b_grid.count());
  for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = wf.at(0, j) * std::conj(wg.at(0, j));

  WeightedInnerProduct out;
  out.lhs = integrate_spectral(b_grid, prod, alpha);
  out.plain_lhs = integrate(b_grid, prod);

  const double extent = std::max(f.grid().length(), g.grid().length());
  const UniformGrid xg = spectral_grid(f.grid().step() <= g.grid().step() ? f.grid() : g.grid(), theta, extent);
  const FrSpectrum F = frft_forward(f, theta, xg);
  const FrSpectrum G = frft_forward(g, theta, xg);
  // P conj(Q) without its |xi|^{2 alpha} factor, which integrate_spectral applies.
  std::vector<Complex> pq(xg.count());
  for (std::size_t j = 0; j < pq.size(); ++j) {
    const double axi = a * xg.node(j);
    pq[j] = F[j] * std::conj(G[j]) * std::conj(phi.spectrum_at(axi)) * psi.spectrum_at(axi);
  }
  const double pi = std::numbers::pi;
  const double scale_a = std::pow(std::abs(a), theta.inverse());
  out.rhs = scale_a / (4.0 * pi * pi * theta.value() * theta.value()) * integrate_spectral(xg, pq, 2.0 * alpha);
  out.plain_rhs = scale_a / (2.0 * pi * theta.value()) * integrate_spectral(xg, pq, alpha);
  return out;
}

}  // namespace frwt
