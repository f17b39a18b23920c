#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frwt/verify.hpp"

namespace frwt::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || !std::isfinite(v)) throw Error(ErrorKind::Format, what + ": not a number '" + s + "'");
  return v;
}

std::size_t to_count(const std::string& s, const std::string& what) {
  const double v = to_double(s, what);
  if (v < 1.0 || v != std::floor(v)) throw Error(ErrorKind::Format, what + ": count must be a positive integer");
  return static_cast<std::size_t>(v);
}

Json grid_json(const UniformGrid& g) { return {{"min", g.t_min()}, {"max", g.t_max()}, {"count", g.count()}}; }

UniformGrid grid_from_json(const Json& j, const std::string& what) {
  try {
    return UniformGrid::span(j.at("min").get<double>(), j.at("max").get<double>(), j.at("count").get<std::size_t>());
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Format, "sidecar: malformed " + what);
  }
}

ThetaOrder checked_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw Error(ErrorKind::InvalidOrder, "theta must lie in (0,1]");
  return ThetaOrder(theta);
}

struct LoadedWavelet {
  FractionalWavelet wavelet;
  Json record;
};

LoadedWavelet load_wavelet(const std::string& name, const std::string& file, const UniformGrid& wavelet_grid,
                           ThetaOrder theta) {
  if (!file.empty()) {
    const SampledSignal s = read_signal_csv(file);
    const std::string id = std::filesystem::path(file).stem().string();
    return {FractionalWavelet::from_signal(id, s, theta), {{"source", "file"}, {"path", file}}};
  }
  return {catalog(name, wavelet_grid, theta), {{"source", "catalog"}, {"name", name}, {"grid", grid_json(wavelet_grid)}}};
}

LoadedWavelet wavelet_from_record(const Json& record, ThetaOrder theta) {
  const std::string source = record.value("source", "");
  if (source == "file") return load_wavelet("", record.at("path").get<std::string>(), UniformGrid(0.0, 1.0, 2), theta);
  if (source == "catalog") {
    return load_wavelet(record.at("name").get<std::string>(), "", grid_from_json(record.at("grid"), "wavelet grid"),
                        theta);
  }
  throw Error(ErrorKind::Format, "sidecar: unknown wavelet source");
}

ScaleTranslationGrid scale_grid(const RunConfig& c, const UniformGrid& signal_grid, ThetaOrder theta) {
  UniformGrid bg = default_translation_grid(signal_grid);
  if (c.translations) bg = UniformGrid::span(c.translations->min, c.translations->max, c.translations->count);
  return ScaleTranslationGrid::log_spaced(bg, c.scales.min, c.scales.max, c.scales.count, theta, !c.scales.is_signed);
}

void emit_json(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json(out, j);
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::Format, message);
}

}  // namespace

Json RunConfig::to_json() const {
  Json j = {{"theta", theta},
            {"wavelet", wavelet},
            {"wavelet_file", wavelet_file},
            {"input", input},
            {"out", out},
            {"scales", {{"min", scales.min}, {"max", scales.max}, {"count", scales.count}, {"signed", scales.is_signed}}},
            {"normalized", normalized},
            {"direct", direct}};
  if (translations) {
    j["translations"] = {{"min", translations->min}, {"max", translations->max}, {"count", translations->count}};
  }
  return j;
}

ScaleSpec parse_scales(const std::string& text) {
  const auto f = split_list(text);
  if (f.size() != 3 && f.size() != 4) throw Error(ErrorKind::Format, "--scales expects min,max,count[,signed]");
  ScaleSpec s;
  s.min = to_double(f[0], "--scales");
  s.max = to_double(f[1], "--scales");
  s.count = to_count(f[2], "--scales");
  if (f.size() == 4) {
    if (f[3] == "signed" || f[3] == "true" || f[3] == "1") {
      s.is_signed = true;
    } else if (f[3] == "positive" || f[3] == "false" || f[3] == "0") {
      s.is_signed = false;
    } else {
      throw Error(ErrorKind::Format, "--scales: fourth field must be signed or positive");
    }
  }
  if (!(s.min > 0.0) || !(s.max >= s.min)) throw Error(ErrorKind::InvalidGrid, "--scales: need 0 < min <= max");
  return s;
}

TranslationSpec parse_translations(const std::string& text) {
  const auto f = split_list(text);
  if (f.size() != 3) throw Error(ErrorKind::Format, "--translations expects min,max,count");
  TranslationSpec t{to_double(f[0], "--translations"), to_double(f[1], "--translations"),
                    to_count(f[2], "--translations")};
  if (!(t.max > t.min) || t.count < 2) throw Error(ErrorKind::InvalidGrid, "--translations: need min < max, count >= 2");
  return t;
}

void apply_config(RunConfig& c, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Format, "config: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "theta") {
        c.theta = v.get<double>();
      } else if (key == "wavelet") {
        c.wavelet = v.get<std::string>();
      } else if (key == "wavelet_file") {
        c.wavelet_file = v.get<std::string>();
      } else if (key == "input") {
        c.input = v.get<std::string>();
      } else if (key == "out") {
        c.out = v.get<std::string>();
      } else if (key == "scales") {
        if (v.is_string()) {
          c.scales = parse_scales(v.get<std::string>());
        } else {
          for (const auto& [k, _] : v.items()) {
            if (k != "min" && k != "max" && k != "count" && k != "signed")
              throw Error(ErrorKind::Format, "config: unknown key 'scales." + k + "'");
          }
          std::ostringstream s;
          s << format_number(v.at("min").get<double>()) << ',' << format_number(v.at("max").get<double>()) << ','
            << v.at("count").get<std::size_t>() << ',' << (v.value("signed", true) ? "signed" : "positive");
          c.scales = parse_scales(s.str());
        }
      } else if (key == "translations") {
        if (v.is_string()) {
          c.translations = parse_translations(v.get<std::string>());
        } else {
          for (const auto& [k, _] : v.items()) {
            if (k != "min" && k != "max" && k != "count")
              throw Error(ErrorKind::Format, "config: unknown key 'translations." + k + "'");
          }
          std::ostringstream s;
          s << format_number(v.at("min").get<double>()) << ',' << format_number(v.at("max").get<double>()) << ','
            << v.at("count").get<std::size_t>();
          c.translations = parse_translations(s.str());
        }
      } else if (key == "normalized") {
        c.normalized = v.get<bool>();
      } else if (key == "direct") {
        c.direct = v.get<bool>();
      } else if (key == "reference") {
        c.reference = v.get<std::string>();
      } else if (key == "synthesis_wavelet") {
        c.synthesis_wavelet = v.get<std::string>();
      } else if (key == "spectrum") {
        c.spectrum = v.get<std::string>();
      } else if (key == "bounds") {
        c.bounds = v.get<std::string>();
      } else if (key == "nu") {
        c.nu = v.get<double>();
      } else if (key == "only") {
        c.only = v.is_string() ? split_list(v.get<std::string>()) : v.get<std::vector<std::string>>();
      } else if (key == "perturb") {
        c.perturb = v.get<double>();
      } else {
        throw Error(ErrorKind::Format, "config: unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Format, "config: bad value for '" + key + "' (" + e.what() + ")");
    }
  }
}

int cmd_transform(const RunConfig& c) {
  require(!c.input.empty(), "transform: --input is required");
  require(!c.out.empty(), "transform: --out is required");
  const ThetaOrder theta = checked_theta(c.theta);
  const SampledSignal f = read_signal_csv(c.input);
  const LoadedWavelet lw = load_wavelet(c.wavelet, c.wavelet_file, default_wavelet_grid(f.grid()), theta);
  const ScaleTranslationGrid grid = scale_grid(c, f.grid(), theta);
  Scalogram s = c.direct ? cfrwt_forward(f, lw.wavelet, grid) : cfrwt_transform(f, lw.wavelet, grid);
  if (c.normalized) {
    const double k = 1.0 / std::sqrt(lw.wavelet.admissibility());
    std::vector<Complex> v(s.values().begin(), s.values().end());
    for (auto& x : v) x *= k;
    s = Scalogram(grid, std::move(v), s.wavelet_id(), true, k);
  }
  const Json extra = {{"wavelet", lw.record},
                      {"admissibility", lw.wavelet.admissibility()},
                      {"signal_grid", grid_json(f.grid())},
                      {"method", c.direct ? "direct" : "spectral"},
                      {"config", c.to_json()}};
  write_scalogram(c.out, s, extra);
  std::cout << "wrote " << grid.scale_count() * grid.translation_count() << " rows to " << c.out << '\n';
  return kOk;
}

int cmd_reconstruct(const RunConfig& c) {
  require(!c.input.empty(), "reconstruct: --input (scalogram CSV) is required");
  require(!c.out.empty(), "reconstruct: --out is required");
  const LoadedScalogram loaded = read_scalogram(c.input);
  const Scalogram& s = loaded.scalogram;
  const ThetaOrder theta = s.grid().theta();
  const Json& side = loaded.sidecar;
  require(side.contains("wavelet") && side.contains("signal_grid"), "sidecar: missing wavelet or signal_grid");
  const LoadedWavelet analysis = wavelet_from_record(side.at("wavelet"), theta);
  require(analysis.wavelet.id() == s.wavelet_id(), "sidecar: wavelet id does not match its record");
  const UniformGrid t_grid = grid_from_json(side.at("signal_grid"), "signal_grid");

  Complex C = analysis.wavelet.admissibility();
  std::optional<FractionalWavelet> synthesis;
  if (!c.synthesis_wavelet.empty()) {
    synthesis = catalog(c.synthesis_wavelet, analysis.wavelet.signal().grid(), theta);
    const CrossAdmissibility cross = cross_admissibility(analysis.wavelet, *synthesis);
    if (!cross.finite || is_degenerate(cross, analysis.wavelet, *synthesis)) {
      throw Error(ErrorKind::DegeneratePair, "wavelets '" + analysis.wavelet.id() + "' and '" + synthesis->id() +
                                                 "' have cross constant C = 0 (or divergent): no reconstruction");
    }
    C = cross.value;
  }
  const SampledSignal f = reconstruct(s, synthesis ? *synthesis : analysis.wavelet, C, t_grid);
  write_signal_csv(c.out, f);
  std::cout << "translation_edge_mass " << format_number(translation_edge_mass(s)) << '\n';
  if (!c.reference.empty()) {
    const SampledSignal ref = read_signal_csv(c.reference);
    if (!ref.grid().same_as(f.grid()))
      throw Error(ErrorKind::GridMismatch, "reference signal is not on the reconstruction grid");
    const double den = norm(ref, Norm::L2);
    const double err = den > 0.0 ? norm(f - ref, Norm::L2) / den : norm(f, Norm::L2);
    std::cout << "relative_l2_error " << format_number(err) << '\n';
  }
  return kOk;
}

int cmd_analyze(const RunConfig& c) {
  const ThetaOrder theta = checked_theta(c.theta);
  std::optional<SampledSignal> f;
  if (!c.input.empty()) f = read_signal_csv(c.input);
  const UniformGrid wg = default_wavelet_grid(f ? f->grid() : UniformGrid::span(-16.0, 16.0, 2049));
  const LoadedWavelet lw = load_wavelet(c.wavelet, c.wavelet_file, wg, theta);
  const FractionalWavelet& w = lw.wavelet;
  const MollifierFamily M = MollifierFamily::gaussian();

  Json j = {{"wavelet", w.id()}, {"theta", theta.value()}, {"source", lw.record}};
  j["admissibility"] = w.admissibility();
  j["l1_norm"] = w.l1_norm();
  j["l2_norm"] = w.l2_norm();
  j["compact_support"] = w.compact_support();
  j["support"] = w.support() ? Json::array({w.support()->first, w.support()->second}) : Json(nullptr);
  j["hardy_estimate"] = hardy_norm(w.signal(), M);
  j["morrey_estimate"] = morrey_norm(w.signal(), BallFamily::for_grid(w.signal().grid(), c.nu));
  j["nu"] = c.nu;
  Json cross = Json::object();
  for (const auto& name : catalog_names()) {
    if (lw.record.value("name", "") == name) continue;
    const FractionalWavelet other = catalog(name, w.signal().grid(), theta);
    const CrossAdmissibility x = cross_admissibility(w, other);
    cross[name] = {{"value", Json::array({x.value.real(), x.value.imag()})},
                   {"absolute_integral", x.absolute_integral},
                   {"finite", x.finite},
                   {"degenerate", is_degenerate(x, w, other)}};
  }
  j["cross"] = cross;
  if (f) {
    j["signal"] = {{"l1_norm", norm(*f, Norm::L1)},
                   {"l2_norm", norm(*f, Norm::L2)},
                   {"hardy_estimate", hardy_norm(*f, M)},
                   {"morrey_estimate", morrey_norm(*f, BallFamily::for_grid(f->grid(), c.nu))}};
  }
  j["mollifier"] = M.description();
  if (!c.bounds.empty()) {
    require(f.has_value(), "analyze: --bounds needs --input");
    require(c.bounds == "hardy" || c.bounds == "morrey", "analyze: --bounds must be hardy or morrey");
    std::vector<double> scales;
    for (int k = -2; k <= 2; ++k) {
      scales.push_back(std::ldexp(1.0, k));
      scales.push_back(-std::ldexp(1.0, k));
    }
    const BoundReport r = c.bounds == "hardy"
                              ? hardy_bound_report(*f, std::nullopt, w, w, scales, M)
                              : morrey_bound_report(*f, std::nullopt, w, w, scales, BallFamily::for_grid(f->grid(), c.nu));
    j["bounds"] = to_json(r);
  }
  if (!c.spectrum.empty()) write_spectrum_csv(c.spectrum, w.spectrum());
  emit_json(j, c.out);
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  VerifyOptions options;
  options.only = c.only;
  options.perturb = c.perturb;
  const VerifyReport report = run_verify(options);
  emit_json(report.to_json(), c.out);
  bool ok = true;
  for (const auto& check : report.checks) {
    if (check.pass || !check.gating) continue;
    ok = false;
    std::cerr << "FAIL " << check.group << '/' << check.name << ": " << format_number(check.value) << " (threshold "
              << format_number(check.threshold) << ")\n";
  }
  return ok ? kOk : kVerifyFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"Continuous fractional wavelet transform toolkit"};
  app.require_subcommand(1);
  RunConfig given;
  std::string config_path;
  std::string scales_text;
  std::string translations_text;
  // Options given on the command line, applied after the config file.
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;

  const auto shared = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config; flags override its values");
    overrides.push_back({sub->add_option("--theta", given.theta, "fractional order in (0,1]"),
                         [&](RunConfig& c) { c.theta = given.theta; }});
    overrides.push_back({sub->add_option("--wavelet", given.wavelet, "catalog wavelet name"),
                         [&](RunConfig& c) { c.wavelet = given.wavelet; }});
    overrides.push_back({sub->add_option("--wavelet-file", given.wavelet_file, "wavelet samples (t,re,im CSV)"),
                         [&](RunConfig& c) { c.wavelet_file = given.wavelet_file; }});
    overrides.push_back({sub->add_option("--input", given.input, "input CSV"),
                         [&](RunConfig& c) { c.input = given.input; }});
    overrides.push_back({sub->add_option("--out", given.out, "output path"), [&](RunConfig& c) { c.out = given.out; }});
    overrides.push_back({sub->add_option("--scales", scales_text, "min,max,count[,signed|positive]"),
                         [&](RunConfig& c) { c.scales = parse_scales(scales_text); }});
    overrides.push_back({sub->add_option("--translations", translations_text, "min,max,count"),
                         [&](RunConfig& c) { c.translations = parse_translations(translations_text); }});
    overrides.push_back({sub->add_flag("--normalized", given.normalized, "divide by sqrt(C)"),
                         [&](RunConfig& c) { c.normalized = given.normalized; }});
  };

  CLI::App* transform = app.add_subcommand("transform", "signal CSV -> scalogram CSV + sidecar");
  shared(transform);
  overrides.push_back({transform->add_flag("--direct", given.direct, "direct quadrature instead of the spectral path"),
                       [&](RunConfig& c) { c.direct = given.direct; }});

  CLI::App* recon = app.add_subcommand("reconstruct", "scalogram CSV + sidecar -> signal CSV");
  shared(recon);
  overrides.push_back({recon->add_option("--reference", given.reference, "signal CSV to compare against"),
                       [&](RunConfig& c) { c.reference = given.reference; }});
  overrides.push_back({recon->add_option("--synthesis-wavelet", given.synthesis_wavelet, "catalog wavelet for synthesis"),
                       [&](RunConfig& c) { c.synthesis_wavelet = given.synthesis_wavelet; }});

  CLI::App* analyze = app.add_subcommand("analyze", "admissibility, cross constants and norm estimates");
  shared(analyze);
  overrides.push_back({analyze->add_option("--spectrum", given.spectrum, "write the wavelet's FrFT (xi,re,im CSV)"),
                       [&](RunConfig& c) { c.spectrum = given.spectrum; }});
  overrides.push_back({analyze->add_option("--bounds", given.bounds, "hardy|morrey bound report for --input"),
                       [&](RunConfig& c) { c.bounds = given.bounds; }});
  overrides.push_back({analyze->add_option("--nu", given.nu, "Morrey exponent"), [&](RunConfig& c) { c.nu = given.nu; }});

  CLI::App* verify = app.add_subcommand("verify", "built-in verification suite");
  shared(verify);
  overrides.push_back({verify->add_option("--only", given.only, "groups: frft,wavelet,cfrwt,identities,spaces")
                           ->delimiter(','),
                       [&](RunConfig& c) { c.only = given.only; }});
  overrides.push_back({verify->add_option("--perturb", given.perturb, "multiply C by (1 + p) in reconstruction checks"),
                       [&](RunConfig& c) { c.perturb = given.perturb; }});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) apply_config(config, read_json(config_path));
    for (const auto& [opt, copy] : overrides) {
      if (opt->count() > 0) copy(config);
    }
    if (transform->parsed()) return cmd_transform(config);
    if (recon->parsed()) return cmd_reconstruct(config);
    if (analyze->parsed()) return cmd_analyze(config);
    return cmd_verify(config);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return e.is_hypothesis_violation() ? kHypothesis : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace frwt::cli
