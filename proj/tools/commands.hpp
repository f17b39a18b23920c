#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frwt/io.hpp"

namespace frwt::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kHypothesis = 3 };

struct ScaleSpec {
  double min = kDefaultScaleMin;
  double max = kDefaultScaleMax;
  std::size_t count = kDefaultScalesPerSign;  // per sign
  bool is_signed = true;
};

struct TranslationSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

struct RunConfig {
  double theta = 1.0;
  std::string wavelet = "mexican_hat";
  std::string wavelet_file;
  std::string input;
  std::string out;
  ScaleSpec scales;
  std::optional<TranslationSpec> translations;
  bool normalized = false;
  bool direct = false;
  std::string reference;
  std::string synthesis_wavelet;
  std::string spectrum;
  double nu = 0.5;
  std::string bounds;  // analyze: "hardy" or "morrey" bound report on the input signal
  std::vector<std::string> only;
  double perturb = 0.0;

  Json to_json() const;
};

ScaleSpec parse_scales(const std::string& text);
TranslationSpec parse_translations(const std::string& text);

/// Applies every key of a config file; unknown keys or bad values throw Format.
void apply_config(RunConfig& config, const Json& j);

int cmd_transform(const RunConfig& config);
int cmd_reconstruct(const RunConfig& config);
int cmd_analyze(const RunConfig& config);
int cmd_verify(const RunConfig& config);

/// Full command line -> exit code. Diagnostics go to stderr.
int run(int argc, char** argv);

}  // namespace frwt::cli
