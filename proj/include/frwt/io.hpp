#pragma once

#include <filesystem>
#include <string>

#include "frwt/cfrwt.hpp"
#include "frwt/frft.hpp"
#include "frwt/grid.hpp"
#include "frwt/spaces.hpp"
#include "json.hpp"

namespace frwt {

using Json = nlohmann::ordered_json;

/// 17 significant digits, round-trip safe.
std::string format_number(double x);

/// `t,re,im` (or `t,re`) with a header line. Rows must sit on a uniform grid
/// to 1e-9 of the span; otherwise Format.
SampledSignal read_signal_csv(const std::filesystem::path& path);
SampledSignal parse_signal_csv(const std::string& text, const std::string& origin = "<memory>");

void write_signal_csv(const std::filesystem::path& path, const SampledSignal& f);
void write_spectrum_csv(const std::filesystem::path& path, const FrSpectrum& F);

/// `scal.csv` -> `scal.csv.json`.
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

/// theta, wavelet id, translation grid, scales and normalization.
Json scalogram_metadata(const Scalogram& s);

/// Writes `b,a,re,im` rows (scale-major) and the sidecar: the metadata plus
/// every key of `extra`.
void write_scalogram(const std::filesystem::path& csv, const Scalogram& s, const Json& extra = Json::object());

struct LoadedScalogram {
  Scalogram scalogram;
  Json sidecar;
};

/// Reads a scalogram CSV and its sidecar; Format when either is malformed
/// or they disagree.
LoadedScalogram read_scalogram(const std::filesystem::path& csv);

Json to_json(const BoundReport& r);

void write_json(const std::filesystem::path& path, const Json& j);
Json read_json(const std::filesystem::path& path);

}  // namespace frwt
