#include "frwt/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace frwt {

namespace {

constexpr double kUniformTolerance = 1e-9;

[[noreturn]] void format_error(const std::string& origin, std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Format, origin + ":" + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(const std::string& s, const std::string& origin, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || s.empty()) format_error(origin, line, "not a number: '" + s + "'");
  if (!std::isfinite(v)) format_error(origin, line, "non-finite value");
  return v;
}

// Data rows as numbers, checking the header and the column count.
std::vector<std::vector<double>> parse_table(const std::string& text, const std::string& origin,
                                             const std::vector<std::string>& header, std::size_t min_columns) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool seen_header = false;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (!seen_header) {
      seen_header = true;
      if (fields.size() < min_columns || fields.size() > header.size())
        format_error(origin, lineno, "expected header starting with '" + header.front() + "'");
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (fields[c] != header[c]) format_error(origin, lineno, "unexpected column '" + fields[c] + "'");
      }
      continue;
    }
    if (fields.size() < min_columns || fields.size() > header.size())
      format_error(origin, lineno, "wrong number of columns");
    std::vector<double> row(header.size(), 0.0);
    for (std::size_t c = 0; c < fields.size(); ++c) row[c] = parse_number(fields[c], origin, lineno);
    rows.push_back(std::move(row));
  }
  if (!seen_header) format_error(origin, lineno, "empty file");
  return rows;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Format, "cannot read '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Format, "cannot write '" + path.string() + "'");
  return out;
}

Json grid_json(const UniformGrid& g) {
  return Json{{"min", g.t_min()}, {"max", g.t_max()}, {"count", g.count()}};
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SampledSignal parse_signal_csv(const std::string& text, const std::string& origin) {
  const auto rows = parse_table(text, origin, {"t", "re", "im"}, 2);
  if (rows.size() < 2) throw Error(ErrorKind::Format, origin + ": a signal needs at least two samples");
  const double t0 = rows.front()[0];
  const double t1 = rows.back()[0];
  if (!(t1 > t0)) throw Error(ErrorKind::Format, origin + ": sample times must increase");
  const double step = (t1 - t0) / static_cast<double>(rows.size() - 1);
  std::vector<Complex> values(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double expect = t0 + static_cast<double>(k) * step;
    if (std::abs(rows[k][0] - expect) > kUniformTolerance * (t1 - t0)) {
      throw Error(ErrorKind::Format,
                  origin + ": sample " + std::to_string(k) + " is off the uniform grid (t = " + format_number(rows[k][0]) + ")");
    }
    values[k] = Complex(rows[k][1], rows[k][2]);
  }
  return SampledSignal(UniformGrid::span(t0, t1, rows.size()), std::move(values));
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
  return parse_signal_csv(read_text(path), path.string());
}

void write_signal_csv(const std::filesystem::path& path, const SampledSignal& f) {
  auto out = open_out(path);
  out << "t,re,im\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    out << format_number(f.grid().node(k)) << ',' << format_number(f[k].real()) << ',' << format_number(f[k].imag())
        << '\n';
  }
}

void write_spectrum_csv(const std::filesystem::path& path, const FrSpectrum& F) {
  auto out = open_out(path);
  out << "xi,re,im\n";
  for (std::size_t k = 0; k < F.size(); ++k) {
    out << format_number(F.grid().node(k)) << ',' << format_number(F[k].real()) << ',' << format_number(F[k].imag())
        << '\n';
  }
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p += ".json";
  return p;
}

Json scalogram_metadata(const Scalogram& s) {
  const ScaleTranslationGrid& g = s.grid();
  Json scales = Json::array();
  for (double a : g.scales()) scales.push_back(a);
  return Json{{"theta", g.theta().value()},
              {"wavelet_id", s.wavelet_id()},
              {"translations", grid_json(g.b_grid())},
              {"scales", scales},
              {"normalized", s.normalized()},
              {"normalization", s.normalization()}};
}

void write_scalogram(const std::filesystem::path& csv, const Scalogram& s, const Json& extra) {
  {
    auto out = open_out(csv);
    out << "b,a,re,im\n";
    const ScaleTranslationGrid& g = s.grid();
    for (std::size_t k = 0; k < g.scale_count(); ++k) {
      const std::string a = format_number(g.scales()[k]);
      for (std::size_t j = 0; j < g.translation_count(); ++j) {
        const Complex& v = s.at(k, j);
        out << format_number(g.b_grid().node(j)) << ',' << a << ',' << format_number(v.real()) << ','
            << format_number(v.imag()) << '\n';
      }
    }
  }
  Json side = scalogram_metadata(s);
  for (const auto& [key, value] : extra.items()) side[key] = value;
  write_json(sidecar_path(csv), side);
}

LoadedScalogram read_scalogram(const std::filesystem::path& csv) {
  const std::filesystem::path side_path = sidecar_path(csv);
  Json side = read_json(side_path);
  const std::string origin = side_path.string();
  double theta = 0.0;
  UniformGrid b_grid(0.0, 1.0, 2);
  std::vector<double> scales;
  std::string id;
  bool normalized = false;
  double normalization = 1.0;
  try {
    theta = side.at("theta").get<double>();
    const Json& t = side.at("translations");
    b_grid = UniformGrid::span(t.at("min").get<double>(), t.at("max").get<double>(), t.at("count").get<std::size_t>());
    scales = side.at("scales").get<std::vector<double>>();
    id = side.at("wavelet_id").get<std::string>();
    normalized = side.at("normalized").get<bool>();
    normalization = side.at("normalization").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, origin + ": malformed sidecar (" + e.what() + ")");
  }
  ScaleTranslationGrid grid(b_grid, scales, ThetaOrder(theta));

  const auto rows = parse_table(read_text(csv), csv.string(), {"b", "a", "re", "im"}, 4);
  if (rows.size() != grid.scale_count() * grid.translation_count()) {
    throw Error(ErrorKind::Format, csv.string() + ": " + std::to_string(rows.size()) + " rows but the sidecar describes " +
                                       std::to_string(grid.scale_count()) + " x " +
                                       std::to_string(grid.translation_count()));
  }
  std::vector<Complex> values(rows.size());
  const double b_tol = 1e-9 * b_grid.length();
  for (std::size_t k = 0; k < grid.scale_count(); ++k) {
    const double a = grid.scales()[k];
    for (std::size_t j = 0; j < grid.translation_count(); ++j) {
      const auto& r = rows[k * grid.translation_count() + j];
      if (std::abs(r[0] - b_grid.node(j)) > b_tol || std::abs(r[1] - a) > 1e-12 * std::abs(a)) {
        throw Error(ErrorKind::Format, csv.string() + ": row " + std::to_string(k * grid.translation_count() + j + 1) +
                                           " does not match the sidecar grid");
      }
      values[k * grid.translation_count() + j] = Complex(r[2], r[3]);
    }
  }
  return {Scalogram(grid, std::move(values), id, normalized, normalization), std::move(side)};
}

Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"check", row.check},
                        {"a", row.a},
                        {"lhs", row.lhs},
                        {"rhs", row.rhs},
                        {"ratio", row.ratio},
                        {"pass", row.pass}});
  }
  return Json{{"theorem", r.theorem},
              {"theta", r.theta},
              {"slack", r.slack},
              {"family", r.family},
              {"all_pass", r.all_pass()},
              {"rows", rows}};
}

void write_json(const std::filesystem::path& path, const Json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

Json read_json(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Format, path.string() + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace frwt
