#include "cspec/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

#include "cspec/error.hpp"

namespace cspec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

template <typename T>
bool parse_number(std::string_view text, T& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open '{}' for reading", path.string()));
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, fmt::format("cannot open '{}' for writing", path.string()));
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::Io, fmt::format("failed writing '{}'", path.string()));
}

void write_header(std::ostream& out, std::string_view title, const Metadata& meta) {
  out << "# cspec " << title << '\n';
  for (const auto& [key, value] : meta) out << "# " << key << ": " << value << '\n';
}

std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

Metadata spectrum_meta(const CompressionSpectrum& spectrum, Metadata meta) {
  meta["tool_version"] = std::string(kVersion);
  meta.try_emplace("original_length", std::to_string(spectrum.origin_length()));
  return meta;
}

SpectrumFileContent read_structured_spectrum(const std::string& text, const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, fmt::format("{}: {}", path.string(), e.what()));
  }
  try {
    SpectrumFileContent content;
    for (const auto& [key, value] : doc.at("metadata").items()) {
      content.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
    std::size_t origin = 0;
    if (auto it = content.meta.find("original_length"); it != content.meta.end()) {
      parse_number(std::string_view(it->second), origin);
    }
    content.spectrum = CompressionSpectrum(origin);
    for (const auto& row : doc.at("spectrum")) {
      content.spectrum.insert(row.at("scale").get<Scale>(),
                              SpectrumPoint{row.at("cr").get<double>(), row.at("log2_cr").get<double>()});
    }
    return content;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, fmt::format("{}: malformed spectrum document: {}", path.string(), e.what()));
  }
}

}  // namespace

int output_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr) return kDefaultPrecision;
  int value = 0;
  const std::string_view text(env);
  if (!parse_number(trim(text), value) || value < 1 || value > 17) return kDefaultPrecision;
  return value;
}

std::string format_real(double value, int decimals) {
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return fmt::format("{}", value);
  if (std::abs(value) < 0.1) return fmt::format("{:.{}g}", value, decimals);
  std::string s = fmt::format("{:.{}f}", value, decimals);
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::vector<double> read_series(const std::filesystem::path& path, const SeriesReadOptions& opts) {
  auto in = open_input(path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = opts.format == SeriesFormat::Delimited && opts.header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (skippable(t)) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::string_view field = t;
    if (opts.format == SeriesFormat::Delimited) {
      const auto fields = split(t, opts.delimiter);
      if (opts.column >= fields.size()) {
        throw Error(ErrorKind::Parse, fmt::format("{}:{}: no column {} (line has {} fields)", path.string(), line_no,
                                                  opts.column, fields.size()));
      }
      field = fields[opts.column];
    }
    double v = 0.0;
    if (!parse_number(field, v) || !std::isfinite(v)) {
      throw Error(ErrorKind::Parse,
                  fmt::format("{}:{}: cannot parse '{}' as a real number", path.string(), line_no, field));
    }
    values.push_back(v);
  }
  if (values.empty()) throw Error(ErrorKind::InvalidInput, fmt::format("{}: no values", path.string()));
  return values;
}

std::vector<SymbolId> read_symbols(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<SymbolId> symbols;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (skippable(t)) continue;
    std::istringstream tokens{std::string(t)};
    std::string token;
    while (tokens >> token) {
      SymbolId id = 0;
      if (!parse_number(std::string_view(token), id)) {
        throw Error(ErrorKind::Parse, fmt::format("{}:{}: '{}' is not a non-negative integer symbol", path.string(),
                                                  line_no, token));
      }
      symbols.push_back(id);
    }
  }
  if (symbols.empty()) throw Error(ErrorKind::InvalidInput, fmt::format("{}: no symbols", path.string()));
  return symbols;
}

void write_series(const std::filesystem::path& path, const std::vector<double>& values, const Metadata& meta) {
  auto out = open_output(path);
  Metadata m = meta;
  m["tool_version"] = std::string(kVersion);
  m["length"] = std::to_string(values.size());
  write_header(out, "series", m);
  for (double v : values) out << fmt::format("{:.17g}\n", v);
  finish(out, path);
}

Metadata trace_metadata(const SpectrumTrace& trace) {
  return {
      {"original_length", std::to_string(trace.original_length)},
      {"final_length", std::to_string(trace.final_length)},
      {"stop_reason", std::string(to_string(trace.stop_reason))},
      {"steps", std::to_string(trace.steps.size())},
  };
}

void write_spectrum(std::ostream& out, const CompressionSpectrum& spectrum, const Metadata& meta,
                    const SpectrumWriteOptions& opts) {
  const Metadata m = spectrum_meta(spectrum, meta);
  if (opts.format == SpectrumFormat::Structured) {
    nlohmann::json doc;
    doc["metadata"] = m;
    doc["spectrum"] = nlohmann::json::array();
    for (const auto& [s, p] : spectrum.points()) {
      nlohmann::json row{{"scale", s}, {"cr", p.cr}, {"log2_cr", p.log2_cr}};
      if (opts.loglog) row["log2_scale"] = std::log2(static_cast<double>(s));
      doc["spectrum"].push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
  } else {
    write_header(out, "spectrum", m);
    out << (opts.loglog ? "scale,cr,log2_cr,log2_scale\n" : "scale,cr,log2_cr\n");
    for (const auto& [s, p] : spectrum.points()) {
      out << s << ',' << format_real(p.cr, opts.precision) << ',' << format_real(p.log2_cr, opts.precision);
      if (opts.loglog) out << ',' << format_real(std::log2(static_cast<double>(s)), opts.precision);
      out << '\n';
    }
  }
}

void write_spectrum(const std::filesystem::path& path, const CompressionSpectrum& spectrum, const Metadata& meta,
                    const SpectrumWriteOptions& opts) {
  auto out = open_output(path);
  write_spectrum(out, spectrum, meta, opts);
  finish(out, path);
}

SpectrumFileContent read_spectrum(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (const auto t = trim(text); !t.empty() && t.front() == '{') return read_structured_spectrum(text, path);

  SpectrumFileContent content;
  std::vector<std::string> rows;
  std::vector<std::size_t> row_lines;
  std::vector<std::string_view> columns;
  std::string header;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string_view body = trim(t.substr(1));
      if (const auto colon = body.find(':'); colon != std::string_view::npos) {
        content.meta[std::string(trim(body.substr(0, colon)))] = std::string(trim(body.substr(colon + 1)));
      }
      continue;
    }
    if (header.empty()) {
      header = std::string(t);
      columns = split(header, ',');
      continue;
    }
    rows.emplace_back(t);
    row_lines.push_back(line_no);
  }

  auto column_index = [&](std::string_view name) -> std::size_t {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return i;
    }
    throw Error(ErrorKind::Parse, fmt::format("{}: missing '{}' column", path.string(), name));
  };
  if (header.empty()) throw Error(ErrorKind::Parse, fmt::format("{}: no column header", path.string()));
  const std::size_t scale_col = column_index("scale");
  const std::size_t cr_col = column_index("cr");
  const std::size_t log_col = column_index("log2_cr");

  std::size_t origin = 0;
  if (auto it = content.meta.find("original_length"); it != content.meta.end()) {
    parse_number(std::string_view(it->second), origin);
  }
  content.spectrum = CompressionSpectrum(origin);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto fields = split(rows[r], ',');
    Scale s = 0;
    SpectrumPoint p;
    if (fields.size() != columns.size() || !parse_number(fields[scale_col], s) || !parse_number(fields[cr_col], p.cr) ||
        !parse_number(fields[log_col], p.log2_cr)) {
      throw Error(ErrorKind::Parse, fmt::format("{}:{}: malformed spectrum row", path.string(), row_lines[r]));
    }
    content.spectrum.insert(s, p);
  }
  return content;
}

void write_trace(std::ostream& out, const SpectrumTrace& trace, const Metadata& meta, int precision) {
  Metadata m = meta;
  m.merge(trace_metadata(trace));
  m["tool_version"] = std::string(kVersion);
  write_header(out, "trace", m);
  out << "iteration,left,right,pair_scale,new_symbol,occurrences,length_before,length_after,cr,log2_cr\n";
  for (const auto& s : trace.steps) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", s.iteration, s.pair.first, s.pair.second, s.pair_scale,
                       s.new_symbol, s.occurrences, s.length_before, s.length_after, format_real(s.cr, precision),
                       format_real(std::log2(s.cr), precision));
  }
}

void write_trace(const std::filesystem::path& path, const SpectrumTrace& trace, const Metadata& meta, int precision) {
  auto out = open_output(path);
  write_trace(out, trace, meta, precision);
  finish(out, path);
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, const Metadata& meta, int precision) {
  Metadata m = meta;
  m["tool_version"] = std::string(kVersion);
  m["rows"] = std::to_string(rows.size());
  write_header(out, "sweep", m);
  out << "a,lyapunov,bandwidth\n";
  for (const auto& r : rows) {
    out << format_real(r.a, precision) << ',' << format_real(r.lyapunov, precision) << ',' << r.bandwidth << '\n';
  }
}

}  // namespace cspec
