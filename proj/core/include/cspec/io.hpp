#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "cspec/analysis.hpp"
#include "cspec/engine.hpp"

namespace cspec {

inline constexpr std::string_view kVersion = "0.1.0";

/// Name of the optional environment variable overriding the number of
/// decimals written for floating-point columns.
inline constexpr const char* kPrecisionEnv = "CSPEC_PRECISION";
inline constexpr int kDefaultPrecision = 15;

enum class SeriesFormat { Plain, Delimited };

struct SeriesReadOptions {
  SeriesFormat format = SeriesFormat::Plain;
  std::size_t column = 0;  // 0-based, delimited format only
  char delimiter = ',';
  bool header = false;  // skip the first non-comment line
};

/// Blank lines and '#' lines are ignored; anything else that does not parse
/// raises a Parse error naming the 1-based line number.
std::vector<double> read_series(const std::filesystem::path& path, const SeriesReadOptions& opts = {});

/// Whitespace-separated non-negative integer symbols, any number per line.
std::vector<SymbolId> read_symbols(const std::filesystem::path& path);

using Metadata = std::map<std::string, std::string>;

/// One value per line, 17 significant digits, metadata as '#' header lines.
void write_series(const std::filesystem::path& path, const std::vector<double>& values, const Metadata& meta);

enum class SpectrumFormat { Delimited, Structured };

struct SpectrumFileContent {
  Metadata meta;
  CompressionSpectrum spectrum;
};

struct SpectrumWriteOptions {
  SpectrumFormat format = SpectrumFormat::Delimited;
  bool loglog = false;  // add a log2_scale column
  int precision = kDefaultPrecision;
};

/// Precision from CSPEC_PRECISION if set and valid, otherwise the default.
int output_precision();

/// Fixed notation with `decimals` places, trailing zeros trimmed; values
/// below 0.1 in magnitude switch to `decimals` significant digits so small
/// log ratios keep their precision.
std::string format_real(double value, int decimals = kDefaultPrecision);

Metadata trace_metadata(const SpectrumTrace& trace);

void write_spectrum(std::ostream& out, const CompressionSpectrum& spectrum, const Metadata& meta,
                    const SpectrumWriteOptions& opts = {});
void write_spectrum(const std::filesystem::path& path, const CompressionSpectrum& spectrum, const Metadata& meta,
                    const SpectrumWriteOptions& opts = {});

/// Accepts both formats (structured files start with '{').
SpectrumFileContent read_spectrum(const std::filesystem::path& path);

void write_trace(std::ostream& out, const SpectrumTrace& trace, const Metadata& meta,
                 int precision = kDefaultPrecision);
void write_trace(const std::filesystem::path& path, const SpectrumTrace& trace, const Metadata& meta,
                 int precision = kDefaultPrecision);

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, const Metadata& meta,
                 int precision = kDefaultPrecision);

}  // namespace cspec
