#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cspec/analysis.hpp"
#include "cspec/engine.hpp"
#include "cspec/error.hpp"
#include "cspec/io.hpp"
#include "cspec/signals.hpp"

namespace cspec::cli {

namespace {

struct InputOptions {
  std::string path;
  bool symbolic = false;
  int bins = 8;
  std::string format = "plain";
  std::size_t column = 0;
  char delimiter = ',';
  bool header = false;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("input", in.path, "Series file (one value per line, '#' comments)")->required();
  cmd.add_option("--bins", in.bins, "Number of equal-width quantization bins")->capture_default_str()->check(
      CLI::Range(2, 1 << 20));
  cmd.add_flag("--symbolic", in.symbolic, "Input is already symbolic: whitespace-separated integer ids");
  cmd.add_option("--input-format", in.format, "plain or delimited")
      ->capture_default_str()
      ->check(CLI::IsMember({"plain", "delimited"}));
  cmd.add_option("--column", in.column, "0-based column for delimited input")->capture_default_str();
  cmd.add_option("--delimiter", in.delimiter, "Field delimiter for delimited input")->capture_default_str();
  cmd.add_flag("--header", in.header, "Delimited input has a column-name line");
}

SymbolicSequence load_sequence(const InputOptions& in) {
  if (in.symbolic) return make_symbolic(read_symbols(in.path));
  SeriesReadOptions opts;
  opts.format = in.format == "delimited" ? SeriesFormat::Delimited : SeriesFormat::Plain;
  opts.column = in.column;
  opts.delimiter = in.delimiter;
  opts.header = in.header;
  return quantize(read_series(in.path, opts), in.bins);
}

Metadata input_metadata(const InputOptions& in) {
  Metadata m{{"input", in.path}, {"symbolic", in.symbolic ? "true" : "false"}};
  if (!in.symbolic) m["bins"] = std::to_string(in.bins);
  return m;
}

// Writes to `path`, or to `out` when no path was given.
template <typename WriteStream>
void emit(const std::string& path, std::ostream& out, WriteStream&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Io, fmt::format("cannot open '{}' for writing", path));
  write(file);
  file.flush();
  if (!file) throw Error(ErrorKind::Io, fmt::format("failed writing '{}'", path));
}

std::vector<double> parse_pattern(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, fmt::format("bad pattern value '{}'", item));
    }
  }
  return values;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compression spectrum toolkit: per-scale compression ratios of time series"};
  app.name("cspec");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic test signal");
  std::string kind;
  std::size_t gen_length = 2000;
  std::string pattern = "1,2,3,4,5,6,7,8";
  double freq = 50.0;
  double fs = 1000.0;
  double amplitude = 1.0;
  double a = 4.0;
  double x0 = kLogisticDefaultX0;
  std::size_t transient = kLogisticDefaultTransient;
  std::uint64_t seed = 1;
  std::string gen_output;
  gen->add_option("--kind", kind, "Signal kind")
      ->required()
      ->check(CLI::IsMember({"repeating", "sinusoid", "logistic", "uniform", "pink"}));
  gen->add_option("--length", gen_length, "Number of samples")->capture_default_str();
  gen->add_option("--pattern", pattern, "Comma-separated values (repeating)")->capture_default_str();
  gen->add_option("--freq", freq, "Frequency w in Hz (sinusoid)")->capture_default_str();
  gen->add_option("--fs", fs, "Sampling rate in Hz (sinusoid)")->capture_default_str();
  gen->add_option("--amplitude", amplitude, "Amplitude (sinusoid)")->capture_default_str();
  gen->add_option("--a", a, "Map parameter (logistic)")->capture_default_str();
  gen->add_option("--x0", x0, "Initial condition (logistic)")->capture_default_str();
  gen->add_option("--transient", transient, "Discarded iterations (logistic)")->capture_default_str();
  gen->add_option("--seed", seed, "Seed (uniform, pink)")->capture_default_str();
  gen->add_option("-o,--output", gen_output, "Output series file")->required();

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Compute the compression spectrum of a series");
  InputOptions spec_in;
  std::string spec_output;
  std::string trace_output;
  std::string spec_format = "delimited";
  bool loglog = false;
  add_input_options(*spec, spec_in);
  spec->add_option("-o,--output", spec_output, "Spectrum file (stdout if omitted)");
  spec->add_option("--trace", trace_output, "Also write the substitution trace here");
  spec->add_option("--format", spec_format, "delimited or structured")
      ->capture_default_str()
      ->check(CLI::IsMember({"delimited", "structured"}));
  spec->add_flag("--loglog", loglog, "Add a log2(scale) column");

  // etc
  auto* etc = app.add_subcommand("etc", "Effort-to-compress: substitutions until the sequence is trivial");
  InputOptions etc_in;
  add_input_options(*etc, etc_in);

  // fit
  auto* fit = app.add_subcommand("fit", "Straight-line fit to a spectrum file in log-log");
  std::string fit_input;
  fit->add_option("spectrum", fit_input, "Spectrum file")->required();

  // bandwidth
  auto* bw = app.add_subcommand("bandwidth", "Number of scales with CR > 1 in a spectrum file");
  std::string bw_input;
  bw->add_option("spectrum", bw_input, "Spectrum file")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Logistic-map sweep of Lyapunov exponent and bandwidth");
  SweepParams sp;
  std::string sweep_output;
  sweep->add_option("--a-min", sp.a_min)->capture_default_str();
  sweep->add_option("--a-max", sp.a_max)->capture_default_str();
  sweep->add_option("--step", sp.step)->capture_default_str();
  sweep->add_option("--length", sp.length)->capture_default_str();
  sweep->add_option("--bins", sp.bins)->capture_default_str()->check(CLI::Range(2, 1 << 20));
  sweep->add_option("--x0", sp.x0)->capture_default_str();
  sweep->add_option("--transient", sp.transient)->capture_default_str();
  sweep->add_option("--lyapunov-n", sp.lyapunov_n, "Iterates averaged for the Lyapunov exponent")
      ->capture_default_str();
  sweep->add_option("--threads", sp.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sweep->add_option("-o,--output", sweep_output, "Output table (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << failing->help();
    return kExitUsage;
  }

  const int precision = output_precision();
  try {
    if (gen->parsed()) {
      std::vector<double> series;
      Metadata meta{{"kind", kind}, {"length", std::to_string(gen_length)}};
      if (kind == "repeating") {
        series = gen_repeating(parse_pattern(pattern), gen_length);
        meta["pattern"] = pattern;
      } else if (kind == "sinusoid") {
        if (!(fs > 2.0 * freq)) {
          err << fmt::format("warning: fs = {} Hz does not exceed 2w = {} Hz; the sinusoid is aliased\n", fs,
                             2.0 * freq);
        }
        series = gen_sinusoid(freq, fs, gen_length, amplitude);
        meta.merge(Metadata{{"freq", fmt::format("{}", freq)},
                            {"fs", fmt::format("{}", fs)},
                            {"amplitude", fmt::format("{}", amplitude)}});
      } else if (kind == "logistic") {
        series = gen_logistic(a, x0, gen_length, transient);
        meta.merge(Metadata{
            {"a", fmt::format("{}", a)}, {"x0", fmt::format("{}", x0)}, {"transient", std::to_string(transient)}});
      } else {
        series = kind == "uniform" ? gen_uniform(gen_length, seed) : gen_pink(gen_length, seed);
        meta.merge(Metadata{{"seed", std::to_string(seed)}, {"rng", std::string(kRngAlgorithm)}});
      }
      write_series(gen_output, series, meta);
    } else if (spec->parsed()) {
      const auto result = run_spectrum(load_sequence(spec_in));
      Metadata meta = input_metadata(spec_in);
      meta.merge(trace_metadata(result.trace));
      SpectrumWriteOptions opts;
      opts.format = spec_format == "structured" ? SpectrumFormat::Structured : SpectrumFormat::Delimited;
      opts.loglog = loglog;
      opts.precision = precision;
      emit(spec_output, out, [&](std::ostream& o) { write_spectrum(o, result.spectrum, meta, opts); });
      if (!trace_output.empty()) write_trace(trace_output, result.trace, input_metadata(spec_in), precision);
    } else if (etc->parsed()) {
      const auto result = run_etc(load_sequence(etc_in));
      out << fmt::format("iterations: {}\nnormalized: {}\n", result.iterations, result.normalized);
    } else if (fit->parsed()) {
      const auto content = read_spectrum(fit_input);
      const auto f = loglog_fit(content.spectrum);
      out << fmt::format("slope: {}\nintercept: {}\nr_squared: {}\nn_points: {}\n", f.slope, f.intercept,
                         f.r_squared, f.n_points);
    } else if (bw->parsed()) {
      out << bandwidth(read_spectrum(bw_input).spectrum) << '\n';
    } else if (sweep->parsed()) {
      const auto rows = bifurcation_sweep(sp);
      const Metadata meta{{"a_min", fmt::format("{}", sp.a_min)},
                          {"a_max", fmt::format("{}", sp.a_max)},
                          {"step", fmt::format("{}", sp.step)},
                          {"length", std::to_string(sp.length)},
                          {"bins", std::to_string(sp.bins)},
                          {"x0", fmt::format("{}", sp.x0)},
                          {"transient", std::to_string(sp.transient)},
                          {"lyapunov_n", std::to_string(sp.lyapunov_n)}};
      emit(sweep_output, out, [&](std::ostream& o) { write_sweep(o, rows, meta, precision); });
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace cspec::cli
