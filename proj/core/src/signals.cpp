#include "cspec/signals.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>

#include <fftw3.h>
#include <fmt/format.h>

#include "cspec/error.hpp"

namespace cspec {

namespace {

class UnitRng {
public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

void check_logistic_params(double a, double x0) {
  if (!(a >= 0.0 && a <= 4.0)) throw Error(ErrorKind::InvalidInput, fmt::format("a = {} outside [0, 4]", a));
  if (!(x0 > 0.0 && x0 < 1.0)) throw Error(ErrorKind::InvalidInput, fmt::format("x0 = {} outside (0, 1)", x0));
}

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::vector<double> gen_repeating(std::span<const double> pattern, std::size_t length) {
  if (pattern.empty()) throw Error(ErrorKind::InvalidInput, "repeating pattern is empty");
  if (length == 0) throw Error(ErrorKind::InvalidInput, "length must be at least 1");
  std::vector<double> out(length);
  for (std::size_t k = 0; k < length; ++k) out[k] = pattern[k % pattern.size()];
  return out;
}

std::vector<double> gen_sinusoid(double w, double fs, std::size_t length, double amplitude) {
  if (!(fs > 0.0) || !std::isfinite(fs)) {
    throw Error(ErrorKind::InvalidInput, fmt::format("sampling rate must be positive, got {}", fs));
  }
  if (!std::isfinite(w)) throw Error(ErrorKind::InvalidInput, "frequency must be finite");
  if (length == 0) throw Error(ErrorKind::InvalidInput, "length must be at least 1");
  std::vector<double> out(length);
  for (std::size_t k = 0; k < length; ++k) {
    const double cycle_pos = std::fmod(w * static_cast<double>(k), fs);
    out[k] = amplitude * std::sin(2.0 * std::numbers::pi * cycle_pos / fs);
  }
  return out;
}

std::vector<double> gen_logistic(double a, double x0, std::size_t length, std::size_t transient) {
  check_logistic_params(a, x0);
  if (length == 0) throw Error(ErrorKind::InvalidInput, "length must be at least 1");
  double x = x0;
  for (std::size_t i = 0; i < transient; ++i) x = a * x * (1.0 - x);
  std::vector<double> out(length);
  for (std::size_t k = 0; k < length; ++k) {
    out[k] = x;
    x = a * x * (1.0 - x);
  }
  return out;
}

std::vector<double> gen_uniform(std::size_t length, std::uint64_t seed) {
  if (length == 0) throw Error(ErrorKind::InvalidInput, "length must be at least 1");
  UnitRng rng(seed);
  std::vector<double> out(length);
  for (double& v : out) v = rng.uniform();
  return out;
}

std::vector<double> gen_pink(std::size_t length, std::uint64_t seed) {
  if (length < 2) throw Error(ErrorKind::InvalidInput, "pink noise needs at least 2 samples");
  if (length > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw Error(ErrorKind::InvalidInput, "pink noise length exceeds the FFT size limit");
  }
  const int n = static_cast<int>(length);
  const std::size_t n_bins = length / 2 + 1;

  UnitRng rng(seed);
  std::vector<double> samples(length);
  for (double& v : samples) v = rng.gaussian();

  std::vector<std::complex<double>> bins(n_bins);
  auto* freq = reinterpret_cast<fftw_complex*>(bins.data());

  fftw_plan forward;
  fftw_plan inverse;
  {
    std::lock_guard lock(fftw_planner_mutex());
    forward = fftw_plan_dft_r2c_1d(n, samples.data(), freq, FFTW_ESTIMATE);
    inverse = fftw_plan_dft_c2r_1d(n, freq, samples.data(), FFTW_ESTIMATE);
  }
  fftw_execute(forward);

  // Power ~ 1/f, so amplitudes ~ 1/sqrt(f); the DC term is dropped.
  bins[0] = 0.0;
  for (std::size_t k = 1; k < n_bins; ++k) bins[k] /= std::sqrt(static_cast<double>(k));
  fftw_execute(inverse);

  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(inverse);
  }

  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(length);
  double var = 0.0;
  for (double v : samples) var += (v - mean) * (v - mean);
  var /= static_cast<double>(length);
  const double sd = std::sqrt(var);
  for (double& v : samples) v = (v - mean) / sd;
  return samples;
}

double lyapunov_logistic(double a, double x0, std::size_t n, std::size_t transient) {
  check_logistic_params(a, x0);
  if (n == 0) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  double x = x0;
  for (std::size_t i = 0; i < transient; ++i) x = a * x * (1.0 - x);
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = std::abs(a * (1.0 - 2.0 * x));
    if (d > 0.0) {
      sum += std::log(d);
      ++used;
    }
    x = a * x * (1.0 - x);
  }
  return used == 0 ? -std::numeric_limits<double>::infinity() : sum / static_cast<double>(used);
}

}  // namespace cspec
