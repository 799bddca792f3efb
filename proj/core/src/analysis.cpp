#include "cspec/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "cspec/engine.hpp"
#include "cspec/error.hpp"

namespace cspec {

std::size_t bandwidth(const CompressionSpectrum& spectrum) {
  return static_cast<std::size_t>(std::count_if(spectrum.points().begin(), spectrum.points().end(),
                                                [](const auto& kv) { return kv.second.log2_cr > kLog2CrEpsilon; }));
}

LogLogFit loglog_fit(const CompressionSpectrum& spectrum) {
  const std::size_t n = spectrum.size();
  if (n < 2) {
    throw Error(ErrorKind::InsufficientData, fmt::format("a log-log fit needs at least 2 points, got {}", n));
  }
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [s, p] : spectrum.points()) {
    mx += std::log2(static_cast<double>(s));
    my += p.log2_cr;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [s, p] : spectrum.points()) {
    const double dx = std::log2(static_cast<double>(s)) - mx;
    const double dy = p.log2_cr - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  LogLogFit fit;
  fit.n_points = n;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // A flat set of points is fitted exactly by the horizontal line.
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return fit;
}

std::vector<double> sweep_grid(double a_min, double a_max, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::InvalidInput, fmt::format("step must be positive, got {}", step));
  if (!(a_min < a_max)) throw Error(ErrorKind::InvalidInput, fmt::format("need a_min < a_max ({} vs {})", a_min, a_max));
  const auto count = static_cast<std::size_t>(std::llround((a_max - a_min) / step)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = a_min + static_cast<double>(k) * step;
  // Keep the endpoint exact so a_max itself is evaluated.
  if (std::abs(grid.back() - a_max) < step * 1e-6) grid.back() = a_max;
  return grid;
}

std::vector<SweepRow> bifurcation_sweep(const SweepParams& params) {
  const std::vector<double> grid = sweep_grid(params.a_min, params.a_max, params.step);
  std::vector<SweepRow> rows(grid.size());

  auto evaluate = [&](std::size_t k) {
    const double a = grid[k];
    const auto series = gen_logistic(a, params.x0, params.length, params.transient);
    const auto result = run_spectrum(series, params.bins);
    rows[k] = SweepRow{a, lyapunov_logistic(a, params.x0, params.lyapunov_n, params.transient),
                       bandwidth(result.spectrum)};
  };

  unsigned threads = params.threads != 0 ? params.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = cursor++; k < grid.size(); k = cursor++) {
      try {
        evaluate(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        cursor = grid.size();
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace cspec
