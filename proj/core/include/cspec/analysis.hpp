#pragma once

#include <cstddef>
#include <vector>

#include "cspec/signals.hpp"
#include "cspec/spectrum.hpp"

namespace cspec {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
};

/// Number of scales with log2 CR above kLog2CrEpsilon.
std::size_t bandwidth(const CompressionSpectrum& spectrum);

/// Least-squares line through (log2 s, log2 CR(s)) over the stored scales.
LogLogFit loglog_fit(const CompressionSpectrum& spectrum);

struct SweepParams {
  double a_min = 2.9;
  double a_max = 4.0;
  double step = 0.01;
  std::size_t length = 2000;
  int bins = 8;
  double x0 = kLogisticDefaultX0;
  std::size_t transient = kLogisticDefaultTransient;
  std::size_t lyapunov_n = 100000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
  double a = 0.0;
  double lyapunov = 0.0;
  std::size_t bandwidth = 0;
};

/// a_min + k*step for k = 0..K, with K = round((a_max - a_min)/step).
std::vector<double> sweep_grid(double a_min, double a_max, double step);

/// Rows come back in grid order whatever the thread count.
std::vector<SweepRow> bifurcation_sweep(const SweepParams& params);

}  // namespace cspec
