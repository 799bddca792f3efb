#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cspec {

/// Recorded alongside every stochastic series: mt19937_64 words mapped to
/// [0,1) via their top 53 bits, Gaussians by Box-Muller on those uniforms.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53/box-muller";

inline constexpr double kLogisticDefaultX0 = 0.1;
inline constexpr std::size_t kLogisticDefaultTransient = 1000;

std::vector<double> gen_repeating(std::span<const double> pattern, std::size_t length);

/// amplitude * sin(2*pi*w*k/fs). The phase is reduced modulo one cycle in
/// exact arithmetic when w*k is an integer, so a whole number of samples per
/// period gives a bit-exact periodic series.
std::vector<double> gen_sinusoid(double w, double fs, std::size_t length, double amplitude = 1.0);

/// Logistic map orbit after `transient` discarded iterates. Note that
/// x0 = 0.5 at a = 4 maps to 1 and then to the fixed point 0 forever.
std::vector<double> gen_logistic(double a, double x0 = kLogisticDefaultX0, std::size_t length = 2000,
                                 std::size_t transient = kLogisticDefaultTransient);

std::vector<double> gen_uniform(std::size_t length, std::uint64_t seed);

/// Spectral-synthesis 1/f noise, zero mean and unit variance.
std::vector<double> gen_pink(std::size_t length, std::uint64_t seed);

/// Mean of ln|a(1 - 2x)| over `n` post-transient iterates. Iterates landing
/// exactly on x = 0.5 have a zero derivative and are left out of the mean;
/// returns -infinity if every iterate is left out.
double lyapunov_logistic(double a, double x0 = kLogisticDefaultX0, std::size_t n = 100000,
                         std::size_t transient = kLogisticDefaultTransient);

}  // namespace cspec
