#include "cspec/spectrum.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cspec/error.hpp"

namespace cspec {

void CompressionSpectrum::accumulate(Scale s, std::size_t length_before, std::size_t length_after) {
  if (length_after == 0 || length_after >= length_before) {
    throw Error(ErrorKind::Internal,
                fmt::format("substitution must shorten the sequence ({} -> {})", length_before, length_after));
  }
  const double ratio = static_cast<double>(length_before) / static_cast<double>(length_after);
  auto [it, inserted] = points_.try_emplace(s, SpectrumPoint{1.0, 0.0});
  it->second.cr *= ratio;
  it->second.log2_cr += std::log2(ratio);
}

void CompressionSpectrum::insert(Scale s, SpectrumPoint point) {
  if (!(point.log2_cr > kLog2CrEpsilon) || !(point.cr > 1.0) || !std::isfinite(point.cr)) {
    throw Error(ErrorKind::InvalidInput, fmt::format("scale {}: CR must exceed 1 (got {})", s, point.cr));
  }
  if (s < 2 || (origin_length_ != 0 && s > origin_length_)) {
    throw Error(ErrorKind::InvalidInput, fmt::format("scale {} outside [2, {}]", s, origin_length_));
  }
  points_[s] = point;
}

double CompressionSpectrum::cr(Scale s) const {
  const auto it = points_.find(s);
  return it == points_.end() ? 1.0 : it->second.cr;
}

double CompressionSpectrum::log2_cr(Scale s) const {
  const auto it = points_.find(s);
  return it == points_.end() ? 0.0 : it->second.log2_cr;
}

double CompressionSpectrum::total_log2_cr() const {
  double total = 0.0;
  for (const auto& [s, p] : points_) total += p.log2_cr;
  return total;
}

}  // namespace cspec
