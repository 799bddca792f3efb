#pragma once

#include <cstddef>
#include <map>

#include "cspec/symbolic.hpp"

namespace cspec {

/// log2 CR values at or below this are treated as "no compression".
inline constexpr double kLog2CrEpsilon = 1e-12;

struct SpectrumPoint {
  double cr = 1.0;
  double log2_cr = 0.0;
};

/// Scale -> accumulated compression ratio. Only scales that actually
/// compressed are stored; every other scale reads as CR = 1.
class CompressionSpectrum {
public:
  CompressionSpectrum() = default;
  explicit CompressionSpectrum(std::size_t origin_length) : origin_length_(origin_length) {}

  std::size_t origin_length() const { return origin_length_; }

  /// Multiplies one substitution's ratio into scale `s`.
  void accumulate(Scale s, std::size_t length_before, std::size_t length_after);

  /// Stores a point read back from a file. Rejects CR <= 1 and scales outside
  /// [2, origin_length].
  void insert(Scale s, SpectrumPoint point);

  const std::map<Scale, SpectrumPoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  /// CR at `s`, 1.0 where nothing was stored.
  double cr(Scale s) const;
  double log2_cr(Scale s) const;

  /// Sum of log2 CR over all stored scales.
  double total_log2_cr() const;

private:
  std::size_t origin_length_ = 0;
  std::map<Scale, SpectrumPoint> points_;
};

}  // namespace cspec
