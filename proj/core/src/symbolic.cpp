#include "cspec/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "cspec/error.hpp"

namespace cspec {

void Alphabet::add_base(SymbolId id) { scales_.try_emplace(id, Scale{1}); }

void Alphabet::add_composite(SymbolId id, SymbolId left, SymbolId right) {
  if (scales_.contains(id)) {
    throw Error(ErrorKind::InvalidInput, fmt::format("symbol {} is already in the alphabet", id));
  }
  const Scale s = scale(left) + scale(right);
  scales_.emplace(id, s);
}

Scale Alphabet::scale(SymbolId id) const {
  const auto it = scales_.find(id);
  if (it == scales_.end()) {
    throw Error(ErrorKind::Internal, fmt::format("symbol {} is not in the alphabet", id));
  }
  return it->second;
}

SymbolId Alphabet::next_free_id() const { return scales_.empty() ? SymbolId{1} : scales_.rbegin()->first + 1; }

Scale SymbolicSequence::total_scale() const {
  return std::accumulate(symbols.begin(), symbols.end(), Scale{0},
                         [this](Scale acc, SymbolId id) { return acc + alphabet.scale(id); });
}

SymbolicSequence make_symbolic(std::span<const SymbolId> symbols) {
  SymbolicSequence seq;
  seq.symbols.assign(symbols.begin(), symbols.end());
  for (SymbolId id : seq.symbols) seq.alphabet.add_base(id);
  return seq;
}

SymbolicSequence quantize(std::span<const double> series, int bins) {
  if (series.empty()) throw Error(ErrorKind::InvalidInput, "cannot quantize an empty series");
  if (bins < 2) throw Error(ErrorKind::InvalidInput, fmt::format("bins must be at least 2, got {}", bins));
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!std::isfinite(series[i])) {
      throw Error(ErrorKind::InvalidInput, fmt::format("non-finite value at index {}", i));
    }
  }

  const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
  const double lo = *lo_it;
  const double range = *hi_it - lo;

  SymbolicSequence seq;
  seq.symbols.reserve(series.size());
  for (double x : series) {
    SymbolId bin = 0;
    if (range > 0.0) {
      const double pos = std::floor(static_cast<double>(bins) * (x - lo) / range);
      bin = static_cast<SymbolId>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
    }
    seq.symbols.push_back(bin + 1);
  }
  for (int b = 1; b <= bins; ++b) seq.alphabet.add_base(static_cast<SymbolId>(b));
  return seq;
}

}  // namespace cspec
