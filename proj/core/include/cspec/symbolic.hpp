#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace cspec {

using SymbolId = std::uint32_t;
using Scale = std::uint64_t;

/// Symbol id -> scale (number of original samples the symbol expands to).
class Alphabet {
public:
  Alphabet() = default;

  /// Registers a quantization-level symbol (scale 1). Re-adding is a no-op.
  void add_base(SymbolId id);

  /// Registers a symbol standing for the pair (left, right); its scale is the
  /// sum of the constituent scales. Throws if `id` is already taken or either
  /// constituent is unknown.
  void add_composite(SymbolId id, SymbolId left, SymbolId right);

  bool contains(SymbolId id) const { return scales_.contains(id); }
  Scale scale(SymbolId id) const;
  std::size_t size() const { return scales_.size(); }

  /// Smallest id strictly above every registered id.
  SymbolId next_free_id() const;

  const std::map<SymbolId, Scale>& entries() const { return scales_; }

private:
  std::map<SymbolId, Scale> scales_;
};

struct SymbolicSequence {
  std::vector<SymbolId> symbols;
  Alphabet alphabet;

  std::size_t size() const { return symbols.size(); }

  /// Sum of symbol scales; equals the original series length at every stage.
  Scale total_scale() const;
};

/// Builds a scale-1 sequence from symbols that are already integer ids.
SymbolicSequence make_symbolic(std::span<const SymbolId> symbols);

/// Equal-width binning on [min, max]. Values map to 1-indexed bins, the
/// maximum is clamped into the top bin and a constant series maps to bin 1.
/// The alphabet holds every bin id 1..bins.
SymbolicSequence quantize(std::span<const double> series, int bins);

}  // namespace cspec
