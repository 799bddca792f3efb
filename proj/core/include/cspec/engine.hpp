#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cspec/pairs.hpp"
#include "cspec/spectrum.hpp"
#include "cspec/symbolic.hpp"

namespace cspec {

struct SubstitutionStep {
  std::size_t iteration = 0;  // 1-based
  SymbolPair pair{};
  Scale pair_scale = 0;
  SymbolId new_symbol = 0;
  std::size_t occurrences = 0;
  std::size_t length_before = 0;
  std::size_t length_after = 0;
  double cr = 1.0;  // length_before / length_after

  bool operator==(const SubstitutionStep&) const = default;
};

enum class StopReason { AllPairsUnique, LengthOne, AllSymbolsSame };

std::string_view to_string(StopReason reason) noexcept;
std::optional<StopReason> parse_stop_reason(std::string_view text) noexcept;

struct SpectrumTrace {
  std::vector<SubstitutionStep> steps;
  StopReason stop_reason = StopReason::LengthOne;
  std::size_t original_length = 0;
  std::size_t final_length = 0;
};

struct SpectrumResult {
  CompressionSpectrum spectrum;
  SpectrumTrace trace;
};

struct EtcResult {
  std::size_t iterations = 0;
  double normalized = 0.0;  // iterations / (L - 1), 0 for L == 1
};

/// Pair-substitution engine over a doubly linked symbol list with an
/// incremental pair index. Each `step()` costs time proportional to the
/// occurrences it replaces (plus the length of any same-symbol runs they
/// touch), not to the sequence length.
class PairSubstitutionEngine {
public:
  explicit PairSubstitutionEngine(SymbolicSequence seq);
  ~PairSubstitutionEngine();
  PairSubstitutionEngine(PairSubstitutionEngine&&) noexcept;
  PairSubstitutionEngine& operator=(PairSubstitutionEngine&&) noexcept;

  std::size_t length() const;
  std::size_t original_length() const;
  std::size_t distinct_symbols() const;
  std::size_t max_pair_count() const;
  const Alphabet& alphabet() const;

  /// Why the loop would stop now, if it would. `spectrum_rule` adds the
  /// all-pairs-unique condition on top of the ETC termination rules.
  std::optional<StopReason> stop_reason(bool spectrum_rule) const;

  /// Substitutes the highest-ranked pair. Returns nullopt (and does nothing)
  /// once the sequence has length one or a single distinct symbol.
  std::optional<SubstitutionStep> step();

  /// Materializes the current sequence, O(length).
  std::vector<SymbolId> sequence() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SpectrumResult run_spectrum(const SymbolicSequence& seq);
SpectrumResult run_spectrum(std::span<const double> series, int bins);

EtcResult run_etc(const SymbolicSequence& seq);
EtcResult run_etc(std::span<const double> series, int bins);

/// Same loop as `run_spectrum` but built from the full-rescan primitives in
/// pairs.hpp. Quadratic; kept for cross-checking and benchmarking.
SpectrumResult run_spectrum_rescan(const SymbolicSequence& seq);

}  // namespace cspec
