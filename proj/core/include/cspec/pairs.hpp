#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "cspec/symbolic.hpp"

namespace cspec {

using SymbolPair = std::pair<SymbolId, SymbolId>;

struct PairStats {
  std::size_t count = 0;      // non-overlapping, left-to-right
  std::size_t first_pos = 0;  // index of the earliest occurrence
};

/// Pair frequencies of one sequence, built by a full rescan.
struct PairCountTable {
  std::map<SymbolPair, PairStats> pairs;

  bool empty() const { return pairs.empty(); }
  std::size_t max_count() const;
  std::size_t count(const SymbolPair& p) const;
};

/// Counts adjacent pairs. A run of k identical symbols contributes k/2
/// (rounded down) occurrences of the same-symbol pair.
PairCountTable count_pairs(const SymbolicSequence& seq);

/// Ordering used to pick the pair to substitute: higher count first, then
/// smaller pair scale, smaller left-symbol scale, earlier first occurrence.
struct PairRank {
  std::size_t count;
  Scale pair_scale;
  Scale left_scale;
  std::size_t first_pos;

  /// True when `*this` should be substituted before `other`.
  bool outranks(const PairRank& other) const;
};

PairRank rank_of(const SymbolPair& pair, const PairStats& stats, const Alphabet& alphabet);

SymbolPair select_pair(const PairCountTable& table, const Alphabet& alphabet);

/// Replaces every non-overlapping left-to-right occurrence of `pair` with
/// `new_symbol` and registers the new symbol in the alphabet. Returns the
/// number of replaced occurrences.
std::size_t substitute_pair(SymbolicSequence& seq, const SymbolPair& pair, SymbolId new_symbol);

/// True iff no pair occurs more than once.
bool spectrum_stop(const PairCountTable& table);

}  // namespace cspec
