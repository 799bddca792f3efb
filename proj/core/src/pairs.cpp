#include "cspec/pairs.hpp"

#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "cspec/error.hpp"

namespace cspec {

std::size_t PairCountTable::max_count() const {
  std::size_t best = 0;
  for (const auto& [pair, stats] : pairs) best = std::max(best, stats.count);
  return best;
}

std::size_t PairCountTable::count(const SymbolPair& p) const {
  const auto it = pairs.find(p);
  return it == pairs.end() ? 0 : it->second.count;
}

PairCountTable count_pairs(const SymbolicSequence& seq) {
  const auto& s = seq.symbols;
  if (s.size() < 2) {
    throw Error(ErrorKind::TooShort, fmt::format("need at least 2 symbols to count pairs, got {}", s.size()));
  }
  PairCountTable table;
  // Position of the last counted same-symbol pair; the next position would overlap it.
  std::size_t last_same = s.size();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const SymbolPair p{s[i], s[i + 1]};
    if (p.first == p.second) {
      if (last_same + 1 == i) continue;
      last_same = i;
    }
    auto [it, inserted] = table.pairs.try_emplace(p, PairStats{0, i});
    ++it->second.count;
  }
  return table;
}

bool PairRank::outranks(const PairRank& other) const {
  // Larger count wins; every other key prefers the smaller value.
  return std::tie(other.count, pair_scale, left_scale, first_pos) <
         std::tie(count, other.pair_scale, other.left_scale, other.first_pos);
}

PairRank rank_of(const SymbolPair& pair, const PairStats& stats, const Alphabet& alphabet) {
  const Scale left = alphabet.scale(pair.first);
  return PairRank{stats.count, left + alphabet.scale(pair.second), left, stats.first_pos};
}

SymbolPair select_pair(const PairCountTable& table, const Alphabet& alphabet) {
  if (table.empty()) throw Error(ErrorKind::Internal, "select_pair called on an empty pair table");
  auto best = table.pairs.begin();
  PairRank best_rank = rank_of(best->first, best->second, alphabet);
  for (auto it = std::next(best); it != table.pairs.end(); ++it) {
    const PairRank r = rank_of(it->first, it->second, alphabet);
    if (r.outranks(best_rank)) {
      best = it;
      best_rank = r;
    }
  }
  return best->first;
}

std::size_t substitute_pair(SymbolicSequence& seq, const SymbolPair& pair, SymbolId new_symbol) {
  if (seq.alphabet.contains(new_symbol)) {
    throw Error(ErrorKind::InvalidInput, fmt::format("new symbol {} is already in the alphabet", new_symbol));
  }
  auto& s = seq.symbols;
  std::vector<SymbolId> out;
  out.reserve(s.size());
  std::size_t replaced = 0;
  for (std::size_t i = 0; i < s.size();) {
    if (i + 1 < s.size() && s[i] == pair.first && s[i + 1] == pair.second) {
      out.push_back(new_symbol);
      ++replaced;
      i += 2;
    } else {
      out.push_back(s[i]);
      ++i;
    }
  }
  if (replaced == 0) {
    throw Error(ErrorKind::NoOccurrence, fmt::format("pair ({}, {}) does not occur", pair.first, pair.second));
  }
  seq.alphabet.add_composite(new_symbol, pair.first, pair.second);
  s = std::move(out);
  return replaced;
}

bool spectrum_stop(const PairCountTable& table) { return table.max_count() <= 1; }

}  // namespace cspec
