#include "cspec/engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "cspec/error.hpp"

namespace cspec {

std::string_view to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::AllPairsUnique: return "all-pairs-unique";
    case StopReason::LengthOne: return "length-one";
    case StopReason::AllSymbolsSame: return "all-symbols-same";
  }
  return "unknown";
}

std::optional<StopReason> parse_stop_reason(std::string_view text) noexcept {
  for (StopReason r : {StopReason::AllPairsUnique, StopReason::LengthOne, StopReason::AllSymbolsSame}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

namespace {

using Slot = std::uint32_t;
constexpr Slot kNil = std::numeric_limits<Slot>::max();

using PairKey = std::uint64_t;

PairKey pack(SymbolId left, SymbolId right) { return (static_cast<PairKey>(left) << 32) | right; }
SymbolPair unpack(PairKey key) { return {static_cast<SymbolId>(key >> 32), static_cast<SymbolId>(key)}; }

struct QueueKey {
  std::size_t count;
  Scale pair_scale;
  Scale left_scale;
  Slot first_pos;
  PairKey pair;
};

// Front of the set is the pair to substitute next. Slots keep sequence order,
// so comparing slots compares positions in the current sequence.
struct QueueOrder {
  bool operator()(const QueueKey& x, const QueueKey& y) const {
    if (x.count != y.count) return x.count > y.count;
    if (x.pair_scale != y.pair_scale) return x.pair_scale < y.pair_scale;
    if (x.left_scale != y.left_scale) return x.left_scale < y.left_scale;
    if (x.first_pos != y.first_pos) return x.first_pos < y.first_pos;
    return x.pair < y.pair;
  }
};

struct PairEntry {
  std::size_t count = 0;
  std::set<Slot> positions;  // every adjacency with this pair, overlapping ones included
  std::optional<QueueKey> queued;
  bool touched = false;
};

}  // namespace

struct PairSubstitutionEngine::Impl {
  std::vector<SymbolId> sym;
  std::vector<Slot> prev;
  std::vector<Slot> next;
  Slot head = kNil;
  std::size_t length = 0;
  std::size_t original_length = 0;

  Alphabet alphabet;
  SymbolId next_id = 1;
  std::size_t iteration = 0;

  std::unordered_map<SymbolId, std::size_t> histogram;
  std::unordered_map<PairKey, PairEntry> pairs;
  std::set<QueueKey, QueueOrder> queue;
  std::vector<PairKey> touched;

  explicit Impl(SymbolicSequence seq);

  PairEntry& entry(PairKey key) {
    PairEntry& e = pairs[key];
    if (!e.touched) {
      e.touched = true;
      touched.push_back(key);
    }
    return e;
  }

  void add_symbol(SymbolId s) { ++histogram[s]; }
  void remove_symbol(SymbolId s) {
    auto it = histogram.find(s);
    if (--it->second == 0) histogram.erase(it);
  }

  // Adds (sign = +1) or removes (sign = -1) the contribution of every
  // adjacency from `first` up to, not including, `stop`. The range must begin
  // at a run start and end at a run end so same-symbol counts stay exact.
  void account(Slot first, Slot stop, int sign);

  void flush_run(SymbolId s, std::size_t run, int sign) {
    if (run < 2) return;
    PairEntry& e = entry(pack(s, s));
    e.count = sign > 0 ? e.count + run / 2 : e.count - run / 2;
  }

  void requeue();
  std::optional<SubstitutionStep> step();
};

PairSubstitutionEngine::Impl::Impl(SymbolicSequence seq) : alphabet(std::move(seq.alphabet)) {
  if (seq.symbols.empty()) throw Error(ErrorKind::InvalidInput, "empty symbolic sequence");
  if (seq.symbols.size() >= kNil) {
    throw Error(ErrorKind::InvalidInput, fmt::format("sequence too long ({} symbols)", seq.symbols.size()));
  }
  for (SymbolId s : seq.symbols) {
    if (!alphabet.contains(s)) throw Error(ErrorKind::InvalidInput, fmt::format("symbol {} not in alphabet", s));
  }
  sym = std::move(seq.symbols);
  length = sym.size();
  original_length = length;
  prev.resize(length);
  next.resize(length);
  for (Slot i = 0; i < length; ++i) {
    prev[i] = i == 0 ? kNil : i - 1;
    next[i] = i + 1 == length ? kNil : i + 1;
    add_symbol(sym[i]);
  }
  head = 0;
  next_id = alphabet.next_free_id();
  account(head, kNil, +1);
  requeue();
}

void PairSubstitutionEngine::Impl::account(Slot first, Slot stop, int sign) {
  std::size_t run = 1;
  Slot i = first;
  while (true) {
    const Slot j = next[i];
    if (j == stop || j == kNil) {
      flush_run(sym[i], run, sign);
      return;
    }
    const PairKey key = pack(sym[i], sym[j]);
    PairEntry& e = entry(key);
    if (sign > 0) {
      e.positions.insert(i);
    } else {
      e.positions.erase(i);
    }
    if (sym[i] == sym[j]) {
      ++run;
    } else {
      flush_run(sym[i], run, sign);
      run = 1;
      e.count = sign > 0 ? e.count + 1 : e.count - 1;
    }
    i = j;
  }
}

void PairSubstitutionEngine::Impl::requeue() {
  for (PairKey key : touched) {
    auto it = pairs.find(key);
    PairEntry& e = it->second;
    e.touched = false;
    if (e.queued) queue.erase(*e.queued);
    if ((e.count == 0) != e.positions.empty()) throw Error(ErrorKind::Internal, "pair index out of sync");
    if (e.count == 0) {
      pairs.erase(it);
      continue;
    }
    const auto [left, right] = unpack(key);
    const Scale ls = alphabet.scale(left);
    e.queued = QueueKey{e.count, ls + alphabet.scale(right), ls, *e.positions.begin(), key};
    queue.insert(*e.queued);
  }
  touched.clear();
}

std::optional<SubstitutionStep> PairSubstitutionEngine::Impl::step() {
  if (length <= 1 || histogram.size() <= 1) return std::nullopt;
  if (queue.empty()) throw Error(ErrorKind::Internal, "no pairs indexed in a sequence of length >= 2");

  const QueueKey top = *queue.begin();
  const auto [a, b] = unpack(top.pair);
  const SymbolId c = next_id++;
  alphabet.add_composite(c, a, b);

  // Greedy left-to-right pick; only same-symbol occurrences can overlap.
  std::vector<Slot> chosen;
  chosen.reserve(top.count);
  {
    Slot last = kNil;
    for (Slot p : pairs.at(top.pair).positions) {
      if (a == b && last != kNil && next[last] == p) continue;
      chosen.push_back(p);
      last = p;
    }
  }
  if (chosen.size() != top.count) {
    throw Error(ErrorKind::Internal,
                fmt::format("pair count {} disagrees with {} occurrences", top.count, chosen.size()));
  }

  const std::size_t length_before = length;

  // Split the occurrences into disjoint list segments, each widened to whole
  // runs on both sides. Pair counts outside the segments cannot change.
  std::size_t k = 0;
  while (k < chosen.size()) {
    Slot seg_first = prev[chosen[k]] != kNil ? prev[chosen[k]] : chosen[k];
    while (prev[seg_first] != kNil && sym[prev[seg_first]] == sym[seg_first]) seg_first = prev[seg_first];

    Slot seg_last = kNil;
    std::size_t end = k;
    while (end < chosen.size()) {
      const Slot p = chosen[end];
      // seg_last ends a run, so an occurrence whose left neighbour lies past
      // it starts a fresh segment.
      if (seg_last != kNil && prev[p] > seg_last) break;
      const Slot q = next[p];
      Slot e = next[q] != kNil ? next[q] : q;
      if (seg_last == kNil || e > seg_last) {
        while (next[e] != kNil && sym[next[e]] == sym[e]) e = next[e];
        seg_last = e;
      }
      ++end;
    }
    const Slot stop = next[seg_last];

    account(seg_first, stop, -1);
    for (std::size_t m = k; m < end; ++m) {
      const Slot p = chosen[m];
      const Slot q = next[p];
      remove_symbol(sym[p]);
      remove_symbol(sym[q]);
      add_symbol(c);
      sym[p] = c;
      next[p] = next[q];
      if (next[q] != kNil) prev[next[q]] = p;
      prev[q] = next[q] = kNil;
      --length;
    }
    account(seg_first, stop, +1);
    k = end;
  }
  requeue();

  SubstitutionStep out;
  out.iteration = ++iteration;
  out.pair = {a, b};
  out.pair_scale = top.pair_scale;
  out.new_symbol = c;
  out.occurrences = chosen.size();
  out.length_before = length_before;
  out.length_after = length;
  out.cr = static_cast<double>(length_before) / static_cast<double>(length);
  return out;
}

PairSubstitutionEngine::PairSubstitutionEngine(SymbolicSequence seq)
    : impl_(std::make_unique<Impl>(std::move(seq))) {}
PairSubstitutionEngine::~PairSubstitutionEngine() = default;
PairSubstitutionEngine::PairSubstitutionEngine(PairSubstitutionEngine&&) noexcept = default;
PairSubstitutionEngine& PairSubstitutionEngine::operator=(PairSubstitutionEngine&&) noexcept = default;

std::size_t PairSubstitutionEngine::length() const { return impl_->length; }
std::size_t PairSubstitutionEngine::original_length() const { return impl_->original_length; }
std::size_t PairSubstitutionEngine::distinct_symbols() const { return impl_->histogram.size(); }
std::size_t PairSubstitutionEngine::max_pair_count() const {
  return impl_->queue.empty() ? 0 : impl_->queue.begin()->count;
}
const Alphabet& PairSubstitutionEngine::alphabet() const { return impl_->alphabet; }

std::optional<StopReason> PairSubstitutionEngine::stop_reason(bool spectrum_rule) const {
  if (length() <= 1) return StopReason::LengthOne;
  if (distinct_symbols() <= 1) return StopReason::AllSymbolsSame;
  if (spectrum_rule && max_pair_count() <= 1) return StopReason::AllPairsUnique;
  return std::nullopt;
}

std::optional<SubstitutionStep> PairSubstitutionEngine::step() { return impl_->step(); }

std::vector<SymbolId> PairSubstitutionEngine::sequence() const {
  std::vector<SymbolId> out;
  out.reserve(impl_->length);
  for (Slot i = impl_->head; i != kNil; i = impl_->next[i]) out.push_back(impl_->sym[i]);
  return out;
}

SpectrumResult run_spectrum(const SymbolicSequence& seq) {
  const std::size_t origin = seq.total_scale();
  PairSubstitutionEngine engine(seq);
  SpectrumResult result{CompressionSpectrum(origin), {}};
  result.trace.original_length = engine.length();
  while (true) {
    if (auto reason = engine.stop_reason(true)) {
      result.trace.stop_reason = *reason;
      break;
    }
    const auto step = engine.step();
    result.spectrum.accumulate(step->pair_scale, step->length_before, step->length_after);
    result.trace.steps.push_back(*step);
  }
  result.trace.final_length = engine.length();
  return result;
}

SpectrumResult run_spectrum(std::span<const double> series, int bins) { return run_spectrum(quantize(series, bins)); }

EtcResult run_etc(const SymbolicSequence& seq) {
  PairSubstitutionEngine engine(seq);
  EtcResult result;
  while (engine.step()) ++result.iterations;
  const std::size_t n = seq.size();
  result.normalized = n > 1 ? static_cast<double>(result.iterations) / static_cast<double>(n - 1) : 0.0;
  return result;
}

EtcResult run_etc(std::span<const double> series, int bins) { return run_etc(quantize(series, bins)); }

SpectrumResult run_spectrum_rescan(const SymbolicSequence& input) {
  if (input.symbols.empty()) throw Error(ErrorKind::InvalidInput, "empty symbolic sequence");
  SymbolicSequence seq = input;
  SpectrumResult result{CompressionSpectrum(seq.total_scale()), {}};
  result.trace.original_length = seq.size();
  std::size_t iteration = 0;
  while (true) {
    if (seq.size() <= 1) {
      result.trace.stop_reason = StopReason::LengthOne;
      break;
    }
    const std::unordered_set<SymbolId> distinct(seq.symbols.begin(), seq.symbols.end());
    if (distinct.size() <= 1) {
      result.trace.stop_reason = StopReason::AllSymbolsSame;
      break;
    }
    const PairCountTable table = count_pairs(seq);
    if (spectrum_stop(table)) {
      result.trace.stop_reason = StopReason::AllPairsUnique;
      break;
    }
    const SymbolPair pair = select_pair(table, seq.alphabet);
    const SymbolId c = seq.alphabet.next_free_id();
    const std::size_t before = seq.size();
    const std::size_t occurrences = substitute_pair(seq, pair, c);

    SubstitutionStep s;
    s.iteration = ++iteration;
    s.pair = pair;
    s.pair_scale = seq.alphabet.scale(c);
    s.new_symbol = c;
    s.occurrences = occurrences;
    s.length_before = before;
    s.length_after = seq.size();
    s.cr = static_cast<double>(before) / static_cast<double>(seq.size());
    result.spectrum.accumulate(s.pair_scale, s.length_before, s.length_after);
    result.trace.steps.push_back(s);
  }
  result.trace.final_length = seq.size();
  return result;
}

}  // namespace cspec
