#include <doctest.h>

#include <string_view>

#include "cspec/error.hpp"
#include "cspec/pairs.hpp"

using namespace cspec;

namespace {

SymbolicSequence from_digits(std::string_view digits) {
  std::vector<SymbolId> s;
  for (char c : digits) s.push_back(static_cast<SymbolId>(c - '0'));
  return make_symbolic(s);
}

std::string to_digits(const SymbolicSequence& seq) {
  std::string out;
  for (SymbolId s : seq.symbols) out += static_cast<char>('0' + s);
  return out;
}

}  // namespace

TEST_CASE("count_pairs on the worked example") {
  const auto t = count_pairs(from_digits("1121122112"));
  CHECK(t.pairs.size() == 4);
  CHECK(t.count({1, 1}) == 3);
  CHECK(t.count({1, 2}) == 3);
  CHECK(t.count({2, 1}) == 2);
  CHECK(t.count({2, 2}) == 1);
  CHECK(t.pairs.at({1, 1}).first_pos == 0);
  CHECK(t.pairs.at({1, 2}).first_pos == 1);
  CHECK(t.pairs.at({2, 1}).first_pos == 2);
  CHECK(t.pairs.at({2, 2}).first_pos == 5);
  CHECK(t.max_count() == 3);
}

TEST_CASE("count_pairs does not overlap same-symbol runs") {
  const auto t = count_pairs(from_digits("111"));
  CHECK(t.pairs.size() == 1);
  CHECK(t.count({1, 1}) == 1);
  CHECK(count_pairs(from_digits("11111")).count({1, 1}) == 2);
  CHECK(count_pairs(from_digits("1111")).count({1, 1}) == 2);
}

TEST_CASE("count_pairs on an alternating sequence") {
  const auto t = count_pairs(from_digits("1212"));
  CHECK(t.pairs.size() == 2);
  CHECK(t.count({1, 2}) == 2);
  CHECK(t.count({2, 1}) == 1);
}

TEST_CASE("count_pairs requires two symbols") {
  try {
    count_pairs(from_digits("1"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooShort);
  }
}

TEST_CASE("count total is bounded by length - 1") {
  for (std::string_view s : {"1121122112", "11111111", "12121", "1234123412"}) {
    const auto seq = from_digits(s);
    std::size_t total = 0;
    for (const auto& [p, st] : count_pairs(seq).pairs) total += st.count;
    CHECK(total <= seq.size() - 1);
  }
}

TEST_CASE("select_pair prefers the shorter scale among equally frequent pairs") {
  const auto seq = from_digits("1121122112");
  CHECK(select_pair(count_pairs(seq), seq.alphabet) == SymbolPair{1, 1});
}

TEST_CASE("select_pair: '24' beats '42' and '44'") {
  Alphabet a;
  a.add_base(1);
  a.add_base(2);
  a.add_composite(3, 1, 1);
  a.add_composite(4, 3, 2);
  REQUIRE(a.scale(4) == 3);
  PairCountTable t;
  t.pairs[{4, 4}] = {1, 0};
  t.pairs[{4, 2}] = {1, 1};
  t.pairs[{2, 4}] = {1, 2};
  CHECK(select_pair(t, a) == SymbolPair{2, 4});
}

TEST_CASE("select_pair: '44' (scale 6) beats '45' (scale 8)") {
  Alphabet b;
  b.add_base(1);
  b.add_base(2);
  b.add_composite(3, 1, 2);   // 2
  b.add_composite(4, 3, 2);   // 3
  b.add_composite(5, 4, 3);   // 5
  REQUIRE(b.scale(4) == 3);
  REQUIRE(b.scale(5) == 5);
  PairCountTable t;
  t.pairs[{4, 4}] = {1, 0};
  t.pairs[{4, 5}] = {1, 1};
  CHECK(select_pair(t, b) == SymbolPair{4, 4});
}

TEST_CASE("select_pair falls back to the earliest occurrence") {
  Alphabet a;
  a.add_base(1);
  a.add_base(2);
  a.add_base(3);
  PairCountTable t;
  t.pairs[{1, 2}] = {2, 5};
  t.pairs[{2, 3}] = {2, 1};
  t.pairs[{3, 1}] = {1, 0};
  CHECK(select_pair(t, a) == SymbolPair{2, 3});
}

TEST_CASE("select_pair on an empty table is an internal error") {
  try {
    select_pair(PairCountTable{}, Alphabet{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Internal);
  }
}

TEST_CASE("substitute_pair reproduces the worked example") {
  auto seq = from_digits("1121122112");
  CHECK(substitute_pair(seq, {1, 1}, 3) == 3);
  CHECK(to_digits(seq) == "3232232");
  CHECK(seq.alphabet.scale(3) == 2);
  CHECK(substitute_pair(seq, {3, 2}, 4) == 3);
  CHECK(to_digits(seq) == "4424");
  CHECK(seq.alphabet.scale(4) == 3);
  CHECK(seq.total_scale() == 10);
}

TEST_CASE("substitute_pair collapses '11' into one symbol of scale 2") {
  auto seq = from_digits("11");
  CHECK(substitute_pair(seq, {1, 1}, 2) == 1);
  CHECK(seq.symbols == std::vector<SymbolId>{2});
  CHECK(seq.alphabet.scale(2) == 2);
}

TEST_CASE("substitute_pair errors") {
  auto seq = from_digits("1212");
  try {
    substitute_pair(seq, {2, 2}, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoOccurrence);
  }
  CHECK(to_digits(seq) == "1212");
  try {
    substitute_pair(seq, {1, 2}, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("spectrum_stop") {
  CHECK(spectrum_stop(count_pairs(from_digits("4424"))));
  CHECK_FALSE(spectrum_stop(count_pairs(from_digits("3232232"))));
  CHECK(count_pairs(from_digits("3232232")).count({3, 2}) == 3);
  CHECK(spectrum_stop(PairCountTable{}));
}
