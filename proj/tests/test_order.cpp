#include <doctest.h>

#include <algorithm>

#include "hf/order.hpp"

using namespace hf;

namespace {

HFSet S(std::uint64_t n) { return decode(n); }

// Lex over index masks: the greatest index where the masks differ must be in Y.
bool mask_lex_less(std::uint32_t x, std::uint32_t y) {
  for (int i = 31; i >= 0; --i) {
    const bool in_x = (x >> i) & 1U, in_y = (y >> i) & 1U;
    if (in_x != in_y) return in_y;
  }
  return false;
}

// The next level's ordering, built by brute-force sorting of index masks.
std::vector<HFSet> brute_lex_level(const std::vector<HFSet>& level) {
  const std::size_t n = level.size();
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), mask_lex_less);
  std::vector<HFSet> out;
  for (auto m : masks) {
    std::vector<HFSet> ms;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) ms.push_back(level[i]);
    out.push_back(from_children(ms));
  }
  return out;
}

std::uint64_t code_of(HFSet x) { return *encode(x).to_u64(); }

}  // namespace

TEST_SUITE("order") {
  TEST_CASE("linear order basics") {
    const LinearOrder L({S(0), S(1), S(2)});
    CHECK(L.size() == 3);
    CHECK(L.index_of(S(2)) == 2);
    CHECK_FALSE(L.index_of(S(5)).has_value());
    CHECK(L.field() == S(7));
    CHECK(L.segment(S(1), S(2)).size() == 2);
    CHECK_THROWS_AS(L.segment(S(1), S(9)), NotASubset);
    CHECK(LinearOrder({S(0), S(1)}).is_prefix_of(L));
    CHECK_FALSE(LinearOrder({S(1)}).is_prefix_of(L));
    CHECK_THROWS_AS(LinearOrder({S(0), S(0)}), std::invalid_argument);
  }

  TEST_CASE("lex examples") {
    const LinearOrder one({empty()});
    CHECK(lex_less(one, empty(), singleton(empty())));
    CHECK_FALSE(lex_less(one, singleton(empty()), singleton(empty())));
    const LinearOrder two({S(0), S(1)});
    CHECK(lex_less(two, singleton(S(1)), S(3)));
    CHECK_THROWS_AS(lex_less(two, S(4), S(3)), NotASubset);
    // All 4x4 subset pairs of [∅, {∅}] against the mask oracle.
    for (std::uint32_t x = 0; x < 4; ++x)
      for (std::uint32_t y = 0; y < 4; ++y) CHECK(lex_less(two, S(x), S(y)) == mask_lex_less(x, y));
  }

  TEST_CASE("lex on a permuted field") {
    const std::vector<HFSet> items = {S(5), S(0), S(3)};
    const LinearOrder L(items);
    for (std::uint32_t x = 0; x < 8; ++x)
      for (std::uint32_t y = 0; y < 8; ++y) {
        std::vector<HFSet> xs, ys;
        for (int i = 0; i < 3; ++i) {
          if ((x >> i) & 1U) xs.push_back(items[i]);
          if ((y >> i) & 1U) ys.push_back(items[i]);
        }
        REQUIRE(lex_less(L, from_children(xs), from_children(ys)) == mask_lex_less(x, y));
      }
  }

  TEST_CASE("ack order examples") {
    CHECK(ack_order(0).empty());
    CHECK(ack_order(1).size() == 1);
    REQUIRE(ack_order(2).size() == 2);
    CHECK(ack_order(2)[0] == empty());
    CHECK(ack_order(2)[1] == singleton(empty()));
    const auto& a3 = ack_order(3);
    REQUIRE(a3.size() == 4);
    for (std::uint64_t i = 0; i < 4; ++i) CHECK(a3[i] == S(i));
  }

  TEST_CASE("ack order matches brute-force lex up to V_4") {
    std::vector<HFSet> level;  // V_0
    for (std::uint32_t m = 0; m < 4; ++m) {
      level = brute_lex_level(level);
      const auto& got = ack_order(m + 1);
      REQUIRE(got.size() == level.size());
      for (std::size_t i = 0; i < level.size(); ++i) REQUIRE(got[i] == level[i]);
    }
    const auto& a5 = ack_order(5);
    REQUIRE(a5.size() == 65536);
    for (std::uint64_t i = 0; i < 65536; i += 97) REQUIRE(code_of(a5[i]) == i);
  }

  TEST_CASE("ack_less examples and code agreement") {
    CHECK(ack_less(empty(), singleton(empty())));
    CHECK_FALSE(ack_less(S(9), S(9)));
    CHECK(ack_less(S(5), S(6)));
    for (std::uint64_t x = 0; x < 512; ++x)
      for (std::uint64_t y = 0; y < 512; ++y) REQUIRE(ack_less(S(x), S(y)) == (x < y));
    for (std::uint64_t x = 0; x < 64; ++x)
      for (std::uint64_t y = 0; y < 64; ++y) REQUIRE(ack_less_literal(S(x), S(y)) == (x < y));
    CHECK(ack_less(S(65535), S(65536)));
    CHECK_FALSE(ack_less(S(65537), S(65536)));
  }

  TEST_CASE("cursor walks codes in order") {
    AckCursor c;
    for (std::uint64_t i = 0; i < 70000; ++i) {
      REQUIRE(c.index() == i);
      REQUIRE(code_of(c.current()) == i);
      c.advance();
    }
  }

  TEST_CASE("position") {
    CHECK(position(empty()) == Code{0});
    CHECK(position(S(3)) == Code{3});
    CHECK(position(S(100)) == Code{100});
    for (std::uint64_t n = 0; n < 70000; n += 13) REQUIRE(position(S(n)) == Code{n});
  }

  TEST_CASE("successor") {
    CHECK(successor_a(empty()) == singleton(empty()));
    CHECK(successor_a(S(3)) == S(4));
    CHECK(successor_a(S(65535)) == S(65536));
    CHECK(rank(S(65535)) == 4);
    CHECK(rank(successor_a(S(65535))) == 5);
    for (std::uint64_t n = 0; n < 4096; ++n) {
      REQUIRE(code_of(successor_carry(S(n))) == n + 1);
      REQUIRE(successor_a(S(n)) == S(n + 1));
    }
    for (std::uint64_t n = 0; n < 15; ++n) REQUIRE(successor_literal(S(n)) == S(n + 1));
  }

  TEST_CASE("numerals") {
    CHECK(numeral(empty()) == Numeral{{0}});
    CHECK(numeral(singleton(empty())) == Numeral{{1, 0}});
    CHECK(numeral(S(6)) == Numeral{{0, 1, 1, 0, 0, 0, 0}});
    CHECK(numeral(S(6)).to_string() == "0110000");
    CHECK(Numeral::parse("0110") == Numeral{{0, 1, 1, 0}});
    CHECK_THROWS_AS(Numeral::parse("012"), std::invalid_argument);
    CHECK(numeral_value(Numeral{{0}}) == Code{0});
    CHECK(numeral_value(Numeral{{1, 0}}) == Code{1});
    CHECK(numeral_value(Numeral{{0, 1, 1, 0}}) == Code{6});
    for (std::uint64_t n = 0; n < 1024; ++n) {
      const Numeral num = numeral(S(n));
      REQUIRE(num.bits.size() == n + 1);
      for (std::uint64_t i = 0; i <= n; ++i) REQUIRE(num.bits[i] == (i < 64 ? ((n >> i) & 1U) : 0U));
      REQUIRE(numeral_value(num) == Code{n});
    }
  }

  TEST_CASE("segment cardinality") {
    CHECK(segment_card(singleton(empty())) == Code{1});
    CHECK(segment_card(empty()) == Code{0});
    CHECK(segment_card(S(5)) == Code{5});
    for (std::uint64_t n = 0; n < 5000; n += 7) REQUIRE(segment_card(S(n)) == Code{n});
  }
}
