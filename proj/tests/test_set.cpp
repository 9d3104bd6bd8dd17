#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "hf/literal.hpp"
#include "hf/set.hpp"

using namespace hf;

namespace {

// Independent oracle: the members of decode(n) are decode(i) for the set bits i of n.
std::vector<std::uint64_t> bits_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < 64; ++i)
    if ((n >> i) & 1U) out.push_back(i);
  return out;
}

std::uint64_t code_of(HFSet x) { return *encode(x).to_u64(); }

HFSet S(std::uint64_t n) { return decode(n); }

}  // namespace

TEST_SUITE("set") {
  TEST_CASE("empty") {
    CHECK(encode(empty()) == Code{0});
    CHECK(rank(empty()) == 0);
    CHECK(empty().size() == 0);
  }

  TEST_CASE("from_children canonicalizes") {
    const HFSet e = empty();
    CHECK(from_children({e, e}) == singleton(e));
    const HFSet two = from_children({singleton(e), e});
    REQUIRE(two.size() == 2);
    CHECK(two.members()[0] == e);
    CHECK(two.members()[1] == singleton(e));
    CHECK(from_children(std::initializer_list<HFSet>{}) == e);
  }

  TEST_CASE("encode and decode examples") {
    const HFSet e = empty();
    CHECK(encode(e) == Code{0});
    CHECK(encode(singleton(e)) == Code{1});
    CHECK(encode(from_children({e, singleton(e)})) == Code{3});
    CHECK(decode(0) == e);
    CHECK(decode(2) == singleton(singleton(e)));
    CHECK(decode(3) == from_children({e, singleton(e)}));
  }

  TEST_CASE("bijection and member structure below 2^16") {
    for (std::uint64_t n = 0; n < 65536; ++n) {
      const HFSet x = decode(n);
      REQUIRE(code_of(x) == n);
      const auto want = bits_of(n);
      REQUIRE(x.size() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i) REQUIRE(code_of(x.members()[i]) == want[i]);
      REQUIRE(decode(encode(x)) == x);
    }
  }

  TEST_CASE("membership matches bits") {
    CHECK(mem(empty(), singleton(empty())));
    CHECK_FALSE(mem(singleton(empty()), singleton(empty())));
    CHECK(mem(singleton(singleton(empty())), S(6)));
    for (std::uint64_t y = 0; y < 4096; y += 7)
      for (std::uint64_t x = 0; x < 4096; x += 3) REQUIRE(mem(S(x), S(y)) == (x < 64 && ((y >> x) & 1U)));
  }

  TEST_CASE("pair") {
    const HFSet e = empty();
    CHECK(pair(e, e) == singleton(e));
    CHECK(encode(pair(e, singleton(e))) == Code{3});
    CHECK(pair(singleton(e), singleton(singleton(e))) == S(6));
    for (std::uint64_t a = 0; a < 40; ++a)
      for (std::uint64_t b = 0; b < 40; ++b) REQUIRE(encode(pair(S(a), S(b))) == (Code::pow2(a) | Code::pow2(b)));
  }

  TEST_CASE("sumset") {
    CHECK(sumset(empty()) == empty());
    CHECK(sumset(singleton(singleton(empty()))) == singleton(empty()));
    CHECK(sumset(S(3)) == singleton(empty()));
    for (std::uint64_t n = 0; n < 1024; ++n) {
      std::uint64_t want = 0;
      for (auto i : bits_of(n)) want |= i;
      REQUIRE(code_of(sumset(S(n))) == want);
    }
  }

  TEST_CASE("powerset") {
    CHECK(encode(powerset(empty())) == Code{1});
    CHECK(encode(powerset(singleton(empty()))) == Code{3});
    CHECK(powerset(S(3)) == S(15));
    // Set bits of code(P(x)) are exactly the sub-masks of code(x).
    for (std::uint64_t n = 0; n < 256; ++n) {
      const Code c = encode(powerset(S(n)));
      REQUIRE(c.popcount() == (std::size_t{1} << std::popcount(n)));
      c.for_each_set_bit([&](std::size_t s) { REQUIRE((s & ~n) == 0); });
    }
    CHECK_THROWS_AS(powerset(S(0xFFFFFF), Limits{1 << 20, 1 << 10}), BudgetExceeded);
  }

  TEST_CASE("rank and levels") {
    CHECK(rank(S(3)) == 2);
    CHECK(rank(S(65535)) == 4);
    CHECK(level_of(empty()).materialized == singleton(empty()));
    CHECK(level_of(singleton(empty())).materialized == S(3));
    const LevelRef big = level_of(S(65536));
    CHECK(big.index == 6);
    CHECK_FALSE(big.materialized.has_value());
    CHECK(materialize_level(0) == empty());
    CHECK(materialize_level(3) == S(15));
    CHECK(materialize_level(3).size() == 4);
    const HFSet v5 = materialize_level(5);
    REQUIRE(v5.size() == 65536);
    for (std::uint64_t i = 0; i < 65536; ++i) REQUIRE(code_of(v5.members()[i]) == i);
    const std::uint64_t sizes[] = {0, 1, 2, 4, 16, 65536};
    for (std::uint32_t m = 0; m <= 5; ++m) CHECK(*level_size(m) == sizes[m]);
    CHECK_THROWS_AS(materialize_level(6), BudgetExceeded);
    CHECK(is_level(materialize_level(4)));
    CHECK_FALSE(is_level(S(2)));
  }

  TEST_CASE("separate") {
    const HFSet v3 = materialize_level(3);
    CHECK(separate(v3, [](HFSet z) { return is_ordinal(z); }) == from_children({ordinal(0), ordinal(1), ordinal(2)}));
    CHECK(separate(S(200), [](HFSet) { return false; }) == empty());
    CHECK(separate(S(200), [](HFSet) { return true; }) == S(200));
  }

  TEST_CASE("transitive sets and ordinals") {
    CHECK(is_transitive(empty()));
    CHECK_FALSE(is_transitive(S(2)));
    CHECK(is_transitive(materialize_level(3)));
    CHECK(is_ordinal(empty()));
    CHECK(is_ordinal(S(3)));
    CHECK_FALSE(is_ordinal(S(2)));
    CHECK(ord_add(ordinal(0), ordinal(0)) == ordinal(0));
    CHECK(ord_add(ordinal(1), ordinal(2)) == ordinal(3));
    CHECK(ord_mul(ordinal(2), ordinal(2)) == ordinal(4));
    CHECK(ord_exp(ordinal(2), ordinal(2)) == ordinal(4));
    CHECK_THROWS_AS(ord_add(S(2), ordinal(1)), NotAnOrdinal);
    // Code of ordinal n+1 is 2^code(n) + code(n).
    for (std::uint64_t n = 0; n < 4; ++n) {
      const std::uint64_t c = code_of(ordinal(n));
      CHECK(code_of(ordinal(n + 1)) == (std::uint64_t{1} << c) + c);
      CHECK(ordinal_value(ordinal(n)) == n);
    }
  }

  TEST_CASE("extensionality and foundation on samples") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t n = rng() % 4096;
      const HFSet x = S(n);
      std::vector<HFSet> ms(x.members().begin(), x.members().end());
      std::shuffle(ms.begin(), ms.end(), rng);
      REQUIRE(from_children(ms) == x);
    }
    for (std::uint64_t n = 1; n < 4096; ++n) {
      const HFSet x = S(n);
      bool found = false;
      for (HFSet m : x.members()) {
        bool disjoint = true;
        for (HFSet w : m.members()) disjoint = disjoint && !mem(w, x);
        found = found || disjoint;
      }
      REQUIRE(found);
    }
  }

  TEST_CASE("set literals") {
    CHECK(parse_set_literal("{{}}") == singleton(empty()));
    CHECK(parse_set_literal("{ {}, {{}} }") == S(3));
    CHECK(parse_set_literal("#6") == S(6));
    CHECK(print_set_literal(S(3)) == "{{}, {{}}}");
    CHECK(print_set_literal(empty()) == "{}");
    for (std::uint64_t n = 0; n < 512; ++n) REQUIRE(parse_set_literal(print_set_literal(S(n))) == S(n));
    CHECK_THROWS_AS(parse_set_literal("{{}"), SyntaxError);
    CHECK_THROWS_AS(parse_set_literal("{} x"), SyntaxError);
  }
}
