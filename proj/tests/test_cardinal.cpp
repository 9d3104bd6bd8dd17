#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hf/cardinal.hpp"
#include "hf/verify.hpp"

using namespace hf;

namespace {

HFSet S(std::uint64_t n) { return decode(n); }
HFSet V(std::uint32_t m) { return materialize_level(m); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Enumerates every map n -> m looking for one without collisions.
bool brute_injection(std::size_t n, std::size_t m) {
  if (n == 0) return true;
  if (m == 0) return false;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    std::vector<std::size_t> g = f;
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) == g.end()) return true;
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace

TEST_SUITE("cardinal") {
  TEST_CASE("kpair") {
    CHECK(kpair(empty(), empty()) == singleton(singleton(empty())));
    CHECK(kpair(empty(), singleton(empty())) ==
          from_children({singleton(empty()), from_children({empty(), singleton(empty())})}));
    for (std::uint64_t a = 0; a < 16; ++a)
      for (std::uint64_t b = 0; b < 16; ++b) {
        const HFSet p = kpair(S(a), S(b));
        const auto back = kpair_unpack(p);
        REQUIRE(back.has_value());
        REQUIRE(back->first == S(a));
        REQUIRE(back->second == S(b));
        for (std::uint64_t c = 0; c < 16; ++c)
          for (std::uint64_t d = 0; d < 16; ++d)
            if (kpair(S(c), S(d)) == p) REQUIRE((a == c && b == d));
      }
    CHECK_FALSE(kpair_unpack(S(6)).has_value());
  }

  TEST_CASE("product") {
    CHECK(product(empty(), S(5)) == empty());
    CHECK(product(singleton(empty()), singleton(empty())) == singleton(kpair(empty(), empty())));
    CHECK(product(V(2), V(3)).size() == 8);
  }

  TEST_CASE("injections") {
    CHECK(inj_exists(empty(), S(5)));
    CHECK_FALSE(inj_exists(V(3), V(2)));
    CHECK(inj_exists(singleton(empty()), singleton(singleton(empty()))));
    const auto f = find_injection(S(7), S(56));
    REQUIRE(f.has_value());
    CHECK(f->is_injective());
    CHECK(f->is_total_on(S(7)));
    CHECK(f->maps_into(S(56)));
    CHECK_FALSE(find_injection(S(15), S(7)).has_value());
  }

  TEST_CASE("injection search agrees with counting for sizes up to 4") {
    std::vector<HFSet> sets;
    for (std::uint64_t n = 0; n < 256; ++n)
      if (S(n).size() <= 4) sets.push_back(S(n));
    for (std::size_t i = 0; i < sets.size(); i += 5)
      for (std::size_t j = 0; j < sets.size(); j += 3) {
        const HFSet x = sets[i], y = sets[j];
        const bool want = brute_injection(x.size(), y.size());
        REQUIRE(inj_exists(x, y) == want);
        REQUIRE(find_injection(x, y).has_value() == want);
      }
  }

  TEST_CASE("cardinal relations") {
    CHECK(card_eq(S(77), S(77)));
    CHECK(card_eq(singleton(empty()), singleton(singleton(empty()))));
    CHECK(card_lt(V(2), V(3)));
    CHECK(card_le(V(2), V(2)));
    CHECK_FALSE(card_lt(V(2), V(2)));
  }

  TEST_CASE("cardinal operations") {
    CHECK(card_add(empty(), empty()) == empty());
    CHECK(card_add(singleton(empty()), singleton(empty())) ==
          from_children({kpair(empty(), empty()), kpair(empty(), singleton(empty()))}));
    CHECK(card_add(V(3), V(3)).size() == 8);
    CHECK(card_exp(S(5), empty()) == singleton(empty()));
    CHECK(card_exp(empty(), singleton(empty())) == empty());
    CHECK(card_exp(V(2), V(2)).size() == 4);
    CHECK(card_succ(S(3)) == S(11));
    CHECK(card(empty()) == Code{0});
    CHECK(card(V(4)) == Code{16});
    CHECK(card(S(7)) == Code{3});
  }

  TEST_CASE("sizes of operations for operands up to 4") {
    const auto samples = cardinal_samples();
    for (HFSet x : samples)
      for (HFSet y : samples) {
        const std::uint64_t a = x.size(), b = y.size();
        REQUIRE(card_add(x, y).size() == a + b);
        REQUIRE(product(x, y).size() == a * b);
        const HFSet fs = card_exp(x, y);
        REQUIRE(fs.size() == ipow(a, b));
        for (HFSet g : fs.members()) {
          const auto fg = FunctionGraph::from_set(g);
          REQUIRE(fg.has_value());
          REQUIRE(fg->is_total_on(y));
          REQUIRE(fg->maps_into(x));
        }
      }
  }

  TEST_CASE("function graphs") {
    const auto f = FunctionGraph::from_pairs({{S(0), S(1)}, {S(1), S(1)}});
    CHECK(f.domain() == S(3));
    CHECK(f.range() == S(2));
    CHECK(f.apply(S(1)) == S(1));
    CHECK_FALSE(f.apply(S(2)).has_value());
    CHECK_FALSE(f.is_injective());
    CHECK_THROWS_AS(FunctionGraph::from_pairs({{S(0), S(1)}, {S(0), S(2)}}), std::invalid_argument);
    CHECK_FALSE(FunctionGraph::from_set(from_children({kpair(S(0), S(1)), kpair(S(0), S(2))})).has_value());
    CHECK(FunctionGraph::from_set(f.graph())->pairs().size() == 2);
  }
}
