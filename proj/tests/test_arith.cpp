#include <doctest.h>

#include "hf/arith.hpp"
#include "hf/order.hpp"

using namespace hf;

namespace {

HFSet S(std::uint64_t n) { return decode(n); }
std::uint64_t code_of(HFSet x) { return *encode(x).to_u64(); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("zero") {
    CHECK(zero_a() == empty());
    CHECK(encode(zero_a()) == Code{0});
    for (std::uint64_t n = 1; n < 300; ++n) REQUIRE(ack_less(zero_a(), S(n)));
  }

  TEST_CASE("segment field") {
    CHECK(segment_field(empty()) == empty());
    CHECK(segment_field(S(1)) == singleton(S(1)));
    for (std::uint64_t n = 0; n < 40; ++n) {
      const HFSet f = segment_field(S(n));
      REQUIRE(f.size() == n);
      for (std::uint64_t i = 1; i <= n; ++i) REQUIRE(mem(S(i), f));
    }
  }

  TEST_CASE("examples in both modes") {
    for (const ArithMode mode : {ArithMode::fast(), ArithMode::literal()}) {
      CAPTURE(static_cast<int>(mode.kind));
      for (std::uint64_t y = 0; y < 20; ++y) REQUIRE(add_a(empty(), S(y), mode) == S(y));
      CHECK(add_a(singleton(empty()), singleton(singleton(empty())), mode) == S(3));
      CHECK(add_a(S(20), S(22), mode) == S(42));
      for (std::uint64_t x = 0; x < 20; ++x) REQUIRE(mul_a(S(x), empty(), mode) == empty());
      CHECK(mul_a(S(2), S(3), mode) == S(6));
      CHECK(exp_a(S(2), S(3), mode) == S(8));
    }
    CHECK(less_a(empty(), singleton(empty())));
    CHECK(succ_a(S(7)) == S(8));
    for (std::uint64_t n = 0; n < 1024; ++n) REQUIRE(less_a(S(n), succ_a(S(n))));
  }

  TEST_CASE("fast mode homomorphism") {
    for (std::uint64_t x = 0; x < 256; x += 3)
      for (std::uint64_t y = 0; y < 256; y += 5) REQUIRE(code_of(add_a(S(x), S(y))) == x + y);
    for (std::uint64_t x = 0; x < 64; ++x)
      for (std::uint64_t y = 0; y < 64; ++y) REQUIRE(code_of(mul_a(S(x), S(y))) == x * y);
    for (std::uint64_t b = 0; b < 16; ++b)
      for (std::uint64_t e = 0; e < 6; ++e) REQUIRE(encode(exp_a(S(b), S(e))) == Code{ipow(b, e)});
  }

  TEST_CASE("literal mode agrees with fast mode") {
    const ArithMode lit = ArithMode::literal();
    for (std::uint64_t x = 0; x < 24; ++x)
      for (std::uint64_t y = 0; y < 24; ++y) {
        REQUIRE(add_a(S(x), S(y), lit) == add_a(S(x), S(y)));
        if (x * y <= 200) REQUIRE(mul_a(S(x), S(y), lit) == mul_a(S(x), S(y)));
      }
    for (std::uint64_t b = 0; b < 6; ++b)
      for (std::uint64_t e = 0; e < 4; ++e)
        if (ipow(b, e) <= 200) REQUIRE(exp_a(S(b), S(e), lit) == exp_a(S(b), S(e)));
    CHECK_THROWS_AS(add_a(S(65), S(1), lit), BudgetExceeded);
  }

  TEST_CASE("model laws") {
    for (std::uint64_t x = 0; x < 12; ++x)
      for (std::uint64_t y = 0; y < 12; ++y) {
        const HFSet a = S(x), b = S(y);
        REQUIRE(add_a(a, b) == add_a(b, a));
        REQUIRE(mul_a(a, b) == mul_a(b, a));
        REQUIRE(add_a(a, succ_a(b)) == succ_a(add_a(a, b)));
        REQUIRE(mul_a(a, succ_a(b)) == add_a(mul_a(a, b), a));
        if (y < 5) REQUIRE(exp_a(a, succ_a(b)) == mul_a(exp_a(a, b), a));
        REQUIRE(less_a(a, b) == (x < y));
      }
  }

  TEST_CASE("exp budget") {
    CHECK_THROWS_AS(exp_a(S(2), S(1u << 21)), BudgetExceeded);
  }
}
