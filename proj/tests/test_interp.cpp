#include <doctest.h>

#include "hf/corpus.hpp"
#include "hf/eval.hpp"
#include "hf/interp.hpp"
#include "hf/syntax.hpp"

using namespace hf;

namespace {

FormulaPtr A(std::string_view s) { return parse_formula(s, Language::arith); }
FormulaPtr Z(std::string_view s) { return parse_formula(s, Language::set); }
HFSet S(std::uint64_t n) { return decode(n); }

const char* kBit = "exists n < y. exists m < exp(2, x). y = exp(2, x + 1) * n + exp(2, x) + m";

}  // namespace

TEST_SUITE("interp") {
  TEST_CASE("map names") {
    CHECK(InterpMap::parse("a")->tag == MapTag::a);
    CHECK(InterpMap::parse("d")->source == Language::arith);
    CHECK(InterpMap::parse("d")->target == Language::set);
    CHECK(InterpMap::parse("a")->source == Language::set);
    CHECK_FALSE(InterpMap::parse("b").has_value());
    CHECK(std::string(InterpMap::of(MapTag::c).name()) == "c");
  }

  TEST_CASE("a examples") {
    CHECK(alpha_equal(translate_a({Z("x in y")}).f, A(kBit)));
    CHECK(equal(translate_a({Z("0e = 0e")}).f, A("0 = 0")));
    const auto f = translate_a({Z("forall u in P(x). u in P(x)")});
    CHECK(is_bounded_arith(f));
    EvalContext ctx;
    for (std::uint64_t x = 0; x < 16; ++x) REQUIRE(eval_arith(f, {{"x", Code{x}}}, ctx).value);
    // The bit formula against the bits of y.
    const ArithFormula bit = translate_a({Z("x in y")});
    for (std::uint64_t x = 0; x < 12; ++x)
      for (std::uint64_t y = 0; y < 300; ++y)
        REQUIRE(eval_arith(bit, {{"x", Code{x}}, {"y", Code{y}}}, ctx).value == (((y >> x) & 1U) == 1));
  }

  TEST_CASE("membership formula avoids names in use") {
    const auto f = membership_formula(Term::var("n"), Term::var("m"));
    const auto vars = free_vars(f);
    CHECK(vars == std::set<std::string>{"m", "n"});
    CHECK(alpha_equal(membership_formula(Term::var("x"), Term::var("y")), A(kBit)));
    CHECK_FALSE(alpha_equal(membership_formula(Term::var("x"), Term::var("y"), {}, true), A(kBit)));
  }

  TEST_CASE("c examples") {
    EvalContext ctx;
    const auto z = translate_c({A("0 = 0")});
    CHECK(equal(z.f, Z("0e ≃_c 0e")));
    CHECK(eval_set(z, {}, ctx).value);
    CHECK(eval_set(translate_c({A("S(0) + S(0) = S(S(0))")}), {}, ctx).value);
    CHECK(eval_set(translate_c({A("exp(S(S(0)), S(S(0))) = S(S(S(S(0))))")}), {}, ctx).value);
    CHECK_FALSE(eval_set(translate_c({A("S(0) = 0")}), {}, ctx).value);
    CHECK(equal(translate_c({A("exp(x, y) = z")}).f, Z("cexp(x, y) ≃_c z")));
    CHECK(equal(translate_c({A("x < y")}).f, Z("x <_c y")));
  }

  TEST_CASE("o examples") {
    EvalContext ctx;
    CHECK(eval_set(translate_o({A("0 < S(0)")}), {}, ctx).value);
    const auto r = eval_set(translate_o({A("forall x. x < S(x)")}), {}, ctx);
    CHECK(r.value);
    CHECK(r.at_cutoff);
    CHECK(equal(translate_o({A("exists x. x = x")}).f, Z("exists x. x in Ord & x = x")));
    CHECK(equal(translate_o({A("x < y")}).f, Z("x in y")));
  }

  TEST_CASE("d examples") {
    CHECK(equal(translate_d({A("0 = 0")}).f, Z("0e = 0e")));
    CHECK(equal(translate_d({A("x < y")}).f, Z("x <_a y")));
    CHECK(equal(translate_d({A("S(x) + y * exp(x, y) = 0")}).f, Z("add_a(Sa(x), mul_a(y, exp_a(x, y))) = 0e")));
    const SetFormula bit = translate_d({A(kBit)});
    CHECK(is_bounded_set(bit));
    EvalContext ctx;
    for (std::uint64_t x = 0; x < 16; ++x)
      for (std::uint64_t y = 0; y < 64; ++y)
        REQUIRE(eval_set(bit, {{"x", S(x)}, {"y", S(y)}}, ctx).value == mem(S(x), S(y)));
  }

  TEST_CASE("translation is homomorphic on connectives") {
    const auto p = A("x < y");
    const auto q = A("y = 0");
    for (const MapTag t : {MapTag::c, MapTag::o, MapTag::d}) {
      const auto m = InterpMap::of(t);
      const auto tp = translate(m, p, Language::arith);
      const auto tq = translate(m, q, Language::arith);
      CHECK(equal(translate(m, Formula::negation(p), Language::arith), Formula::negation(tp)));
      CHECK(equal(translate(m, Formula::binary(FormulaKind::implies, p, q), Language::arith),
                  Formula::binary(FormulaKind::implies, tp, tq)));
      CHECK(equal(translate(m, Formula::binary(FormulaKind::and_, p, q), Language::arith),
                  Formula::binary(FormulaKind::and_, tp, tq)));
    }
  }

  TEST_CASE("a and d preserve boundedness") {
    for (const auto& e : load_corpus(corpus_file("set.txt"))) {
      const auto f = Z(e.text);
      if (is_bounded(f)) REQUIRE(is_bounded_arith(translate_a({f})));
    }
    for (const auto& e : load_corpus(corpus_file("arith.txt"))) {
      const auto f = A(e.text);
      if (is_bounded(f)) REQUIRE(is_bounded_set(translate_d({f})));
    }
  }

  TEST_CASE("compose") {
    const auto m_a = InterpMap::of(MapTag::a), m_c = InterpMap::of(MapTag::c), m_d = InterpMap::of(MapTag::d);
    EvalContext ctx;
    const auto taut = compose(m_d, m_a, A("0 = 0"), Language::arith);
    CHECK(eval_arith({taut}, {}, ctx).value);
    const auto back = compose(m_a, m_d, Z("x in y"), Language::set);
    for (std::uint64_t x = 0; x < 8; ++x)
      for (std::uint64_t y = 0; y < 64; ++y)
        REQUIRE(eval_set({back}, {{"x", S(x)}, {"y", S(y)}}, ctx).value == mem(S(x), S(y)));
    // c then a passes the direction check; a has no clause for the cardinal relations.
    CHECK_THROWS_AS(compose(m_c, m_a, A("0 = 0"), Language::arith), Untranslatable);
    CHECK_NOTHROW(compose(m_a, m_c, Z("x in y"), Language::set));
    CHECK_THROWS_AS(compose(m_a, m_c, A("x < y"), Language::arith), LanguageMismatch);
    CHECK_THROWS_AS(compose(m_d, m_d, A("x < y"), Language::arith), LanguageMismatch);
    CHECK_THROWS_AS(compose(m_d, m_a, Z("x in y"), Language::set), LanguageMismatch);
    CHECK_THROWS_AS(translate(m_a, A("x < y"), Language::arith), LanguageMismatch);
  }

  TEST_CASE("set literals and large numerals") {
    CHECK(equal(translate_a({Z("x = #6")}).f, A("x = 6")));
    CHECK(equal(translate_d({A("x = 2")}).f, Z("x = Sa(Sa(0e))")));
    CHECK(equal(translate_d({A("x = 100")}).f, Z("x = #100")));
  }
}
