#include <doctest.h>

#include "hf/syntax.hpp"
#include "hf/verify.hpp"

using namespace hf;

namespace {

std::vector<CorpusEntry> entries(std::initializer_list<std::pair<const char*, const char*>> items) {
  std::vector<CorpusEntry> out;
  int i = 0;
  for (const auto& [tag, text] : items) out.push_back({"t:" + std::to_string(++i), tag, text});
  return out;
}

const Case* find(const Report& r, std::string_view id) {
  for (const auto& c : r.cases)
    if (c.id == id) return &c;
  return nullptr;
}

void require_replayable(const Report& r) {
  for (const auto& c : r.cases) {
    if (c.verdict != Verdict::fail) continue;
    CAPTURE(c.id);
    REQUIRE(c.counterexample.has_value());
    REQUIRE(c.recheck);
    REQUIRE(c.recheck());
  }
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("corpus loading") {
    const auto arith = load_corpus(corpus_file("arith.txt"));
    CHECK(arith.size() >= 40);
    CHECK(arith.front().id.starts_with("arith:"));
    const auto opei = load_corpus(corpus_file("opei.txt"));
    CHECK(opei.front().tag == "holds");
    CHECK_THROWS_AS(load_corpus("/nonexistent/x.txt"), std::runtime_error);
  }

  TEST_CASE("axioms at a small cutoff") {
    EvalContext ctx;
    ctx.set_cutoff = 64;
    const auto sep = entries({{"", "u in y"}, {"", "!(u = p)"}, {"", "exists w in u. w in y"}});
    const Report r = check_axioms(ctx, sep);
    CHECK(r.exit_code() == 0);
    CHECK(find(r, "extensionality") != nullptr);
    CHECK(find(r, "foundation") != nullptr);
    CHECK(find(r, "dedekind-finiteness") != nullptr);
    CHECK(find(r, "weak-hierarchy") != nullptr);
    CHECK(r.totals().pass == r.cases.size());
  }

  TEST_CASE("opei branches") {
    EvalContext ctx;
    ctx.set_cutoff = 64;
    const auto preds = entries({{"holds", "x = x"},
                                {"hypothesis-fails", "forall y in x. forall w in y. w in x"},
                                {"", "forall y in x. !(y in y)"}});
    const Report r = check_opei(preds, ctx);
    CHECK(r.exit_code() == 0);
    const Case* t = find(r, "t:2");
    REQUIRE(t != nullptr);
    CHECK(t->detail == "hypothesis-fails");
    REQUIRE(t->counterexample.has_value());
    CHECK((*t->counterexample)["witness"]["x"] == "#0");
    CHECK((*t->counterexample)["witness"]["z"] == "#1");

    const auto wrong = entries({{"holds", "forall y in x. forall w in y. w in x"}});
    const Report bad = check_opei(wrong, ctx);
    CHECK(bad.exit_code() == 1);
    require_replayable(bad);
  }

  TEST_CASE("theorem6 small ranges") {
    EvalContext ctx;
    CHECK(check_theorem6(ctx, 256).exit_code() == 0);
    ctx.arith_mode = ArithMode::Kind::literal;
    const Report lit = check_theorem6(ctx, 16);
    CHECK(lit.exit_code() == 0);
    CHECK(lit.context["literal_ops"].get<std::uint64_t>() > 0);
  }

  TEST_CASE("mutations fail with replayable counterexamples") {
    EvalContext ctx;
    ctx.corrupt_successor = true;
    const Report a = check_theorem6(ctx, 64);
    CHECK(a.exit_code() == 1);
    CHECK(a.totals().fail > 0);
    require_replayable(a);

    EvalContext ctx2;
    ctx2.corrupt_bit_formula = true;
    const Report b = check_theorem6(ctx2, 64);
    CHECK(b.exit_code() == 1);
    require_replayable(b);
  }

  TEST_CASE("round trips on a small corpus") {
    EvalContext ctx;
    const auto arith = entries({{"", "x + y = y + x"}, {"", "x < y -> S(x) < S(y)"}, {"", "exists v < 9. x = v + v"}});
    const auto m_a = InterpMap::of(MapTag::a), m_d = InterpMap::of(MapTag::d), m_o = InterpMap::of(MapTag::o);
    CHECK(check_roundtrip(arith, m_d, m_a, ctx, 32).exit_code() == 0);
    const auto set = entries({{"", "x in y"}, {"", "forall z in x. z in y"}, {"", "U(x) = y"}});
    CHECK(check_roundtrip(set, m_a, m_d, ctx, 32).exit_code() == 0);
    const auto sums = entries({{"", "x + y = y + x"}, {"", "x * 2 = x + x"}});
    const Report skipped = check_roundtrip(sums, m_o, m_a, ctx, 8);
    CHECK(skipped.cases.empty());
    CHECK(skipped.context["skipped"].size() == 2);
  }

  TEST_CASE("ordinal map is not inverse to a") {
    EvalContext ctx;
    const auto arith = entries({{"", "x < y"}, {"", "x + y = y + x"}});
    const Report r = check_roundtrip(arith, InterpMap::of(MapTag::o), InterpMap::of(MapTag::a), ctx, 16);
    CHECK(r.exit_code() == 1);
    require_replayable(r);
  }

  TEST_CASE("syntax errors in a corpus fail the case") {
    EvalContext ctx;
    const auto bad = entries({{"", "x + = y"}});
    const Report r = check_roundtrip(bad, InterpMap::of(MapTag::d), InterpMap::of(MapTag::a), ctx, 4);
    CHECK(r.exit_code() == 1);
  }

  TEST_CASE("cardinal model") {
    EvalContext ctx;
    const auto laws = entries({{"", "x + y = y + x"},
                               {"", "exp(x, S(y)) = exp(x, y) * x"},
                               {"false", "S(0) = 0"},
                               {"", "x * (y + z) = x * y + x * z"}});
    const Report r = check_cardinal_model(laws, ctx);
    CHECK(r.exit_code() == 0);
    CHECK(cardinal_samples().size() == 9);
    const auto wrong = entries({{"", "x + S(0) = x"}});
    const Report bad = check_cardinal_model(wrong, ctx);
    CHECK(bad.exit_code() == 1);
    require_replayable(bad);
  }

  TEST_CASE("successor suite") {
    const Report r = check_successor(1024);
    CHECK(r.exit_code() == 0);
    CHECK(r.cases.size() == 3);
  }

  TEST_CASE("report serialization") {
    Report r;
    r.suite = "demo";
    r.add({"a", Verdict::pass, std::nullopt, {}, {}});
    r.add({"b", Verdict::budget, std::nullopt, "too big", {}});
    CHECK(r.exit_code() == 2);
    r.add({"c", Verdict::fail, nlohmann::ordered_json{{"x", "#1"}}, {}, [] { return true; }});
    CHECK(r.exit_code() == 1);
    const auto j = r.to_json(false);
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(r.to_json(true).contains("timestamp"));
    CHECK(j["totals"]["fail"] == 1);
    CHECK(j["cases"][2]["counterexample"]["x"] == "#1");
    CHECK(j.dump() == r.to_json(false).dump());
    Report all;
    all.suite = "all";
    all.merge(r);
    CHECK(all.cases[0].id == "demo/a");
    CHECK(all.to_human().find("demo/c") != std::string::npos);
  }
}
