// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hf/arith.hpp"
#include "hf/cardinal.hpp"
#include "hf/order.hpp"
#include "hf/syntax.hpp"
#include "hf/verify.hpp"

using namespace hf;

namespace {

HFSet S(std::uint64_t n) { return decode(n); }

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool replayable(const Report& r) {
  for (const auto& c : r.cases)
    if (c.verdict == Verdict::fail && (!c.counterexample || !c.recheck || !c.recheck())) return false;
  return true;
}

struct Outcome {
  bool ok;
  std::string note;
};

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %2d  %-40s %7.2f s (limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", n, name, secs, limit_s,
              out.note.empty() ? "" : "  ", out.note.c_str());
  if (!in_time) std::printf("      over the time limit\n");
  std::fflush(stdout);
}

Outcome bijection() {
  for (std::uint64_t n = 0; n < 65536; ++n) {
    const HFSet x = decode(n);
    if (encode(x) != Code{n}) return {false, "encode(decode(" + std::to_string(n) + "))"};
    if (!(decode(encode(x)) == x)) return {false, "decode(encode(x)) for code " + std::to_string(n)};
  }
  return {true, "65536 codes"};
}

Outcome levels() {
  const std::uint64_t sizes[] = {1, 2, 4, 16, 65536};
  for (std::uint32_t m = 1; m <= 5; ++m) {
    const HFSet v = materialize_level(m);
    if (level_size(m) != sizes[m - 1] || v.size() != sizes[m - 1]) return {false, "|V_" + std::to_string(m) + "|"};
    for (std::uint64_t i = 0; i < v.size(); ++i)
      if (!(v.members()[i] == decode(i))) return {false, "member " + std::to_string(i) + " of V_" + std::to_string(m)};
  }
  return {true, "V_1..V_5"};
}

Outcome ack_agreement() {
  std::vector<HFSet> sets;
  for (std::uint64_t n = 0; n < 4096; ++n) sets.push_back(S(n));
  for (std::uint64_t x = 0; x < 4096; ++x)
    for (std::uint64_t y = 0; y < 4096; ++y)
      if (ack_less(sets[x], sets[y]) != (x < y))
        return {false, "recursive at " + std::to_string(x) + ", " + std::to_string(y)};
  for (std::uint64_t x = 0; x < 64; ++x)
    for (std::uint64_t y = 0; y < 64; ++y)
      if (ack_less_literal(sets[x], sets[y]) != (x < y))
        return {false, "literal at " + std::to_string(x) + ", " + std::to_string(y)};
  return {true, "2^24 recursive pairs, 2^12 literal pairs"};
}

Outcome theorem6() {
  EvalContext fast;
  const Report f = check_theorem6(fast, 4096);
  if (!f.all_pass() || f.cases.size() != 4096) return {false, "fast mode"};
  EvalContext lit;
  lit.arith_mode = ArithMode::Kind::literal;
  const Report l = check_theorem6(lit, 64);
  if (!l.all_pass()) return {false, "literal mode"};
  return {true, "literal ops " + std::to_string(l.context["literal_ops"].get<std::uint64_t>())};
}

Outcome successor() {
  const Report r = check_successor(4096);
  return {r.all_pass(), "codes < 4096 and rank boundaries"};
}

Outcome homomorphism() {
  for (std::uint64_t x = 0; x < 256; ++x)
    for (std::uint64_t y = 0; y < 256; ++y)
      if (encode(add_a(S(x), S(y))) != Code{x + y}) return {false, "add"};
  for (std::uint64_t x = 0; x < 64; ++x)
    for (std::uint64_t y = 0; y < 64; ++y)
      if (encode(mul_a(S(x), S(y))) != Code{x * y}) return {false, "mul"};
  for (std::uint64_t b = 0; b < 16; ++b)
    for (std::uint64_t e = 0; e < 6; ++e)
      if (encode(exp_a(S(b), S(e))) != Code{ipow(b, e)}) return {false, "exp"};
  const ArithMode lit = ArithMode::literal(64);
  std::uint64_t literal_cases = 0;
  for (std::uint64_t x = 0; x < 64; ++x)
    for (std::uint64_t y = 0; y < 64; ++y) {
      if (!(add_a(S(x), S(y), lit) == add_a(S(x), S(y)))) return {false, "literal add"};
      if (!(mul_a(S(x), S(y), lit) == mul_a(S(x), S(y)))) return {false, "literal mul"};
      literal_cases += 2;
    }
  for (std::uint64_t b = 0; b < 16; ++b)
    for (std::uint64_t e = 0; e < 6; ++e) {
      if (!(exp_a(S(b), S(e), lit) == exp_a(S(b), S(e)))) return {false, "literal exp"};
      ++literal_cases;
    }
  return {true, std::to_string(literal_cases) + " literal/fast agreements"};
}

Outcome cardinal() {
  const auto samples = cardinal_samples();
  for (HFSet x : samples)
    for (HFSet y : samples) {
      const std::uint64_t a = x.size(), b = y.size();
      if (card_add(x, y).size() != a + b) return {false, "card_add"};
      if (product(x, y).size() != a * b) return {false, "product"};
      if (card_exp(x, y).size() != ipow(a, b)) return {false, "card_exp"};
    }
  std::vector<HFSet> small;
  for (std::uint64_t n = 0; n < 256; ++n)
    if (S(n).size() <= 4) small.push_back(S(n));
  for (HFSet x : small)
    for (HFSet y : small)
      if (inj_exists(x, y) != find_injection(x, y).has_value()) return {false, "inj_exists"};
  EvalContext ctx;
  const Report r = check_cardinal_model(load_corpus(corpus_file("cardinal_laws.txt")), ctx);
  if (!r.all_pass()) return {false, "law corpus"};
  return {true, std::to_string(r.cases.size()) + " laws"};
}

Outcome axioms() {
  EvalContext ctx;
  ctx.set_cutoff = 256;
  const auto sep = load_corpus(corpus_file("separation.txt"));
  if (sep.size() < 50) return {false, "fewer than 50 separation instances"};
  const Report r = check_axioms(ctx, sep);
  std::size_t sep_cases = 0;
  for (const auto& c : r.cases) sep_cases += c.id.starts_with("separation/");
  if (sep_cases < 50) return {false, "separation cases missing"};
  return {r.all_pass(), std::to_string(r.cases.size()) + " cases"};
}

Outcome roundtrips() {
  EvalContext ctx;
  const auto arith = load_corpus(corpus_file("arith.txt"));
  const auto set = load_corpus(corpus_file("set.txt"));
  const auto a = InterpMap::of(MapTag::a), d = InterpMap::of(MapTag::d), o = InterpMap::of(MapTag::o);
  const Report da = check_roundtrip(arith, d, a, ctx, 256);
  const Report ad = check_roundtrip(set, a, d, ctx, 256);
  if (da.cases.size() < 40 || ad.cases.size() < 40) return {false, "corpus too small"};
  if (!da.all_pass()) return {false, "d then a"};
  if (!ad.all_pass()) return {false, "a then d"};
  const Report oa = check_roundtrip(arith, o, a, ctx, 256);
  if (oa.totals().fail == 0) return {false, "o then a did not fail"};
  return {true, std::to_string(da.cases.size()) + " + " + std::to_string(ad.cases.size()) + " formulas, o/a fails " +
                    std::to_string(oa.totals().fail)};
}

Outcome opei() {
  EvalContext ctx;
  const auto preds = load_corpus(corpus_file("opei.txt"));
  const Report r = check_opei(preds, ctx);
  if (!r.all_pass()) return {false, "branch mismatch"};
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (preds[i].text != "forall y in x. forall w in y. w in x") continue;
    const Case& c = r.cases[i];
    if (c.detail != "hypothesis-fails" || !c.counterexample) return {false, "transitivity branch"};
    const auto& w = (*c.counterexample)["witness"];
    if (w["x"] != "#0" || w["z"] != "#1") return {false, "transitivity witness " + w.dump()};
    return {true, std::to_string(r.cases.size()) + " predicates"};
  }
  return {false, "transitivity predicate missing"};
}

Outcome mutation() {
  EvalContext succ;
  succ.corrupt_successor = true;
  const Report a = check_theorem6(succ, 64);
  EvalContext bit;
  bit.corrupt_bit_formula = true;
  const Report b = check_theorem6(bit, 64);
  if (a.totals().fail == 0) return {false, "corrupted successor passed"};
  if (b.totals().fail == 0) return {false, "corrupted bit formula passed"};
  if (!replayable(a) || !replayable(b)) return {false, "counterexample did not replay"};
  return {true, std::to_string(a.totals().fail) + " + " + std::to_string(b.totals().fail) + " replayed failures"};
}

}  // namespace

int main() {
  criterion(1, "Ackermann bijection", 5, bijection);
  criterion(2, "Level structure", 10, levels);
  criterion(3, "Ack-order agreement", 60, ack_agreement);
  criterion(4, "Membership as the bit formula", 60, theorem6);
  criterion(5, "Successor and carry", 10, successor);
  criterion(6, "Arithmetic homomorphism", 60, homomorphism);
  criterion(7, "Cardinal interpretation", 30, cardinal);
  criterion(8, "Axiom suite", 30, axioms);
  criterion(9, "Round trips", 120, roundtrips);
  criterion(10, "One Point Extension Induction", 10, opei);
  criterion(11, "Mutation self-tests", 60, mutation);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
