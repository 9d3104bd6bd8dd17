#include "hf/verify.hpp"

#include <algorithm>
#include <functional>

#include "hf/cardinal.hpp"
#include "hf/literal.hpp"
#include "hf/order.hpp"
#include "hf/syntax.hpp"

namespace hf {
namespace {

using json = nlohmann::ordered_json;

std::string show(const Code& c) { return c.to_decimal(); }

std::string show(HFSet x) {
  const Code* c = x.code();
  if (c && c->bit_length() <= 64) return "#" + c->to_decimal();
  return print_set_literal(x);
}

json context_json(const EvalContext& ctx) {
  return {{"nat_cutoff", ctx.nat_cutoff},
          {"set_cutoff", ctx.set_cutoff},
          {"code_budget", ctx.code_budget},
          {"literal_cutoff", ctx.literal_cutoff},
          {"arith_mode", ctx.arith_mode == ArithMode::Kind::literal ? "literal" : "fast"}};
}

template <typename V>
std::vector<V> domain_values(std::uint64_t n);

template <>
std::vector<Code> domain_values<Code>(std::uint64_t n) {
  std::vector<Code> out;
  for (std::uint64_t i = 0; i < n; ++i) out.emplace_back(i);
  return out;
}

template <>
std::vector<HFSet> domain_values<HFSet>(std::uint64_t n) {
  std::vector<HFSet> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(decode(i));
  return out;
}

template <typename V>
EvalResult eval_env(const FormulaPtr& f, const std::vector<std::string>& vars, const std::vector<V>& vals,
                    const EvalContext& ctx) {
  std::map<std::string, V> env;
  for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = vals[i];
  if constexpr (std::is_same_v<V, Code>)
    return eval_arith({f}, env, ctx);
  else
    return eval_set({f}, env, ctx);
}

template <typename V>
json assignment_json(const std::vector<std::string>& vars, const std::vector<V>& vals) {
  json j = json::object();
  for (std::size_t i = 0; i < vars.size(); ++i) j[vars[i]] = show(vals[i]);
  return j;
}

// Calls visit on every assignment of `domain` values to `arity` slots, in
// lexicographic order of indices; visit returns false to stop.
template <typename V, typename F>
void for_each_assignment(const std::vector<V>& domain, std::size_t arity, F&& visit) {
  std::vector<std::size_t> idx(arity, 0);
  std::vector<V> vals(arity, domain.empty() ? V{} : domain[0]);
  if (domain.empty() && arity > 0) return;
  while (true) {
    for (std::size_t i = 0; i < arity; ++i) vals[i] = domain[idx[i]];
    if (!visit(vals)) return;
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++idx[k] < domain.size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (arity == 0) return;
  }
}

// A universally read formula over its free variables: fails at the first
// falsifying assignment.
template <typename V>
Case check_universal(const std::string& id, const FormulaPtr& f, const std::vector<V>& domain,
                     const EvalContext& ctx, std::vector<std::string> vars = {}) {
  if (vars.empty()) {
    const auto fv = free_vars(f);
    vars.assign(fv.begin(), fv.end());
  }
  Case c{id, Verdict::pass, std::nullopt, {}, {}};
  try {
    CompiledFormula<V> compiled(f, std::is_same_v<V, Code> ? Language::arith : Language::set, vars, ctx);
    bool at_cutoff = false;
    for_each_assignment(domain, vars.size(), [&](const std::vector<V>& vals) {
      const EvalResult r = compiled(vals);
      at_cutoff |= r.at_cutoff;
      if (r.value) return true;
      c.verdict = Verdict::fail;
      c.counterexample = assignment_json(vars, vals);
      c.recheck = [f, vars, vals, ctx] { return !eval_env(f, vars, vals, ctx).value; };
      return false;
    });
    if (at_cutoff) c.detail = "at cutoff";
  } catch (const BudgetExceeded& e) {
    c.verdict = Verdict::budget;
    c.detail = e.what();
  }
  return c;
}

// ---- axioms ----

Case check_dedekind(const std::vector<HFSet>& domain) {
  Case c{"dedekind-finiteness", Verdict::pass, std::nullopt, {}, {}};
  std::uint64_t checked = 0;
  for (HFSet x : domain) {
    const std::size_t n = x.size();
    if (n > 4) continue;
    const auto members = x.members();
    std::vector<std::size_t> img(n, 0);
    // Odometer over all functions x -> x.
    while (true) {
      std::vector<std::pair<HFSet, HFSet>> pairs;
      for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(members[i], members[img[i]]);
      const FunctionGraph g = FunctionGraph::from_pairs(pairs);
      ++checked;
      if (g.is_injective() && !(g.range() == x)) {
        c.verdict = Verdict::fail;
        c.counterexample = json{{"x", show(x)}, {"f", print_set_literal(g.graph())}};
        c.recheck = [g, x] { return g.is_injective() && !(g.range() == x); };
        return c;
      }
      std::size_t k = 0;
      while (k < n && ++img[k] == n) img[k++] = 0;
      if (k == n) break;
    }
  }
  c.detail = std::to_string(checked) + " self-maps";
  return c;
}

bool whp_holds(HFSet x, const Limits& lim) {
  const LevelRef r = level_of(x, lim);
  if (!r.materialized) return false;
  const HFSet R = *r.materialized;
  if (!mem(x, R) || !is_level(R, lim)) return false;
  for (std::uint32_t k = 0; k <= 5; ++k) {
    const HFSet level = materialize_level(k, lim);
    if (mem(x, level) && !is_subset(R, level)) return false;
  }
  return true;
}

Case check_whp(const std::vector<HFSet>& domain, const Limits& lim) {
  Case c{"weak-hierarchy", Verdict::pass, std::nullopt, {}, {}};
  for (HFSet x : domain) {
    if (!whp_holds(x, lim)) {
      c.verdict = Verdict::fail;
      c.counterexample = json{{"x", show(x)}};
      c.recheck = [x, lim] { return !whp_holds(x, lim); };
      break;
    }
  }
  return c;
}

FormulaPtr separation_check(const FormulaPtr& phi) {
  // z = sep(u in y, phi): every member of z is a member of y satisfying phi,
  // and every such member of y is in z.
  const TermPtr y = Term::var("y");
  const TermPtr u = Term::var("u");
  const TermPtr z = Term::separation(TermKind::sep, "u", y, phi);
  const FormulaPtr sound = Formula::quantifier(
      FormulaKind::forall, "u", BoundKind::in, z,
      Formula::binary(FormulaKind::and_, Formula::atom(FormulaKind::mem, u, y), phi));
  const FormulaPtr complete =
      Formula::quantifier(FormulaKind::forall, "u", BoundKind::in, y,
                          Formula::binary(FormulaKind::implies, phi, Formula::atom(FormulaKind::mem, u, z)));
  return Formula::binary(FormulaKind::and_, sound, complete);
}

constexpr std::uint64_t kSeparationParams = 16;

// ---- theorem 6 ----

TermPtr numeral_term(std::uint64_t n) { return n == 0 ? Term::zero() : Term::natural(Code{n}); }

}  // namespace

Report check_axioms(const EvalContext& ctx, const std::vector<CorpusEntry>& separation) {
  Report rep;
  rep.suite = "axioms";
  rep.context = context_json(ctx);
  const auto domain = domain_values<HFSet>(ctx.set_cutoff);
  const Limits lim = ctx.limits();

  const std::pair<const char*, const char*> axioms[] = {
      {"extensionality", "(forall z in x. z in y) & (forall z in y. z in x) -> x = y"},
      {"foundation", "(exists y in x. y = y) -> exists y in x. forall z in y. !(z in x)"},
      {"empty-set", "!(x in 0e)"},
      {"pair-set", "x in pair(x, y) & y in pair(x, y) & forall z in pair(x, y). (z = x | z = y)"},
      {"sum-set", "(forall y in x. forall z in y. z in U(x)) & forall z in U(x). exists y in x. z in y"},
      {"power-set-sound", "forall z in P(x). forall w in z. w in x"},
      {"power-set-complete", "(forall w in z. w in x) -> z in P(x)"},
  };
  for (const auto& [id, text] : axioms) rep.add(check_universal<HFSet>(id, parse_formula(text, Language::set), domain, ctx));

  const auto params = domain_values<HFSet>(kSeparationParams);
  for (const auto& e : separation) {
    const std::string id = "separation/" + e.id;
    FormulaPtr phi;
    try {
      phi = parse_formula(e.text, Language::set);
    } catch (const Error& err) {
      rep.add({id, Verdict::fail, json{{"parse_error", err.what()}}, e.text, [] { return true; }});
      continue;
    }
    if (!is_bounded(phi)) {
      rep.add({id, Verdict::fail, json{{"error", "unbounded separation formula"}}, e.text, [] { return true; }});
      continue;
    }
    const FormulaPtr f = separation_check(phi);
    const auto fv = free_vars(f);
    std::vector<std::string> vars(fv.begin(), fv.end());
    // y ranges over the cutoff; the parameter p over a smaller domain.
    Case c{id, Verdict::pass, std::nullopt, {}, {}};
    if (fv.contains("p")) {
      for (HFSet p : params) {
        Case sub = check_universal<HFSet>(id, substitute(f, "p", Term::literal(p)), domain, ctx, {"y"});
        if (sub.verdict != Verdict::pass) {
          c = std::move(sub);
          if (c.counterexample) (*c.counterexample)["p"] = show(p);
          break;
        }
      }
    } else {
      c = check_universal<HFSet>(id, f, domain, ctx, {"y"});
    }
    rep.add(std::move(c));
  }
  rep.context["separation_instances"] = separation.size();
  rep.add(check_dedekind(domain));
  rep.add(check_whp(domain, lim));
  return rep;
}

namespace {

struct OpeiOutcome {
  std::string branch;
  json witness;
};

OpeiOutcome opei_branch(const FormulaPtr& phi, const std::vector<HFSet>& domain, const EvalContext& ctx) {
  CompiledSet compiled(phi, Language::set, {"x"}, ctx);
  auto holds = [&](HFSet x) { return compiled(std::span<const HFSet>(&x, 1)).value; };
  if (!holds(empty())) return {"hypothesis-fails", json{{"x", show(empty())}, {"base", true}}};
  for (HFSet x : domain) {
    if (!holds(x)) continue;
    for (HFSet z : domain) {
      const HFSet xz = set_union(x, singleton(z));
      if (!holds(xz)) return {"hypothesis-fails", json{{"x", show(x)}, {"z", show(z)}, {"x_with_z", show(xz)}}};
    }
  }
  for (HFSet x : domain) {
    // The hypothesis held but the conclusion did not.
    if (!holds(x)) return {"violated", json{{"x", show(x)}}};
  }
  return {"holds", nullptr};
}

}  // namespace

Report check_opei(const std::vector<CorpusEntry>& predicates, const EvalContext& ctx) {
  Report rep;
  rep.suite = "opei";
  rep.context = context_json(ctx);
  const auto domain = domain_values<HFSet>(ctx.set_cutoff);
  for (const auto& e : predicates) {
    Case c{e.id, Verdict::pass, std::nullopt, {}, {}};
    try {
      const FormulaPtr phi = parse_formula(e.text, Language::set);
      const OpeiOutcome out = opei_branch(phi, domain, ctx);
      const std::string expected = e.tag.empty() ? "holds" : e.tag;
      c.detail = out.branch;
      if (!out.witness.is_null()) c.counterexample = json{{"witness", out.witness}};
      if (out.branch != expected) {
        c.verdict = Verdict::fail;
        c.counterexample = json{{"expected", expected}, {"got", out.branch}, {"witness", out.witness}};
        c.recheck = [phi, domain, ctx, expected] { return opei_branch(phi, domain, ctx).branch != expected; };
      }
    } catch (const BudgetExceeded& err) {
      c.verdict = Verdict::budget;
      c.detail = err.what();
    } catch (const Error& err) {
      c.verdict = Verdict::fail;
      c.counterexample = json{{"error", err.what()}};
      c.recheck = [] { return true; };
    }
    rep.add(std::move(c));
  }
  return rep;
}

Report check_theorem6(const EvalContext& ctx, std::uint64_t max_code) {
  Report rep;
  rep.suite = "theorem6";
  rep.context = context_json(ctx);
  rep.context["max_code"] = max_code;
  rep.context["corrupt_successor"] = ctx.corrupt_successor;
  rep.context["corrupt_bit_formula"] = ctx.corrupt_bit_formula;
  EvalContext run = ctx;
  run.stats = std::make_shared<EvalStats>();
  const auto ys = domain_values<HFSet>(max_code);
  for (std::uint64_t xv = 0; xv < max_code; ++xv) {
    const std::string id = "x=" + std::to_string(xv);
    Case c{id, Verdict::pass, std::nullopt, {}, {}};
    try {
      const FormulaPtr bit =
          membership_formula(numeral_term(xv), Term::var("y"), {}, ctx.corrupt_bit_formula);
      const FormulaPtr f = translate_d({bit}).f;
      CompiledSet compiled(f, Language::set, {"y"}, run);
      const HFSet x = decode(xv);
      for (std::uint64_t yv = 0; yv < max_code; ++yv) {
        const HFSet y = ys[yv];
        const bool want = mem(x, y);
        if (compiled(std::span<const HFSet>(&y, 1)).value != want) {
          c.verdict = Verdict::fail;
          c.counterexample = json{{"x", show(x)}, {"y", show(y)}, {"member", want}};
          c.detail = print(f, Language::set);
          c.recheck = [f, y, want, run] {
            SetEnv env{{"y", y}};
            return eval_set({f}, env, run).value != want;
          };
          break;
        }
      }
    } catch (const BudgetExceeded& e) {
      c.verdict = Verdict::budget;
      c.detail = e.what();
    }
    rep.add(std::move(c));
  }
  rep.context["literal_ops"] = run.stats->literal_ops.load();
  rep.context["fast_ops"] = run.stats->fast_ops.load();
  rep.context["solver_hits"] = run.stats->solver_hits.load();
  return rep;
}

namespace {

template <typename V>
Case roundtrip_case(const std::string& id, const FormulaPtr& phi, const FormulaPtr& back,
                    const std::vector<V>& domain, const EvalContext& ctx) {
  std::set<std::string> fv = free_vars(phi);
  for (const auto& v : free_vars(back)) fv.insert(v);
  const std::vector<std::string> vars(fv.begin(), fv.end());
  const Language lang = std::is_same_v<V, Code> ? Language::arith : Language::set;
  Case c{id, Verdict::pass, std::nullopt, {}, {}};
  try {
    CompiledFormula<V> lhs(phi, lang, vars, ctx);
    CompiledFormula<V> rhs(back, lang, vars, ctx);
    std::uint64_t n = 0;
    for_each_assignment(domain, vars.size(), [&](const std::vector<V>& vals) {
      ++n;
      const bool a = lhs(vals).value;
      const bool b = rhs(vals).value;
      if (a == b) return true;
      c.verdict = Verdict::fail;
      json ce = assignment_json(vars, vals);
      ce["original"] = a;
      ce["round_trip"] = b;
      c.counterexample = ce;
      c.recheck = [phi, back, vars, vals, ctx] {
        return eval_env(phi, vars, vals, ctx).value != eval_env(back, vars, vals, ctx).value;
      };
      return false;
    });
    c.detail = std::to_string(n) + " assignments";
  } catch (const BudgetExceeded& e) {
    c.verdict = Verdict::budget;
    c.detail = e.what();
  }
  return c;
}

}  // namespace

Report check_roundtrip(const std::vector<CorpusEntry>& corpus, const InterpMap& m1, const InterpMap& m2,
                       const EvalContext& ctx, std::uint64_t max_value) {
  Report rep;
  rep.suite = std::string("roundtrip-") + m1.name() + m2.name();
  rep.context = context_json(ctx);
  rep.context["maps"] = {m1.name(), m2.name()};
  rep.context["max_value"] = max_value;
  const Language lang = m1.source;
  json skipped = json::array();
  const auto codes = lang == Language::arith ? domain_values<Code>(max_value) : std::vector<Code>{};
  const auto sets = lang == Language::set ? domain_values<HFSet>(max_value) : std::vector<HFSet>{};
  for (const auto& e : corpus) {
    FormulaPtr phi;
    FormulaPtr back;
    try {
      phi = parse_formula(e.text, lang);
      back = compose(m1, m2, phi, lang);
    } catch (const SyntaxError& err) {
      rep.add({e.id, Verdict::fail, json{{"parse_error", err.what()}}, e.text, [] { return true; }});
      continue;
    } catch (const LanguageMismatch&) {
      skipped.push_back(e.id);
      continue;
    }
    if (lang == Language::arith)
      rep.add(roundtrip_case<Code>(e.id, phi, back, codes, ctx));
    else
      rep.add(roundtrip_case<HFSet>(e.id, phi, back, sets, ctx));
  }
  rep.context["skipped"] = skipped;
  return rep;
}

std::vector<HFSet> cardinal_samples() {
  const HFSet e = empty();
  const HFSet one = singleton(e);
  const HFSet two = singleton(one);
  std::vector<HFSet> out = {e, one, two};
  out.push_back(from_children({e, one}));
  out.push_back(from_children({one, two}));
  out.push_back(ordinal(3));
  out.push_back(from_children({one, two, from_children({e, one})}));
  out.push_back(ordinal(4));
  out.push_back(from_children({e, one, two, singleton(two)}));
  return out;
}

Report check_cardinal_model(const std::vector<CorpusEntry>& laws, const EvalContext& ctx) {
  Report rep;
  rep.suite = "cardinal";
  rep.context = context_json(ctx);
  const auto samples = cardinal_samples();
  rep.context["samples"] = samples.size();
  for (const auto& e : laws) {
    Case c{e.id, Verdict::pass, std::nullopt, e.text, {}};
    const bool expect_false = e.tag == "false";
    try {
      const FormulaPtr phi = parse_formula(e.text, Language::arith);
      const FormulaPtr psi = translate_c({phi}).f;
      const auto fv = free_vars(phi);
      const std::vector<std::string> vars(fv.begin(), fv.end());
      CompiledArith arith(phi, Language::arith, vars, ctx);
      CompiledSet set(psi, Language::set, vars, ctx);
      for_each_assignment(samples, vars.size(), [&](const std::vector<HFSet>& vals) {
        std::vector<Code> sizes;
        for (HFSet v : vals) sizes.emplace_back(v.size());
        const bool a = arith(sizes).value;
        const bool s = set(vals).value;
        if (a == s && a != expect_false) return true;
        c.verdict = Verdict::fail;
        json ce = assignment_json(vars, vals);
        ce["arith"] = a;
        ce["cardinal"] = s;
        c.counterexample = ce;
        c.recheck = [psi, vars, vals, ctx, expect_false] {
          return eval_env(psi, vars, vals, ctx).value == expect_false;
        };
        return false;
      });
    } catch (const BudgetExceeded& err) {
      c.verdict = Verdict::budget;
      c.detail = err.what();
    } catch (const Error& err) {
      c.verdict = Verdict::fail;
      c.counterexample = json{{"error", err.what()}};
      c.recheck = [] { return true; };
    }
    rep.add(std::move(c));
  }
  return rep;
}

Report check_successor(std::uint64_t max_code) {
  Report rep;
  rep.suite = "successor";
  rep.context = {{"max_code", max_code}};
  std::vector<std::uint64_t> codes;
  for (std::uint64_t i = 0; i < max_code; ++i) codes.push_back(i);
  // Last code of each level below V_5, and its neighbours.
  for (std::uint64_t b : {0ULL, 1ULL, 2ULL, 3ULL, 4ULL, 14ULL, 15ULL, 16ULL, 65534ULL, 65535ULL, 65536ULL})
    if (b >= max_code) codes.push_back(b);

  Case enc{"encode-plus-one", Verdict::pass, std::nullopt, {}, {}};
  Case carry{"numeral-carry", Verdict::pass, std::nullopt, {}, {}};
  Case agree{"literal-carry-agreement", Verdict::pass, std::nullopt, {}, {}};
  for (std::uint64_t cv : codes) {
    const HFSet x = decode(cv);
    const HFSet s = successor_a(x);
    if (enc.verdict == Verdict::pass && encode(s) != Code{cv + 1}) {
      enc.verdict = Verdict::fail;
      enc.counterexample = json{{"x", show(x)}, {"successor", show(s)}};
      enc.recheck = [x, cv] { return encode(successor_a(x)) != Code{cv + 1}; };
    }
    if (carry.verdict == Verdict::pass) {
      const Numeral nx = numeral(x);
      const Numeral ns = numeral(s);
      std::size_t t = 0;
      while (t < nx.bits.size() && nx.bits[t]) ++t;
      bool ok = ns.bits.size() == nx.bits.size() + 1;
      for (std::size_t i = 0; ok && i < ns.bits.size(); ++i) {
        const std::uint8_t want = i < t ? 0 : i == t ? 1 : (i < nx.bits.size() ? nx.bits[i] : 0);
        ok = ns.bits[i] == want;
      }
      if (!ok) {
        carry.verdict = Verdict::fail;
        carry.counterexample = json{{"x", show(x)}, {"numeral", nx.to_string()}, {"successor", ns.to_string()}};
        carry.recheck = [x] { return numeral(successor_a(x)).bits.size() != numeral(x).bits.size() + 1; };
      }
    }
    if (agree.verdict == Verdict::pass) {
      const auto lit = rank(x) <= 3 ? successor_literal(x) : std::nullopt;
      const HFSet c = successor_carry(x);
      if (!(c == s) || (lit && !(*lit == s))) {
        agree.verdict = Verdict::fail;
        agree.counterexample = json{{"x", show(x)}, {"carry", show(c)}, {"successor", show(s)}};
        agree.recheck = [x] { return !(successor_carry(x) == successor_a(x)); };
      }
    }
  }
  rep.add(std::move(enc));
  rep.add(std::move(carry));
  rep.add(std::move(agree));
  return rep;
}

}  // namespace hf
