// hf: encode, decode, translate, evaluate and verify.
//
// Exit status: 0 success / all pass, 1 false verdict or failing case,
// 2 budget exhausted, 64 usage or syntax error, 65 language mismatch.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hf/corpus.hpp"
#include "hf/literal.hpp"
#include "hf/syntax.hpp"
#include "hf/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitMismatch = 65;

struct Options {
  std::string format = "human";
  bool no_timestamp = false;
  std::uint64_t nat_cutoff = 256;
  std::uint64_t set_cutoff = 256;
  std::size_t code_budget = std::size_t{1} << 20;
  std::string mode = "fast";
  std::uint64_t literal_cutoff = 64;

  std::string literal;
  std::string number;

  std::string map;
  std::string formula;
  bool arith = false;
  bool set = false;
  std::vector<std::string> bindings;

  std::string suite;
  std::uint64_t max_code = 4096;
  std::string corpus;
  bool corrupt_successor = false;
  bool corrupt_bit_formula = false;
};

hf::EvalContext make_context(const Options& o) {
  hf::EvalContext ctx;
  ctx.nat_cutoff = o.nat_cutoff;
  ctx.set_cutoff = o.set_cutoff;
  ctx.code_budget = o.code_budget;
  ctx.literal_cutoff = o.literal_cutoff;
  ctx.arith_mode = o.mode == "literal" ? hf::ArithMode::Kind::literal : hf::ArithMode::Kind::fast;
  ctx.corrupt_successor = o.corrupt_successor;
  ctx.corrupt_bit_formula = o.corrupt_bit_formula;
  return ctx;
}

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& human) {
  if (json_out(o))
    std::cout << j.dump(2) << '\n';
  else
    std::cout << human << '\n';
}

int fail_with(const Options& o, int code, const std::string& kind, const std::string& what) {
  if (json_out(o))
    std::cout << json{{"error", kind}, {"message", what}, {"exit", code}}.dump(2) << '\n';
  else
    std::cerr << "hf: " << kind << ": " << what << '\n';
  return code;
}

int cmd_encode(const Options& o) {
  const hf::HFSet x = hf::parse_set_literal(o.literal);
  const hf::Code c = hf::encode(x, {o.code_budget, hf::Limits{}.max_members});
  emit(o, json{{"code", c.to_decimal()}}, c.to_decimal());
  return 0;
}

int cmd_decode(const Options& o) {
  hf::Code n;
  try {
    n = hf::Code::from_decimal(o.number);
  } catch (const std::invalid_argument&) {
    throw hf::SyntaxError("expected a natural number", 0);
  }
  const std::string s = hf::print_set_literal(hf::decode(n, {o.code_budget, hf::Limits{}.max_members}));
  emit(o, json{{"set", s}}, s);
  return 0;
}

hf::Language other(hf::Language l) { return l == hf::Language::arith ? hf::Language::set : hf::Language::arith; }

// Parses in `lang`; a formula that only parses in the other language is a
// mismatch rather than a syntax error.
hf::FormulaPtr parse_in(const std::string& text, hf::Language lang) {
  try {
    return hf::parse_formula(text, lang);
  } catch (const hf::SyntaxError&) {
    try {
      hf::parse_formula(text, other(lang));
    } catch (const hf::SyntaxError&) {
      throw;
    }
    throw hf::LanguageMismatch(std::string("formula is in the ") + hf::language_name(other(lang)) +
                               " language");
  }
}

int cmd_translate(const Options& o) {
  const auto m = hf::InterpMap::parse(o.map);
  if (!m) return fail_with(o, kExitUsage, "usage", "unknown map '" + o.map + "' (expected a, c, o or d)");
  const hf::FormulaPtr f = parse_in(o.formula, m->source);
  const hf::FormulaPtr t = hf::translate(*m, f, m->source);
  const std::string text = hf::print(t, m->target);
  emit(o, json{{"map", m->name()}, {"language", hf::language_name(m->target)}, {"formula", text}}, text);
  return 0;
}

std::pair<std::string, std::string> split_binding(const std::string& b) {
  const auto eq = b.find('=');
  if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("binding", "expected name=value, got '" + b + "'");
  return {b.substr(0, eq), b.substr(eq + 1)};
}

int cmd_eval(const Options& o) {
  if (o.arith == o.set) return fail_with(o, kExitUsage, "usage", "pass exactly one of --arith or --set");
  const hf::Language lang = o.arith ? hf::Language::arith : hf::Language::set;
  const hf::EvalContext ctx = make_context(o);
  const hf::FormulaPtr f = parse_in(o.formula, lang);
  hf::EvalResult r;
  if (lang == hf::Language::arith) {
    hf::ArithEnv env;
    for (const auto& b : o.bindings) {
      auto [k, v] = split_binding(b);
      try {
        env[k] = hf::Code::from_decimal(v);
      } catch (const std::invalid_argument&) {
        throw hf::SyntaxError("binding " + k + " is not a natural number", 0);
      }
    }
    r = hf::eval_arith({f}, env, ctx);
  } else {
    hf::SetEnv env;
    for (const auto& b : o.bindings) {
      auto [k, v] = split_binding(b);
      env[k] = hf::parse_set_literal(v);
    }
    r = hf::eval_set({f}, env, ctx);
  }
  std::string text = r.value ? "true" : "false";
  const std::uint64_t cutoff = lang == hf::Language::arith ? ctx.nat_cutoff : ctx.set_cutoff;
  if (r.at_cutoff) text += " at cutoff " + std::to_string(cutoff);
  json j{{"verdict", r.value}, {"at_cutoff", r.at_cutoff}};
  j["context"] = {{"language", hf::language_name(lang)},
                  {"nat_cutoff", ctx.nat_cutoff},
                  {"set_cutoff", ctx.set_cutoff},
                  {"code_budget", ctx.code_budget},
                  {"arith_mode", o.mode}};
  emit(o, j, text);
  return r.value ? 0 : kExitFail;
}

std::vector<hf::CorpusEntry> corpus_or(const Options& o, const char* name) {
  return hf::load_corpus(o.corpus.empty() ? hf::corpus_file(name) : std::filesystem::path(o.corpus));
}

hf::Report run_suite(const std::string& suite, const Options& o, const hf::EvalContext& ctx) {
  using hf::InterpMap;
  using hf::MapTag;
  if (suite == "axioms") return hf::check_axioms(ctx, corpus_or(o, "separation.txt"));
  if (suite == "opei") return hf::check_opei(corpus_or(o, "opei.txt"), ctx);
  if (suite == "theorem6") return hf::check_theorem6(ctx, o.max_code);
  if (suite == "roundtrip-ad")
    return hf::check_roundtrip(corpus_or(o, "set.txt"), InterpMap::of(MapTag::a), InterpMap::of(MapTag::d), ctx);
  if (suite == "roundtrip-da")
    return hf::check_roundtrip(corpus_or(o, "arith.txt"), InterpMap::of(MapTag::d), InterpMap::of(MapTag::a), ctx);
  if (suite == "roundtrip-oa")
    return hf::check_roundtrip(corpus_or(o, "arith.txt"), InterpMap::of(MapTag::o), InterpMap::of(MapTag::a), ctx);
  if (suite == "cardinal") return hf::check_cardinal_model(corpus_or(o, "cardinal_laws.txt"), ctx);
  if (suite == "successor") return hf::check_successor(o.max_code);
  hf::Report all;
  all.suite = "all";
  for (const char* s : {"axioms", "opei", "theorem6", "roundtrip-ad", "roundtrip-da", "cardinal"}) {
    Options sub = o;
    sub.corpus.clear();
    all.merge(run_suite(s, sub, ctx));
  }
  return all;
}

int cmd_verify(const Options& o) {
  const hf::Report rep = run_suite(o.suite, o, make_context(o));
  if (json_out(o))
    std::cout << rep.to_json(!o.no_timestamp).dump(2) << '\n';
  else
    std::cout << rep.to_human();
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hereditarily finite sets, the Ackermann coding and the interpretations between arithmetic and set theory"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));

  auto add_context = [&](CLI::App* sub) {
    sub->add_option("--nat-cutoff", o.nat_cutoff, "Range of unbounded arithmetic quantifiers")
        ->check(CLI::PositiveNumber);
    sub->add_option("--set-cutoff", o.set_cutoff, "Range of unbounded set quantifiers (codes)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--code-budget", o.code_budget, "Maximum code bit length")->check(CLI::PositiveNumber);
    sub->add_option("--mode", o.mode, "Mode of the _a operations")->check(CLI::IsMember({"fast", "literal"}));
    sub->add_option("--literal-cutoff", o.literal_cutoff, "Largest code handled literally");
  };

  auto* enc = app.add_subcommand("encode", "Print the code of a set literal");
  enc->add_option("set", o.literal, "Set literal, e.g. {{}}")->required();
  auto* dec = app.add_subcommand("decode", "Print the set with the given code");
  dec->add_option("code", o.number, "Natural number")->required();

  auto* tr = app.add_subcommand("translate", "Translate a formula along an interpretation");
  tr->add_option("--map", o.map, "a, c, o or d")->required();
  tr->add_option("formula", o.formula, "Formula in the map's source language")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a formula");
  ev->add_flag("--arith", o.arith, "Arithmetic language");
  ev->add_flag("--set", o.set, "Set language");
  ev->add_option("formula", o.formula, "Formula")->required();
  ev->add_option("-b,--bind", o.bindings, "Binding name=value (#n or a set literal for sets)");
  add_context(ev);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", o.suite, "Suite")
      ->required()
      ->check(CLI::IsMember(
          {"axioms", "opei", "theorem6", "roundtrip-ad", "roundtrip-da", "roundtrip-oa", "cardinal", "successor", "all"}));
  ver->add_option("--max-code", o.max_code, "Code bound for theorem6 and successor")->check(CLI::PositiveNumber);
  ver->add_option("--corpus", o.corpus, "Corpus file replacing the shipped one");
  ver->add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp from JSON output");
  ver->add_flag("--corrupt-successor", o.corrupt_successor, "Fault injection: S_a(0) is wrong");
  ver->add_flag("--corrupt-bit-formula", o.corrupt_bit_formula, "Fault injection: drop a summand of the bit formula");
  add_context(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enc) return cmd_encode(o);
    if (*dec) return cmd_decode(o);
    if (*tr) return cmd_translate(o);
    if (*ev) return cmd_eval(o);
    return cmd_verify(o);
  } catch (const hf::SyntaxError& e) {
    return fail_with(o, kExitUsage, "syntax error", e.what());
  } catch (const hf::UnboundVariable& e) {
    return fail_with(o, kExitUsage, "unbound variable", e.what());
  } catch (const CLI::ValidationError& e) {
    return fail_with(o, kExitUsage, "usage", e.what());
  } catch (const hf::LanguageMismatch& e) {
    return fail_with(o, kExitMismatch, "language mismatch", e.what());
  } catch (const hf::BudgetExceeded& e) {
    return fail_with(o, kExitBudget, "budget exceeded", e.what());
  } catch (const std::exception& e) {
    return fail_with(o, kExitUsage, "error", e.what());
  }
}
