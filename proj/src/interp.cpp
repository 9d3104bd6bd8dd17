#include "hf/interp.hpp"

#include "hf/errors.hpp"

namespace hf {

InterpMap InterpMap::of(MapTag t) {
  switch (t) {
    case MapTag::a: return {t, Language::set, Language::arith};
    default: return {t, Language::arith, Language::set};
  }
}

std::optional<InterpMap> InterpMap::parse(std::string_view name) {
  if (name == "a") return of(MapTag::a);
  if (name == "c") return of(MapTag::c);
  if (name == "o") return of(MapTag::o);
  if (name == "d") return of(MapTag::d);
  return std::nullopt;
}

const char* InterpMap::name() const noexcept {
  switch (tag) {
    case MapTag::a: return "a";
    case MapTag::c: return "c";
    case MapTag::o: return "o";
    case MapTag::d: return "d";
  }
  return "?";
}

namespace {

std::set<std::string> vars_of(std::initializer_list<TermPtr> ts, std::set<std::string> avoid) {
  for (const auto& t : ts) {
    auto fv = free_vars(t);
    avoid.insert(fv.begin(), fv.end());
  }
  return avoid;
}

TermPtr nat(std::uint64_t n) { return n == 0 ? Term::zero() : Term::natural(Code{n}); }

}  // namespace

FormulaPtr membership_formula(const TermPtr& x, const TermPtr& y, std::set<std::string> avoid, bool corrupt) {
  avoid = vars_of({x, y}, std::move(avoid));
  const std::string n = fresh_name("n", avoid);
  avoid.insert(n);
  const std::string m = fresh_name("m", avoid);
  const TermPtr two = nat(2);
  const TermPtr pow_x = Term::app(TermKind::exp, {two, x});
  const TermPtr pow_x1 = Term::app(TermKind::exp, {two, Term::app(TermKind::add, {x, nat(1)})});
  TermPtr rhs = Term::app(TermKind::mul, {pow_x1, Term::var(n)});
  if (!corrupt) rhs = Term::app(TermKind::add, {rhs, pow_x});
  rhs = Term::app(TermKind::add, {rhs, Term::var(m)});
  FormulaPtr body = Formula::atom(FormulaKind::eq, y, rhs);
  return Formula::quantifier(FormulaKind::exists, n, BoundKind::lt, y,
                             Formula::quantifier(FormulaKind::exists, m, BoundKind::lt, pow_x, body));
}

FormulaPtr ordinal_definition(const TermPtr& t, std::set<std::string> avoid) {
  avoid = vars_of({t}, std::move(avoid));
  const std::string u = fresh_name("u", avoid);
  avoid.insert(u);
  const std::string w = fresh_name("w", avoid);
  const TermPtr U = Term::var(u);
  const TermPtr W = Term::var(w);
  FormulaPtr transitive = Formula::quantifier(
      FormulaKind::forall, u, BoundKind::in, t,
      Formula::quantifier(FormulaKind::forall, w, BoundKind::in, U, Formula::atom(FormulaKind::mem, W, t)));
  FormulaPtr trichotomy = Formula::binary(
      FormulaKind::or_,
      Formula::binary(FormulaKind::or_, Formula::atom(FormulaKind::mem, U, W), Formula::atom(FormulaKind::eq, U, W)),
      Formula::atom(FormulaKind::mem, W, U));
  FormulaPtr linear = Formula::quantifier(FormulaKind::forall, u, BoundKind::in, t,
                                          Formula::quantifier(FormulaKind::forall, w, BoundKind::in, t, trichotomy));
  return Formula::binary(FormulaKind::and_, transitive, linear);
}

namespace {

[[noreturn]] void untranslatable(const char* map, const char* what) {
  throw Untranslatable(std::string("map ") + map + " has no clause for " + what);
}

// ---- a: set -> arith ----

FormulaPtr a_formula(const FormulaPtr& f);

TermPtr a_term(const TermPtr& t) {
  auto unary = [&](TermKind k) { return Term::app(k, {a_term(t->args[0])}); };
  auto binary = [&](TermKind k) { return Term::app(k, {a_term(t->args[0]), a_term(t->args[1])}); };
  switch (t->kind) {
    case TermKind::var: return t;
    case TermKind::zero: return Term::zero();
    case TermKind::set_literal: {
      const Code* c = t->set.code();
      if (!c) untranslatable("a", "a set literal without a code");
      return c->is_zero() ? Term::zero() : Term::natural(*c);
    }
    case TermKind::pair: return binary(TermKind::pairc);
    case TermKind::power: return unary(TermKind::pow);
    case TermKind::union_: return unary(TermKind::sumset);
    case TermKind::rank: return unary(TermKind::rankc);
    case TermKind::sep:
      return Term::separation(TermKind::sepc, t->name, a_term(t->args[0]), a_formula(t->body));
    case TermKind::succ_a:
    case TermKind::add_a:
    case TermKind::mul_a:
    case TermKind::exp_a: {
      std::vector<TermPtr> args;
      for (const auto& a : t->args) args.push_back(a_term(a));
      return Term::app(t->kind, std::move(args));
    }
    case TermKind::csucc:
    case TermKind::osucc: {
      // x ∪ {x} = U(pair(x, pair(x, x))).
      const TermPtr x = a_term(t->args[0]);
      return Term::app(TermKind::sumset, {Term::app(TermKind::pairc, {x, Term::app(TermKind::pairc, {x, x})})});
    }
    case TermKind::cadd: untranslatable("a", "cadd");
    case TermKind::cprod: untranslatable("a", "cprod");
    case TermKind::cexp: untranslatable("a", "cexp");
    case TermKind::oadd: untranslatable("a", "oadd");
    case TermKind::omul: untranslatable("a", "omul");
    case TermKind::oexp: untranslatable("a", "oexp");
    default: throw LanguageMismatch("map a expects a set-language term");
  }
}

FormulaPtr a_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::mem:
      return membership_formula(a_term(f->terms[0]), a_term(f->terms[1]));
    case FormulaKind::eq:
    case FormulaKind::less_a:
      return Formula::atom(f->kind, a_term(f->terms[0]), a_term(f->terms[1]));
    case FormulaKind::in_ord:
      return a_formula(ordinal_definition(f->terms[0]));
    case FormulaKind::dom: return f;
    case FormulaKind::card_eq: untranslatable("a", "≃_c");
    case FormulaKind::card_lt: untranslatable("a", "<_c");
    case FormulaKind::card_le: untranslatable("a", "<=_c");
    case FormulaKind::lt: throw LanguageMismatch("map a expects a set-language formula");
    case FormulaKind::not_: return Formula::negation(a_formula(f->subs[0]));
    case FormulaKind::and_:
    case FormulaKind::or_:
    case FormulaKind::implies:
      return Formula::binary(f->kind, a_formula(f->subs[0]), a_formula(f->subs[1]));
    case FormulaKind::forall:
    case FormulaKind::exists: {
      FormulaPtr body = a_formula(f->subs[0]);
      switch (f->bound_kind) {
        case BoundKind::none: return Formula::quantifier(f->kind, f->var, BoundKind::none, nullptr, body);
        case BoundKind::lt_a: return Formula::quantifier(f->kind, f->var, BoundKind::lt_a, a_term(f->bound), body);
        case BoundKind::in: {
          const TermPtr bound = a_term(f->bound);
          FormulaPtr guard = membership_formula(Term::var(f->var), bound, all_vars(body));
          const FormulaKind conn = f->kind == FormulaKind::forall ? FormulaKind::implies : FormulaKind::and_;
          return Formula::quantifier(f->kind, f->var, BoundKind::lt, bound, Formula::binary(conn, guard, body));
        }
        case BoundKind::lt: throw LanguageMismatch("map a expects set-language bounds");
      }
    }
  }
  throw LanguageMismatch("map a: unexpected formula");
}

// ---- arith -> set maps share their connective and quantifier clauses ----

enum class Target { c, o, d };

struct ArithToSet {
  Target target;

  const char* name() const { return target == Target::c ? "c" : target == Target::o ? "o" : "d"; }

  TermPtr numeral(const Code& n) const {
    const auto small = n.to_u64();
    if (small && *small <= kMaxNumeralChain) {
      const TermKind succ = target == Target::c ? TermKind::csucc : target == Target::o ? TermKind::osucc : TermKind::succ_a;
      TermPtr t = Term::zero();
      for (std::uint64_t i = 0; i < *small; ++i) t = Term::app(succ, {t});
      return t;
    }
    if (target == Target::d) return Term::literal(decode(n));
    if (!small) untranslatable(name(), "a numeral beyond 64 bits");
    return Term::literal(ordinal(*small));
  }

  TermPtr term(const TermPtr& t) const {
    auto map_args = [&](TermKind k) {
      std::vector<TermPtr> args;
      for (const auto& a : t->args) args.push_back(term(a));
      return Term::app(k, std::move(args));
    };
    switch (t->kind) {
      case TermKind::var: return t;
      case TermKind::zero: return Term::zero();
      case TermKind::nat: return numeral(t->nat);
      case TermKind::succ:
        return map_args(target == Target::c ? TermKind::csucc : target == Target::o ? TermKind::osucc : TermKind::succ_a);
      case TermKind::add:
        return map_args(target == Target::c ? TermKind::cadd : target == Target::o ? TermKind::oadd : TermKind::add_a);
      case TermKind::mul:
        return map_args(target == Target::c ? TermKind::cprod : target == Target::o ? TermKind::omul : TermKind::mul_a);
      case TermKind::exp:
        return map_args(target == Target::c ? TermKind::cexp : target == Target::o ? TermKind::oexp : TermKind::exp_a);
      default: break;
    }
    if (target != Target::d) untranslatable(name(), "code-level defined symbols");
    switch (t->kind) {
      case TermKind::pow: return map_args(TermKind::power);
      case TermKind::sumset: return map_args(TermKind::union_);
      case TermKind::pairc: return map_args(TermKind::pair);
      case TermKind::rankc: return map_args(TermKind::rank);
      case TermKind::sepc: return Term::separation(TermKind::sep, t->name, term(t->args[0]), formula(t->body));
      case TermKind::succ_a:
      case TermKind::add_a:
      case TermKind::mul_a:
      case TermKind::exp_a: return map_args(t->kind);
      default: throw LanguageMismatch(std::string("map ") + name() + " expects an arithmetic term");
    }
  }

  FormulaPtr formula(const FormulaPtr& f) const {
    switch (f->kind) {
      case FormulaKind::eq:
        return Formula::atom(target == Target::c ? FormulaKind::card_eq : FormulaKind::eq, term(f->terms[0]),
                             term(f->terms[1]));
      case FormulaKind::lt: {
        const FormulaKind k =
            target == Target::c ? FormulaKind::card_lt : target == Target::o ? FormulaKind::mem : FormulaKind::less_a;
        return Formula::atom(k, term(f->terms[0]), term(f->terms[1]));
      }
      case FormulaKind::less_a:
        if (target != Target::d) untranslatable(name(), "<_a");
        return Formula::atom(FormulaKind::less_a, term(f->terms[0]), term(f->terms[1]));
      case FormulaKind::dom:
        if (target == Target::o) return Formula::in_ordinals(Term::var(f->var));
        return f;
      case FormulaKind::not_: return Formula::negation(formula(f->subs[0]));
      case FormulaKind::and_:
      case FormulaKind::or_:
      case FormulaKind::implies:
        return Formula::binary(f->kind, formula(f->subs[0]), formula(f->subs[1]));
      case FormulaKind::forall:
      case FormulaKind::exists: return quantifier(f);
      default: throw LanguageMismatch(std::string("map ") + name() + " expects an arithmetic formula");
    }
  }

  FormulaPtr quantifier(const FormulaPtr& f) const {
    FormulaPtr body = formula(f->subs[0]);
    const bool all = f->kind == FormulaKind::forall;
    const FormulaKind conn = all ? FormulaKind::implies : FormulaKind::and_;
    const TermPtr v = Term::var(f->var);
    if (f->bound_kind == BoundKind::lt_a && target != Target::d) untranslatable(name(), "<_a bounds");
    switch (target) {
      case Target::d: {
        if (f->bound_kind == BoundKind::none) return Formula::quantifier(f->kind, f->var, BoundKind::none, nullptr, body);
        return Formula::quantifier(f->kind, f->var, BoundKind::lt_a, term(f->bound), body);
      }
      case Target::c: {
        if (f->bound_kind == BoundKind::none) return Formula::quantifier(f->kind, f->var, BoundKind::none, nullptr, body);
        FormulaPtr guard = Formula::atom(FormulaKind::card_lt, v, term(f->bound));
        return Formula::quantifier(f->kind, f->var, BoundKind::none, nullptr, Formula::binary(conn, guard, body));
      }
      case Target::o: {
        FormulaPtr relativized = Formula::binary(conn, Formula::in_ordinals(v), body);
        if (f->bound_kind == BoundKind::none)
          return Formula::quantifier(f->kind, f->var, BoundKind::none, nullptr, relativized);
        return Formula::quantifier(f->kind, f->var, BoundKind::in, term(f->bound), relativized);
      }
    }
    return body;
  }
};

}  // namespace

ArithFormula translate_a(const SetFormula& f) { return {a_formula(f.f)}; }
SetFormula translate_c(const ArithFormula& f) { return {ArithToSet{Target::c}.formula(f.f)}; }
SetFormula translate_o(const ArithFormula& f) { return {ArithToSet{Target::o}.formula(f.f)}; }
SetFormula translate_d(const ArithFormula& f) { return {ArithToSet{Target::d}.formula(f.f)}; }

FormulaPtr translate(const InterpMap& m, const FormulaPtr& f, Language lang) {
  if (lang != m.source)
    throw LanguageMismatch(std::string("map ") + m.name() + " translates " + language_name(m.source) +
                           " formulas, not " + language_name(lang));
  switch (m.tag) {
    case MapTag::a: return translate_a({f}).f;
    case MapTag::c: return translate_c({f}).f;
    case MapTag::o: return translate_o({f}).f;
    case MapTag::d: return translate_d({f}).f;
  }
  return f;
}

FormulaPtr compose(const InterpMap& m1, const InterpMap& m2, const FormulaPtr& f, Language lang) {
  if (m1.target != m2.source)
    throw LanguageMismatch(std::string("map ") + m1.name() + " produces " + language_name(m1.target) +
                           " formulas but map " + m2.name() + " consumes " + language_name(m2.source));
  return translate(m2, translate(m1, f, lang), m1.target);
}

}  // namespace hf
