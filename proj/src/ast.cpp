#include "hf/ast.hpp"

namespace hf {

const char* language_name(Language l) noexcept { return l == Language::arith ? "arith" : "set"; }

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::var;
  t->name = std::move(name);
  return t;
}

TermPtr Term::zero() {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::zero;
  return t;
}

TermPtr Term::natural(Code n) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::nat;
  t->nat = std::move(n);
  return t;
}

TermPtr Term::literal(HFSet s) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::set_literal;
  t->set = s;
  return t;
}

TermPtr Term::app(TermKind k, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->args = std::move(args);
  return t;
}

TermPtr Term::separation(TermKind k, std::string v, TermPtr bound, FormulaPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->name = std::move(v);
  t->args = {std::move(bound)};
  t->body = std::move(body);
  return t;
}

FormulaPtr Formula::atom(FormulaKind k, TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->terms = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::in_ordinals(TermPtr t) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::in_ord;
  f->terms = {std::move(t)};
  return f;
}

FormulaPtr Formula::dom(std::string v) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::dom;
  f->var = std::move(v);
  return f;
}

FormulaPtr Formula::negation(FormulaPtr g) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::not_;
  f->subs = {std::move(g)};
  return f;
}

FormulaPtr Formula::binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->subs = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::quantifier(FormulaKind k, std::string v, BoundKind bk, TermPtr bound, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->var = std::move(v);
  f->bound_kind = bk;
  f->bound = std::move(bound);
  f->subs = {std::move(body)};
  return f;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size()) return false;
  if (a->kind == TermKind::nat && a->nat != b->nat) return false;
  if (a->kind == TermKind::set_literal && !(a->set == b->set)) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!equal(a->args[i], b->args[i])) return false;
  if (a->body || b->body) return equal(a->body, b->body);
  return true;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->var != b->var || a->bound_kind != b->bound_kind) return false;
  if (a->terms.size() != b->terms.size() || a->subs.size() != b->subs.size()) return false;
  for (std::size_t i = 0; i < a->terms.size(); ++i)
    if (!equal(a->terms[i], b->terms[i])) return false;
  for (std::size_t i = 0; i < a->subs.size(); ++i)
    if (!equal(a->subs[i], b->subs[i])) return false;
  if (a->bound || b->bound) return equal(a->bound, b->bound);
  return true;
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out);

void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (t->kind == TermKind::var) {
    if (!bound.contains(t->name)) out.insert(t->name);
    return;
  }
  if (t->kind == TermKind::sep || t->kind == TermKind::sepc) {
    collect_free(t->args[0], bound, out);
    const bool fresh = bound.insert(t->name).second;
    collect_free(t->body, bound, out);
    if (fresh) bound.erase(t->name);
    return;
  }
  for (const auto& a : t->args) collect_free(a, bound, out);
}

void collect_free(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f->kind == FormulaKind::dom) {
    if (!bound.contains(f->var)) out.insert(f->var);
    return;
  }
  for (const auto& t : f->terms) collect_free(t, bound, out);
  if (f->is_quantifier()) {
    if (f->bound) collect_free(f->bound, bound, out);
    const bool fresh = bound.insert(f->var).second;
    collect_free(f->subs[0], bound, out);
    if (fresh) bound.erase(f->var);
    return;
  }
  for (const auto& s : f->subs) collect_free(s, bound, out);
}

void collect_all(const FormulaPtr& f, std::set<std::string>& out);

void collect_all(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == TermKind::var || t->kind == TermKind::sep || t->kind == TermKind::sepc) out.insert(t->name);
  for (const auto& a : t->args) collect_all(a, out);
  if (t->body) collect_all(t->body, out);
}

void collect_all(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f->var.empty()) out.insert(f->var);
  for (const auto& t : f->terms) collect_all(t, out);
  if (f->bound) collect_all(f->bound, out);
  for (const auto& s : f->subs) collect_all(s, out);
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.contains(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

namespace {

// Renames the binder `v` when it would capture a free variable of the
// replacement, returning the (possibly renamed) binder and body.
std::pair<std::string, FormulaPtr> open_binder(const std::string& v, const FormulaPtr& body, const std::string& target,
                                               const std::set<std::string>& repl_free) {
  if (!repl_free.contains(v)) return {v, body};
  std::set<std::string> avoid = all_vars(body);
  avoid.insert(repl_free.begin(), repl_free.end());
  avoid.insert(target);
  const std::string renamed = fresh_name(v, avoid);
  return {renamed, substitute(body, v, Term::var(renamed))};
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& v, const TermPtr& replacement) {
  switch (t->kind) {
    case TermKind::var:
      return t->name == v ? replacement : t;
    case TermKind::zero:
    case TermKind::nat:
    case TermKind::set_literal:
      return t;
    case TermKind::sep:
    case TermKind::sepc: {
      TermPtr bound = substitute(t->args[0], v, replacement);
      if (t->name == v) return Term::separation(t->kind, t->name, bound, t->body);
      auto [name, body] = open_binder(t->name, t->body, v, free_vars(replacement));
      return Term::separation(t->kind, name, bound, substitute(body, v, replacement));
    }
    default: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(substitute(a, v, replacement));
      return Term::app(t->kind, std::move(args));
    }
  }
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& replacement) {
  if (!free_vars(f).contains(v)) return f;
  switch (f->kind) {
    case FormulaKind::dom: {
      if (replacement->kind == TermKind::var) return Formula::dom(replacement->name);
      // Dom holds of every element in both base languages.
      return Formula::atom(FormulaKind::eq, replacement, replacement);
    }
    case FormulaKind::in_ord:
      return Formula::in_ordinals(substitute(f->terms[0], v, replacement));
    case FormulaKind::not_:
      return Formula::negation(substitute(f->subs[0], v, replacement));
    case FormulaKind::and_:
    case FormulaKind::or_:
    case FormulaKind::implies:
      return Formula::binary(f->kind, substitute(f->subs[0], v, replacement), substitute(f->subs[1], v, replacement));
    case FormulaKind::forall:
    case FormulaKind::exists: {
      TermPtr bound = f->bound ? substitute(f->bound, v, replacement) : nullptr;
      if (f->var == v) return Formula::quantifier(f->kind, f->var, f->bound_kind, bound, f->subs[0]);
      auto [name, body] = open_binder(f->var, f->subs[0], v, free_vars(replacement));
      return Formula::quantifier(f->kind, name, f->bound_kind, bound, substitute(body, v, replacement));
    }
    default:
      return Formula::atom(f->kind, substitute(f->terms[0], v, replacement), substitute(f->terms[1], v, replacement));
  }
}

namespace {

bool term_bounded(const TermPtr& t) {
  if ((t->kind == TermKind::sep || t->kind == TermKind::sepc) && !is_bounded(t->body)) return false;
  for (const auto& a : t->args)
    if (!term_bounded(a)) return false;
  return true;
}

}  // namespace

bool is_bounded(const FormulaPtr& f) {
  for (const auto& t : f->terms)
    if (!term_bounded(t)) return false;
  if (f->is_quantifier()) {
    if (f->bound_kind == BoundKind::none || !f->bound) return false;
    if (free_vars(f->bound).contains(f->var) || !term_bounded(f->bound)) return false;
  }
  for (const auto& s : f->subs)
    if (!is_bounded(s)) return false;
  return true;
}

bool is_bounded_arith(const ArithFormula& f) { return is_bounded(f.f); }
bool is_bounded_set(const SetFormula& f) { return is_bounded(f.f); }

std::size_t size(const FormulaPtr& f) {
  std::size_t n = 1 + f->terms.size();
  for (const auto& s : f->subs) n += size(s);
  return n;
}

}  // namespace hf

namespace hf {
namespace {

struct AlphaScope {
  std::vector<std::string> left;
  std::vector<std::string> right;

  bool same_variable(const std::string& a, const std::string& b) const {
    for (std::size_t i = left.size(); i-- > 0;) {
      const bool la = left[i] == a;
      const bool rb = right[i] == b;
      if (la || rb) return la && rb;
    }
    return a == b;
  }
};

bool alpha(const FormulaPtr& a, const FormulaPtr& b, AlphaScope& sc);

bool alpha(const TermPtr& a, const TermPtr& b, AlphaScope& sc) {
  if (a->kind != b->kind || a->args.size() != b->args.size()) return false;
  switch (a->kind) {
    case TermKind::var: return sc.same_variable(a->name, b->name);
    case TermKind::nat: return a->nat == b->nat;
    case TermKind::set_literal: return a->set == b->set;
    case TermKind::sep:
    case TermKind::sepc: {
      if (!alpha(a->args[0], b->args[0], sc)) return false;
      sc.left.push_back(a->name);
      sc.right.push_back(b->name);
      const bool ok = alpha(a->body, b->body, sc);
      sc.left.pop_back();
      sc.right.pop_back();
      return ok;
    }
    default:
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!alpha(a->args[i], b->args[i], sc)) return false;
      return true;
  }
}

bool alpha(const FormulaPtr& a, const FormulaPtr& b, AlphaScope& sc) {
  if (a->kind != b->kind || a->terms.size() != b->terms.size() || a->subs.size() != b->subs.size()) return false;
  if (a->kind == FormulaKind::dom) return sc.same_variable(a->var, b->var);
  for (std::size_t i = 0; i < a->terms.size(); ++i)
    if (!alpha(a->terms[i], b->terms[i], sc)) return false;
  if (a->is_quantifier()) {
    if (a->bound_kind != b->bound_kind || !a->bound != !b->bound) return false;
    if (a->bound && !alpha(a->bound, b->bound, sc)) return false;
    sc.left.push_back(a->var);
    sc.right.push_back(b->var);
    const bool ok = alpha(a->subs[0], b->subs[0], sc);
    sc.left.pop_back();
    sc.right.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < a->subs.size(); ++i)
    if (!alpha(a->subs[i], b->subs[i], sc)) return false;
  return true;
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  AlphaScope sc;
  return alpha(a, b, sc);
}

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  AlphaScope sc;
  return alpha(a, b, sc);
}

}  // namespace hf
