#pragma once

// Terms and formulas of the arithmetic language (0, S, +, *, exp, <) and the
// set language (in, =, 0e, pair, P, U, R, sep), plus the defined symbols the
// interpretations introduce. Both languages share one immutable node type;
// the Language tag decides how a node is printed, parsed and evaluated.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hf/code.hpp"
#include "hf/set.hpp"

namespace hf {

enum class Language { arith, set };

const char* language_name(Language l) noexcept;

enum class TermKind {
  var,
  zero,         // 0 / 0e
  nat,          // decimal numeral (arith)
  set_literal,  // #n or {...} (set)
  // Arithmetic primitives.
  succ,
  add,
  mul,
  exp,
  // Code-level defined symbols (arith).
  pow,
  sumset,
  pairc,
  rankc,
  sepc,
  // Set primitives.
  pair,
  power,
  union_,
  rank,
  sep,
  // The _a operations; valid in both languages.
  succ_a,
  add_a,
  mul_a,
  exp_a,
  // Cardinal and ordinal operations (set).
  csucc,
  cadd,
  cprod,
  cexp,
  osucc,
  oadd,
  omul,
  oexp,
};

enum class FormulaKind {
  eq,
  lt,        // < (arith)
  less_a,    // <_a
  mem,       // in (set)
  card_eq,   // ≃_c
  card_lt,   // <_c
  card_le,   // <=_c
  in_ord,    // t in Ord
  dom,       // Dom(v)
  not_,
  and_,
  or_,
  implies,
  forall,
  exists,
};

// none: unbounded. lt: `< t`. lt_a: `<_a t`. in: `in t`.
enum class BoundKind { none, lt, lt_a, in };

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Term {
  TermKind kind;
  std::string name;  // var name, or the bound variable of sep/sepc
  Code nat;
  HFSet set;
  std::vector<TermPtr> args;  // sep/sepc: args[0] is the bound term
  FormulaPtr body;            // sep/sepc

  static TermPtr var(std::string name);
  static TermPtr zero();
  static TermPtr natural(Code n);
  static TermPtr literal(HFSet s);
  static TermPtr app(TermKind k, std::vector<TermPtr> args);
  static TermPtr separation(TermKind k, std::string v, TermPtr bound, FormulaPtr body);
};

struct Formula {
  FormulaKind kind;
  std::vector<TermPtr> terms;      // atoms
  std::vector<FormulaPtr> subs;    // connectives, quantifier body
  std::string var;                 // quantifier variable, Dom argument
  BoundKind bound_kind = BoundKind::none;
  TermPtr bound;

  static FormulaPtr atom(FormulaKind k, TermPtr a, TermPtr b);
  static FormulaPtr in_ordinals(TermPtr t);
  static FormulaPtr dom(std::string v);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b);
  static FormulaPtr quantifier(FormulaKind k, std::string v, BoundKind bk, TermPtr bound, FormulaPtr body);

  bool is_quantifier() const noexcept { return kind == FormulaKind::forall || kind == FormulaKind::exists; }
  bool is_atom() const noexcept { return kind <= FormulaKind::dom; }
};

// Language-tagged wrappers for the translation signatures.
struct ArithFormula {
  FormulaPtr f;
};
struct SetFormula {
  FormulaPtr f;
};

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_vars(const TermPtr& t);
std::set<std::string> free_vars(const FormulaPtr& f);
// Every variable name occurring anywhere, bound or free.
std::set<std::string> all_vars(const FormulaPtr& f);
// A name based on `base` outside `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Capture-avoiding: bound variables that occur free in `replacement` are
// renamed first.
TermPtr substitute(const TermPtr& t, const std::string& v, const TermPtr& replacement);
FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& replacement);

// Every quantifier carries a bound term not mentioning its own variable.
bool is_bounded(const FormulaPtr& f);
bool is_bounded_arith(const ArithFormula& f);
bool is_bounded_set(const SetFormula& f);

// Number of nodes, for diagnostics and generators.
std::size_t size(const FormulaPtr& f);

// Structural equality up to renaming of bound variables.
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);
bool alpha_equal(const TermPtr& a, const TermPtr& b);

}  // namespace hf
