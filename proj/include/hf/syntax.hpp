#pragma once

// Concrete syntax for both languages.
//
//   arith terms   0 | n | x | S(t) | t + t | t * t | exp(t, t) | (t)
//                 pow(t) | sumset(t) | pairc(t, t) | rankc(t) | sepc(v in t, φ)
//   set terms     0e | x | #n | {…} | pair(t, t) | P(t) | U(t) | R(t) | sep(v in t, φ)
//                 csucc(t) | cadd(t, t) | cprod(t, t) | cexp(t, t)
//                 osucc(t) | oadd(t, t) | omul(t, t) | oexp(t, t)
//   both          Sa(t) | add_a(t, t) | mul_a(t, t) | exp_a(t, t)
//   atoms         t = t | t <_a t | Dom(v)
//                 arith: t < t      set: t in t | t in Ord | t ≃_c t | t <_c t | t <=_c t
//   formulas      !φ | φ & φ | φ | φ | φ -> φ | (φ)
//                 forall v [bound]. φ | exists v [bound]. φ
//   bounds        arith: < t | <_a t      set: in t | <_a t
//
// `!` binds tightest, then `&`, `|`, and `->` (right associative); a
// quantifier body extends as far right as possible. `~_c` is accepted for
// `≃_c`, and ¬ ∧ ∨ → ∀ ∃ ∈ for their ASCII forms.

#include <string>
#include <string_view>

#include "hf/ast.hpp"

namespace hf {

// Throw SyntaxError with the byte offset of the problem.
FormulaPtr parse_formula(std::string_view src, Language lang);
TermPtr parse_term(std::string_view src, Language lang);
ArithFormula parse_arith(std::string_view src);
SetFormula parse_set(std::string_view src);

std::string print(const FormulaPtr& f, Language lang);
std::string print(const TermPtr& t, Language lang);
inline std::string print(const ArithFormula& f) { return print(f.f, Language::arith); }
inline std::string print(const SetFormula& f) { return print(f.f, Language::set); }

}  // namespace hf
