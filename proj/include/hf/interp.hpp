#pragma once

// The interpretation mappings between the two languages:
//   a  set -> arith   membership becomes the Ackermann bit formula
//   c  arith -> set   cardinals: = is ≃_c, < is <_c, + * exp are cadd cprod cexp
//   o  arith -> set   ordinals: < is ∈, quantifiers relativized to Ord
//   d  arith -> set   the Ack-order model: < is <_a, S + * exp are the _a operations

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "hf/ast.hpp"

namespace hf {

enum class MapTag { a, c, o, d };

struct InterpMap {
  MapTag tag;
  Language source;
  Language target;

  static InterpMap of(MapTag t);
  // Accepts a, c, o, d.
  static std::optional<InterpMap> parse(std::string_view name);
  const char* name() const noexcept;
};

// Numerals up to this value become S-chains under c, o and d; larger ones
// become set literals.
inline constexpr std::uint64_t kMaxNumeralChain = 64;

ArithFormula translate_a(const SetFormula& f);
SetFormula translate_c(const ArithFormula& f);
SetFormula translate_o(const ArithFormula& f);
SetFormula translate_d(const ArithFormula& f);

// Throws LanguageMismatch unless `lang` is the map's source language.
FormulaPtr translate(const InterpMap& m, const FormulaPtr& f, Language lang);
// m2(m1(f)). Throws LanguageMismatch unless lang = m1.source and m1.target = m2.source.
FormulaPtr compose(const InterpMap& m1, const InterpMap& m2, const FormulaPtr& f, Language lang);

// exists n < y. exists m < exp(2, x). y = exp(2, x + 1) * n + exp(2, x) + m,
// with n and m chosen outside `avoid` and the free variables of x and y.
// `corrupt` drops the exp(2, x) summand, for harness self-tests.
FormulaPtr membership_formula(const TermPtr& x, const TermPtr& y, std::set<std::string> avoid = {},
                              bool corrupt = false);

// The set-language definition of `t in Ord`: t is transitive and linearly
// ordered by membership.
FormulaPtr ordinal_definition(const TermPtr& t, std::set<std::string> avoid = {});

}  // namespace hf
